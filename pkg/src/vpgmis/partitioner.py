"""Rescaling, dyadic length buckets, grid boxes and residue classes.

A :class:`ScaledInstance` keeps its coordinates as integer numerators over a
per-axis denominator (``x = num / den_x``), so bucket and box membership are
integer floor divisions and stay exact at every boundary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from . import kernels
from .errors import ContractError
from .geometry import IntColumns, LShape, ShapeClass, integerize

EQUILATERAL = "equilateral"
GENERAL = "general"


@dataclass(frozen=True, order=True)
class ClassKey:
    """One residue class: orientation, length buckets and box residues."""

    shape_class: ShapeClass
    i: int  # horizontal bucket: 2**i <= arm < 2**(i+1)
    j: int  # vertical bucket; equals i in equilateral mode
    k_r: int
    k_c: int
    modulus: int

    def __str__(self) -> str:
        return (
            f"{self.shape_class.name}:i={self.i},j={self.j},"
            f"k_r={self.k_r},k_c={self.k_c},mod={self.modulus}"
        )


class BoxIndex(NamedTuple):
    r: int
    c: int


class ScaledInstance:
    """Translated and rescaled shapes, stored as integer numerators.

    Scaled x coordinates are ``xc[k] / den_x`` etc.  After rescaling the
    smallest corner x and y are 0 and the shortest arm (per axis in general
    mode) has length exactly 2.
    """

    def __init__(self, xc, yc, xh, yv, den_x, den_y, scale_x, scale_y, translation,
                 original_indices, mode, shape_class=ShapeClass.L1):
        self.xc: list[int] = xc
        self.yc: list[int] = yc
        self.xh: list[int] = xh
        self.yv: list[int] = yv
        self.den_x: int = den_x
        self.den_y: int = den_y
        self.scale_x: Fraction = scale_x
        self.scale_y: Fraction = scale_y
        self.translation: tuple[Fraction, Fraction] = translation
        self.original_indices: tuple[int, ...] = tuple(original_indices)
        self.mode: str = mode
        self.shape_class: ShapeClass = shape_class

    def __len__(self) -> int:
        return len(self.xc)

    @cached_property
    def shapes(self) -> tuple[LShape, ...]:
        dx, dy = self.den_x, self.den_y
        return tuple(
            LShape(Fraction(a, dx), Fraction(b, dy), Fraction(c, dx), Fraction(d, dy))
            for a, b, c, d in zip(self.xc, self.yc, self.xh, self.yv)
        )

    def horizontal_arm(self, k: int) -> Fraction:
        return Fraction(abs(self.xh[k] - self.xc[k]), self.den_x)

    def vertical_arm(self, k: int) -> Fraction:
        return Fraction(abs(self.yv[k] - self.yc[k]), self.den_y)

    def buckets(self, k: int) -> tuple[int, int]:
        """Dyadic buckets ``(i, j)`` of the horizontal and vertical arm of shape ``k``."""
        i = (abs(self.xh[k] - self.xc[k]) // self.den_x).bit_length() - 1
        j = (abs(self.yv[k] - self.yc[k]) // self.den_y).bit_length() - 1
        return i, j

    def box(self, k: int, i: int, j: int) -> BoxIndex:
        """Half-open box of shape ``k``'s corner on the ``2**i x 2**j`` grid."""
        return BoxIndex(self.yc[k] // (self.den_y << j), self.xc[k] // (self.den_x << i))

    @cached_property
    def cells(self) -> tuple[list[int], list[int], list[int], list[int]]:
        """Columns ``(i, j, r, c)``: buckets (tied in equilateral mode) and box of every shape.

        Raises :class:`ContractError` unless every shape is of class L1 with
        both arms at least 2.
        """
        for k in range(len(self.xc)):
            if self.xh[k] - self.xc[k] < 2 * self.den_x or self.yv[k] - self.yc[k] < 2 * self.den_y:
                raise ContractError(f"shape {k} is not an L1 shape with arms of length 2 or more")
        return kernels.grid_cells(self.xc, self.yc, self.xh, self.yv, self.den_x, self.den_y,
                                  self.mode == EQUILATERAL)


def rescale(shapes: Sequence[LShape], mode: str = EQUILATERAL, original_indices: Sequence[int] | None = None,
            shape_class: ShapeClass = ShapeClass.L1) -> ScaledInstance:
    """Translate the lowest corner coordinates to 0 and stretch the shortest arm to 2.

    Equilateral mode uses one factor for both axes; general mode stretches
    each axis independently.  Positive axis scalings and translations leave
    the intersection graph unchanged.
    """
    if not shapes:
        raise ContractError("cannot rescale an empty instance")
    return rescale_columns(integerize(shapes), mode, original_indices, shape_class)


def rescale_columns(cols: IntColumns, mode: str = EQUILATERAL, original_indices: Sequence[int] | None = None,
                    shape_class: ShapeClass = ShapeClass.L1) -> ScaledInstance:
    """:func:`rescale` for shapes already in integer form."""
    scale, xc, yc, xh, yv = cols
    if not xc:
        raise ContractError("cannot rescale an empty instance")
    if mode not in (EQUILATERAL, GENERAL):
        raise ContractError(f"unknown mode {mode!r}")
    arms_x = [abs(b - a) for a, b in zip(xc, xh)]
    arms_y = [abs(b - a) for a, b in zip(yc, yv)]
    if mode == EQUILATERAL:
        if arms_x != arms_y:
            bad = next(k for k, (p, q) in enumerate(zip(arms_x, arms_y)) if p != q)
            raise ContractError(f"shape {bad} is not equilateral")
        min_x = min_y = min(arms_x)
    else:
        min_x, min_y = min(arms_x), min(arms_y)
    tx, ty = min(xc), min(yc)
    if original_indices is None:
        original_indices = range(len(xc))
    return ScaledInstance(
        xc=[2 * (v - tx) for v in xc],
        yc=[2 * (v - ty) for v in yc],
        xh=[2 * (v - tx) for v in xh],
        yv=[2 * (v - ty) for v in yv],
        den_x=min_x,
        den_y=min_y,
        scale_x=Fraction(2 * scale, min_x),
        scale_y=Fraction(2 * scale, min_y),
        translation=(Fraction(tx, scale), Fraction(ty, scale)),
        original_indices=original_indices,
        mode=mode,
        shape_class=shape_class,
    )


def length_bucket(le) -> int:
    """The unique ``i >= 1`` with ``2**i <= le < 2**(i+1)``."""
    le = Fraction(le)
    if le < 2:
        raise ContractError(f"length {le} is below 2; rescale first")
    return math.floor(le).bit_length() - 1


def box_index(l: LShape, cell_w, cell_h) -> BoxIndex:
    """Box containing the corner of ``l``; top and right box edges are excluded."""
    if l.x_c < 0 or l.y_c < 0:
        raise ContractError("corner must lie in the non-negative quadrant")
    cell_w, cell_h = Fraction(cell_w), Fraction(cell_h)
    return BoxIndex(math.floor(l.y_c / cell_h), math.floor(l.x_c / cell_w))


def partition(inst: ScaledInstance, mode: str | None = None, modulus: int = 3) -> dict[ClassKey, list[int]]:
    """Split the instance into residue classes.

    Boxes are ``2**i x 2**j`` cells for bucket pair ``(i, j)``; a shape joins
    class ``(i, j, r mod m, c mod m)`` for its box ``(r, c)``.  With modulus 2
    every arm must share one length (per axis), which after rescaling makes
    the single bucket's cells exactly as long as the arms.

    Returns positions into ``inst`` grouped by key, keys in sorted order.
    """
    mode = mode or inst.mode
    if modulus not in (2, 3):
        raise ContractError(f"modulus must be 2 or 3, not {modulus}")
    if mode != inst.mode:
        raise ContractError(f"instance was rescaled in {inst.mode} mode, not {mode}")
    xc, yc, xh, yv = inst.xc, inst.yc, inst.xh, inst.yv
    bad = next((k for k in range(len(inst)) if xh[k] <= xc[k] or yv[k] <= yc[k]), None)
    if bad is not None:
        raise ContractError(f"shape {bad} is not of class L1")
    if modulus == 2:
        if len({b - a for a, b in zip(xc, xh)}) > 1 or len({b - a for a, b in zip(yc, yv)}) > 1:
            raise ContractError("modulus 2 requires uniform arm lengths")
    groups: dict[tuple[int, int, int, int], list[int]] = {}
    ii, jj, rr, cc = inst.cells
    for k, cell in enumerate(zip(ii, jj, [r % modulus for r in rr], [c % modulus for c in cc])):
        group = groups.get(cell)
        if group is None:
            groups[cell] = [k]
        else:
            group.append(k)
    return {ClassKey(inst.shape_class, *cell, modulus): groups[cell] for cell in sorted(groups)}
