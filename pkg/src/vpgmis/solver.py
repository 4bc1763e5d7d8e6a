"""Approximate MIS for L-shape intersection graphs by grid partitioning.

Every variant follows the same pipeline: split the shapes by orientation,
rotate each group onto L1, rescale, partition into residue classes, solve
every class exactly (boxes of one class are pairwise independent and each
box is a crossing family), and return the largest class solution.

======================  ==========================  ===========================
variant                 applies to                  guaranteed factor
======================  ==========================  ===========================
``EquilateralTh1``      equal arms per shape        36 * floor(log2 2d)
``GeneralTh3``          any shapes                  36 * floor(log2 2d_x) * floor(log2 2d_y)
``UniformEqCor1``       one common arm length       16
``UniformGenCor2``      one length per axis         16
======================  ==========================  ===========================
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import kernels
from .errors import ContractError
from .geometry import TURNS_TO_L1, Instance, IntColumns, LShape, ShapeClass, as_instance
from .partitioner import EQUILATERAL, GENERAL, ClassKey, ScaledInstance, partition, rescale_columns

Shapes = Union[Instance, Iterable[LShape]]


class Variant(enum.Enum):
    EquilateralTh1 = "EquilateralTh1"
    GeneralTh3 = "GeneralTh3"
    UniformEqCor1 = "UniformEqCor1"
    UniformGenCor2 = "UniformGenCor2"
    ClassExact = "ClassExact"
    BruteForce = "BruteForce"


@dataclass(frozen=True)
class Solution:
    indices: tuple[int, ...]  # sorted original instance indices
    variant: Variant
    winning_class: Optional[ClassKey]
    guaranteed_factor: Fraction

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def size(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class ClassResult:
    key: ClassKey
    members: tuple[int, ...]  # original indices of the class
    solution: Solution


def _rank(result: ClassResult):
    # larger first, then smallest key, then smallest index set
    return (-len(result.solution), result.key, result.solution.indices)


def solve_class_exact(members: Sequence[int], key: ClassKey, inst: ScaledInstance) -> Solution:
    """Exact MIS of the shapes ``inst[members]``, which must all lie in class ``key``.

    Shapes are grouped by box; box ``(r, c)`` crosses ``x = (c+1) * cell_w``
    and ``y = (r+1) * cell_h``, so each group is solved by a strict LIS over
    corner y in corner-x order.  Indices in the result are original indices.
    """
    cell_w = inst.den_x << key.i
    cell_h = inst.den_y << key.j
    m = key.modulus
    ii, jj, rr, cc = inst.cells
    for k in members:
        if inst.xh[k] <= inst.xc[k] or inst.yv[k] <= inst.yc[k]:
            raise ContractError(f"shape {k} is not of class L1")
        r, c = rr[k], cc[k]
        if (ii[k], jj[k]) != (key.i, key.j) or r % m != key.k_r or c % m != key.k_c:
            raise ContractError(f"shape {k} is not in class {key}")
        if inst.xh[k] < (c + 1) * cell_w or inst.yv[k] < (r + 1) * cell_h:
            raise ContractError(f"shape {k} does not cross the lines of box ({r}, {c})")
    chosen = kernels.box_lis(
        [rr[k] for k in members], [cc[k] for k in members],
        [inst.xc[k] for k in members], [inst.yc[k] for k in members],
    )
    orig = inst.original_indices
    indices = tuple(sorted(orig[members[p]] for p in chosen))
    return Solution(indices, Variant.ClassExact, key, Fraction(1))


def _oriented_groups(inst: Instance) -> list[tuple[ShapeClass, list[int], IntColumns]]:
    """Split by orientation and rotate each group onto L1, in integer form."""
    groups: dict[ShapeClass, list[int]] = {}
    for idx, cls in enumerate(inst.shape_classes):
        groups.setdefault(cls, []).append(idx)
    cols = inst.columns
    out = []
    for cls in sorted(groups):
        idxs = groups[cls]
        xc = [cols.xc[k] for k in idxs]
        yc = [cols.yc[k] for k in idxs]
        xh = [cols.xh[k] for k in idxs]
        yv = [cols.yv[k] for k in idxs]
        # counter-clockwise quarter turn: (x_c, y_c, x_h, y_v) -> (-y_c, x_c, -y_v, x_h)
        for _ in range(TURNS_TO_L1[cls]):
            xc, yc, xh, yv = [-v for v in yc], xc, [-v for v in yv], xh
        out.append((cls, idxs, IntColumns(cols.denominator, xc, yc, xh, yv)))
    return out


def _scaled_class_results(scaled: ScaledInstance, modulus: int) -> list[ClassResult]:
    results = []
    orig = scaled.original_indices
    for key, members in partition(scaled, scaled.mode, modulus).items():
        sol = solve_class_exact(members, key, scaled)
        results.append(ClassResult(key, tuple(sorted(orig[k] for k in members)), sol))
    return results


_MODES = {
    "equilateral": (EQUILATERAL, 3),
    "general": (GENERAL, 3),
    "uniform": (GENERAL, 2),
}


def class_results(shapes: Shapes, variant: str) -> list[ClassResult]:
    """Every residue class a solve of ``variant`` examines, with its exact solution.

    ``variant`` is ``"equilateral"``, ``"general"`` or ``"uniform"``.
    """
    inst = as_instance(shapes)
    try:
        mode, modulus = _MODES[variant]
    except KeyError:
        raise ContractError(f"unknown variant {variant!r}") from None
    results = []
    for cls, idxs, rotated in _oriented_groups(inst):
        scaled = rescale_columns(rotated, mode, original_indices=idxs, shape_class=cls)
        results.extend(_scaled_class_results(scaled, modulus))
    return results


def _best(results: list[ClassResult], variant: Variant, factor: Fraction) -> Solution:
    if not results:
        return Solution((), variant, None, factor)
    win = min(results, key=_rank)
    return Solution(win.solution.indices, variant, win.key, factor)


def solve_equilateral_L1(shapes: Sequence[LShape]) -> Solution:
    """Best residue class for equilateral L1 shapes; factor 9 * floor(log2 2d)."""
    inst = as_instance(shapes)
    if any(cls != ShapeClass.L1 for cls in inst.shape_classes):
        raise ContractError("all shapes must be of class L1")
    if not inst.is_equilateral:
        raise ContractError("all shapes must be equilateral")
    factor = Fraction(9 * Instance.log_classes(inst.d))
    if not len(inst):
        return Solution((), Variant.EquilateralTh1, None, factor)
    scaled = rescale_columns(inst.columns, EQUILATERAL)
    return _best(_scaled_class_results(scaled, 3), Variant.EquilateralTh1, factor)


def solve_equilateral(shapes: Shapes) -> Solution:
    """Approximate MIS of equilateral shapes of any orientation.

    Instances whose arms all share one length are handed to
    :func:`solve_uniform`, whose guarantee is strictly better.
    """
    inst = as_instance(shapes)
    if not inst.is_equilateral:
        raise ContractError("all shapes must be equilateral")
    if len(inst) and inst.is_uniform:
        return solve_uniform(inst)
    factor = Fraction(36 * Instance.log_classes(inst.d))
    return _best(class_results(inst, "equilateral"), Variant.EquilateralTh1, factor)


def solve_general(shapes: Shapes) -> Solution:
    """Approximate MIS of arbitrary L-shapes; arms are bucketed per axis."""
    inst = as_instance(shapes)
    factor = Fraction(36 * Instance.log_classes(inst.d_x) * Instance.log_classes(inst.d_y))
    return _best(class_results(inst, "general"), Variant.GeneralTh3, factor)


def solve_uniform(shapes: Shapes) -> Solution:
    """Approximate MIS when every horizontal arm has one length and every vertical arm another."""
    inst = as_instance(shapes)
    if not inst.is_uniform:
        raise ContractError("uniform variant needs one common length per axis")
    variant = Variant.UniformEqCor1 if inst.is_equilateral else Variant.UniformGenCor2
    return _best(class_results(inst, "uniform"), variant, Fraction(16))


def solve(shapes: Shapes, variant: str = "auto") -> Solution:
    """Dispatch by name; ``auto`` prefers uniform, then equilateral, then general."""
    inst = as_instance(shapes)
    if variant == "auto":
        if inst.is_uniform:
            variant = "uniform"
        elif inst.is_equilateral:
            variant = "equilateral"
        else:
            variant = "general"
    if variant == "uniform":
        return solve_uniform(inst)
    if variant == "equilateral":
        return solve_equilateral(inst)
    if variant == "general":
        return solve_general(inst)
    raise ContractError(f"unknown variant {variant!r}")
