"""Exact MIS for families of L1 shapes that all cross one vertical and one horizontal line.

For such a family, two shapes intersect exactly when their corners are
ordered oppositely by x and by y (or share a coordinate).  The intersection
graph is therefore a permutation graph, and a maximum independent set is a
longest strictly increasing subsequence of the corner y's read in x order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels
from .errors import ContractError
from .geometry import LShape, ShapeClass, classify


def lis_indices(seq: Sequence[int]) -> list[int]:
    """0-based positions of one longest strictly increasing subsequence of ``seq``.

    Among optimal answers, returns the one given by patience sorting with
    smallest-tail piles and back-pointer reconstruction.  O(m log m).
    """
    return kernels.lis_positions(seq)


@dataclass(frozen=True)
class CrossingFamily:
    shapes: tuple[LShape, ...]
    a: Fraction  # vertical line x = a
    b: Fraction  # horizontal line y = b

    def __init__(self, shapes: Sequence[LShape], a, b):
        object.__setattr__(self, "shapes", tuple(shapes))
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def check(self) -> None:
        for idx, l in enumerate(self.shapes):
            if classify(l) != ShapeClass.L1:
                raise ContractError(f"shape {idx} is not of class L1")
            if not (l.x_c <= self.a <= l.x_h and l.y_c <= self.b <= l.y_v):
                raise ContractError(f"shape {idx} does not cross both x = {self.a} and y = {self.b}")


def crossing_order(xs: Sequence, ys: Sequence) -> list[int]:
    """Order shapes by corner x, breaking ties by *decreasing* corner y.

    With descending y on equal x, a strictly increasing run of y can never
    take two shapes with the same x (those overlap on a common vertical line).
    """
    return sorted(range(len(xs)), key=lambda k: (xs[k], -ys[k]))


def crossing_family_mis(family: CrossingFamily) -> list[int]:
    """Indices into ``family.shapes`` of an exact maximum independent set, ascending."""
    family.check()
    shapes = family.shapes
    if not shapes:
        return []
    xs = [l.x_c for l in shapes]
    ys = [l.y_c for l in shapes]
    order = crossing_order(xs, ys)
    # dense ranks keep the kernel input in int64 whatever the rationals are
    rank = {v: r for r, v in enumerate(sorted(set(ys)))}
    seq = [rank[ys[k]] for k in order]
    return sorted(order[p] for p in lis_indices(seq))
