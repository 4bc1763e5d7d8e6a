"""Exact brute-force MIS and independence checks for desk-scale certification."""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import kernels
from .errors import OracleCapError
from .geometry import LShape
from .solver import Solution, Variant

DEFAULT_CAP = 30
CAP_ENV = "VPGMIS_ORACLE_CAP"


def default_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_CAP


def ranked_columns(shapes: Sequence[LShape]) -> tuple[list[int], list[int], list[int], list[int]]:
    """Replace x values and y values by their dense ranks.

    The intersection predicate only compares x's with x's and y's with y's,
    so this order-preserving relabelling keeps every answer and always fits
    in int64.
    """
    xs = sorted({v for l in shapes for v in (l.x_c, l.x_h)})
    ys = sorted({v for l in shapes for v in (l.y_c, l.y_v)})
    rx = {v: r for r, v in enumerate(xs)}
    ry = {v: r for r, v in enumerate(ys)}
    return (
        [rx[l.x_c] for l in shapes],
        [ry[l.y_c] for l in shapes],
        [rx[l.x_h] for l in shapes],
        [ry[l.y_v] for l in shapes],
    )


@dataclass(frozen=True)
class ConflictGraph:
    """Intersection graph; row ``u`` of the adjacency is the bitmask ``masks[u]``."""

    n: int
    masks: tuple[int, ...]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def matrix(self) -> list[list[bool]]:
        return [[u != v and self.adjacent(u, v) for v in range(self.n)] for u in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.adjacent(u, v)]

    def induced(self, vertices: Sequence[int]) -> "ConflictGraph":
        vertices = list(vertices)
        masks = []
        for u in vertices:
            row = 0
            for p, v in enumerate(vertices):
                if u != v and self.adjacent(u, v):
                    row |= 1 << p
            masks.append(row)
        return ConflictGraph(len(vertices), tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "ConflictGraph":
        masks = [0] * n
        for u, v in edges:
            if u != v:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        return cls(n, tuple(masks))


def build_conflict_graph(shapes: Sequence[LShape]) -> ConflictGraph:
    shapes = list(shapes)
    if not shapes:
        return ConflictGraph(0, ())
    return ConflictGraph(len(shapes), tuple(kernels.conflict_masks(*ranked_columns(shapes))))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def brute_force_mis(g: ConflictGraph, cap: Optional[int] = None) -> list[int]:
    """Exact maximum independent set (ascending vertex list).

    Refuses graphs above ``cap`` vertices (default 30, or ``$VPGMIS_ORACLE_CAP``).
    """
    cap = default_cap() if cap is None else cap
    if g.n > cap:
        raise OracleCapError(f"oracle refuses n = {g.n} > cap {cap}")
    return _bits(kernels.max_independent_set(g.masks))


def exhaustive_mis(g: ConflictGraph, cap: int = 20) -> list[int]:
    """Second, independent oracle: classify every one of the ``2**n`` vertex subsets.

    ``free[S]`` is true iff ``S`` is independent, filled in increasing ``S``
    from ``S`` minus its lowest vertex.  Among the largest independent
    subsets the numerically smallest mask wins.
    """
    if g.n > cap:
        raise OracleCapError(f"exhaustive enumeration refuses n = {g.n} > cap {cap}")
    masks = g.masks
    free = bytearray(1 << g.n)
    free[0] = 1
    best, best_size = 0, 0
    for subset in range(1, 1 << g.n):
        low = subset & -subset
        rest = subset ^ low
        if free[rest] and not masks[low.bit_length() - 1] & rest:
            free[subset] = 1
            size = subset.bit_count()
            if size > best_size:
                best, best_size = subset, size
    return _bits(best)


def first_violation(shapes: Sequence[LShape], indices: Iterable[int]) -> Optional[tuple[int, int]]:
    """First intersecting pair ``(i, j)`` (original indices, ``i < j``) among ``indices``."""
    chosen = sorted(set(indices))
    for idx in chosen:
        if not 0 <= idx < len(shapes):
            raise IndexError(f"index {idx} out of range for {len(shapes)} shapes")
    if len(chosen) < 2:
        return None
    pair = kernels.first_conflict(*ranked_columns([shapes[k] for k in chosen]))
    if pair is None:
        return None
    return chosen[pair[0]], chosen[pair[1]]


def verify_independent(shapes: Sequence[LShape], indices: Iterable[int]) -> bool:
    """True iff no two of the selected shapes intersect.

    An index listed twice selects the same shape once.
    """
    return first_violation(shapes, indices) is None


def brute_force_solution(shapes: Sequence[LShape], cap: Optional[int] = None) -> Solution:
    chosen = brute_force_mis(build_conflict_graph(shapes), cap)
    return Solution(tuple(chosen), Variant.BruteForce, None, Fraction(1))
