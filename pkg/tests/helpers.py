"""Independent oracles and instance builders shared by the tests.

Nothing here calls the library's intersection code: the rasterized oracle
enumerates lattice points of each shape directly.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from vpgmis.generator import GenConfig, generate
from vpgmis.geometry import LShape


def L(*coords) -> LShape:
    return LShape(*(Fraction(c) for c in coords))


def raster_points(l: LShape, unit: int = 1) -> set[tuple[int, int]]:
    """All lattice points of ``l`` after multiplying coordinates by ``unit``.

    ``unit`` must clear every denominator so endpoints land on the lattice.
    Two axis-parallel segments with lattice endpoints meet iff they share a
    lattice point, so comparing these sets decides intersection exactly.
    """
    xc, yc, xh, yv = (v * unit for v in l.as_tuple())
    assert all(v.denominator == 1 for v in (xc, yc, xh, yv))
    xc, yc, xh, yv = int(xc), int(yc), int(xh), int(yv)
    pts = {(x, yc) for x in range(min(xc, xh), max(xc, xh) + 1)}
    pts |= {(xc, y) for y in range(min(yc, yv), max(yc, yv) + 1)}
    return pts


def raster_intersects(a: LShape, b: LShape) -> bool:
    unit = math.lcm(*(v.denominator for v in a.as_tuple() + b.as_tuple()))
    return bool(raster_points(a, unit) & raster_points(b, unit))


def raster_adjacency(shapes: Sequence[LShape]) -> list[list[bool]]:
    unit = math.lcm(1, *(v.denominator for l in shapes for v in l.as_tuple()))
    pts = [raster_points(l, unit) for l in shapes]
    n = len(shapes)
    return [[u != v and bool(pts[u] & pts[v]) for v in range(n)] for u in range(n)]


def pairwise_disjoint(shapes: Sequence[LShape], indices: Iterable[int]) -> bool:
    idx = sorted(set(indices))
    return all(not raster_intersects(shapes[a], shapes[b]) for p, a in enumerate(idx) for b in idx[p + 1:])


def lis_length_exhaustive(seq: Sequence[int]) -> int:
    """Longest strictly increasing subsequence by trying every subset of positions."""
    best = 0
    n = len(seq)
    for mask in range(1 << n):
        vals = [seq[k] for k in range(n) if mask >> k & 1]
        if all(a < b for a, b in zip(vals, vals[1:])):
            best = max(best, len(vals))
    return best


def gen(n: int, seed: int, mode: str = "equilateral", **kw) -> list[LShape]:
    return generate(GenConfig(n=n, seed=seed, mode=mode, **kw))


def rotate_point_instance(shapes: Sequence[LShape]) -> list[LShape]:
    """Quarter turn of every shape about the origin, written out independently."""
    return [L(-l.y_c, l.x_c, -l.y_v, l.x_h) for l in shapes]
