"""Pure-Python kernels.

These are the reference implementations of the hot loops; ``_core.pyx``
mirrors every function here with identical results (including tie-breaks),
so the two backends are interchangeable.  Arguments are plain sequences of
integers (the predicates also accept any totally ordered values).
"""
from __future__ import annotations

from bisect import bisect_left
from typing import Optional, Sequence


def segments_meet(xc1, yc1, xh1, yv1, xc2, yc2, xh2, yv2) -> bool:
    """Closed-set intersection of two L-shapes given as 4-tuples of coordinates."""
    ax0, ax1 = (xc1, xh1) if xc1 < xh1 else (xh1, xc1)
    ay0, ay1 = (yc1, yv1) if yc1 < yv1 else (yv1, yc1)
    bx0, bx1 = (xc2, xh2) if xc2 < xh2 else (xh2, xc2)
    by0, by1 = (yc2, yv2) if yc2 < yv2 else (yv2, yc2)
    if ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0:
        return False
    # horizontal/horizontal and vertical/vertical: collinear overlap
    if yc1 == yc2 and ax0 <= bx1 and bx0 <= ax1:
        return True
    if xc1 == xc2 and ay0 <= by1 and by0 <= ay1:
        return True
    # horizontal of one against vertical of the other
    if ax0 <= xc2 <= ax1 and by0 <= yc1 <= by1:
        return True
    return bx0 <= xc1 <= bx1 and ay0 <= yc2 <= ay1


def lis_positions(seq: Sequence[int]) -> list[int]:
    """Positions of one longest strictly increasing subsequence.

    Patience sorting keeping the smallest tail per length, with back pointers.
    """
    tail_vals: list = []
    tail_pos: list[int] = []
    prev = [-1] * len(seq)
    for p, v in enumerate(seq):
        k = bisect_left(tail_vals, v)
        if k:
            prev[p] = tail_pos[k - 1]
        if k == len(tail_vals):
            tail_vals.append(v)
            tail_pos.append(p)
        else:
            tail_vals[k] = v
            tail_pos[k] = p
    out: list[int] = []
    p = tail_pos[-1] if tail_pos else -1
    while p >= 0:
        out.append(p)
        p = prev[p]
    out.reverse()
    return out


def segment_lis(values: Sequence[int], bounds: Sequence[int]) -> list[int]:
    """Run :func:`lis_positions` independently on ``values[bounds[k]:bounds[k+1]]``.

    Returns the chosen global positions in increasing order.
    """
    chosen: list[int] = []
    for k in range(len(bounds) - 1):
        lo, hi = bounds[k], bounds[k + 1]
        if hi - lo == 1:
            chosen.append(lo)
            continue
        chosen.extend(lo + p for p in lis_positions(values[lo:hi]))
    return chosen


def conflict_masks(xc: Sequence[int], yc: Sequence[int], xh: Sequence[int], yv: Sequence[int]) -> list[int]:
    """Adjacency of the intersection graph as one bitmask per vertex (no self loops)."""
    n = len(xc)
    masks = [0] * n
    for u in range(n):
        a = (xc[u], yc[u], xh[u], yv[u])
        for v in range(u + 1, n):
            if segments_meet(*a, xc[v], yc[v], xh[v], yv[v]):
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return masks


def first_conflict(
    xc: Sequence[int], yc: Sequence[int], xh: Sequence[int], yv: Sequence[int]
) -> Optional[tuple[int, int]]:
    """Lexicographically first intersecting pair ``(u, v)`` with ``u < v``, or None."""
    n = len(xc)
    for u in range(n):
        a = (xc[u], yc[u], xh[u], yv[u])
        for v in range(u + 1, n):
            if segments_meet(*a, xc[v], yc[v], xh[v], yv[v]):
                return u, v
    return None


def max_independent_set(masks: Sequence[int]) -> int:
    """Exact maximum independent set of the graph given by adjacency bitmasks.

    Branch and bound: branch on the candidate of maximum degree inside the
    candidate set (smallest index on ties), include-branch first, prune when
    the current size plus an upper bound on the candidates cannot beat the
    incumbent.  The bound is the candidate count, tightened when that is not
    enough by a greedy clique cover (an independent set takes at most one
    vertex per clique).  Pruning never removes a strictly better set, so the
    bound does not change which optimum is returned.
    Returns the chosen vertices as a bitmask.
    """
    n = len(masks)
    best_size = 0
    best_set = 0

    def clique_cover(cand: int) -> int:
        count = 0
        while cand:
            low = cand & -cand
            cand ^= low
            grow = cand & masks[low.bit_length() - 1]
            while grow:
                u = grow & -grow
                cand ^= u
                grow &= masks[u.bit_length() - 1]
            count += 1
        return count

    def search(cand: int, cur: int, size: int) -> None:
        nonlocal best_size, best_set
        if size + cand.bit_count() <= best_size or size + clique_cover(cand) <= best_size:
            return
        if not cand:
            best_size, best_set = size, cur
            return
        pick, pick_deg = -1, -1
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            deg = (masks[v] & cand).bit_count()
            if deg > pick_deg:
                pick, pick_deg = v, deg
        if pick_deg == 0:
            best_size, best_set = size + cand.bit_count(), cur | cand
            return
        bit = 1 << pick
        search(cand & ~masks[pick] & ~bit, cur | bit, size + 1)
        search(cand & ~bit, cur, size)

    search((1 << n) - 1, 0, 0)
    return best_set


def grid_cells(xc, yc, xh, yv, den_x: int, den_y: int, tie_buckets: bool):
    """Dyadic buckets and grid boxes of L1 shapes in integer form.

    For shape ``k`` with arms ``ax = xh - xc`` and ``ay = yv - yc``:
    ``i = floor(log2(ax // den_x))``, ``j`` likewise (or ``j = i`` when
    ``tie_buckets``), and the corner's box on the ``2**i x 2**j`` grid is
    ``r = yc // (den_y << j)``, ``c = xc // (den_x << i)``.
    Returns the four lists ``(i, j, r, c)``.
    """
    n = len(xc)
    ii, jj, rr, cc = [0] * n, [0] * n, [0] * n, [0] * n
    for k in range(n):
        i = ((xh[k] - xc[k]) // den_x).bit_length() - 1
        j = i if tie_buckets else ((yv[k] - yc[k]) // den_y).bit_length() - 1
        ii[k], jj[k] = i, j
        rr[k] = yc[k] // (den_y << j)
        cc[k] = xc[k] // (den_x << i)
    return ii, jj, rr, cc


def box_lis(r: Sequence[int], c: Sequence[int], x: Sequence[int], y: Sequence[int]) -> list[int]:
    """Exact MIS of every box's crossing family at once.

    Sorts by ``(r, c, x, -y)`` and runs a strict LIS on ``y`` inside each box.
    Returns chosen input positions, ascending.
    """
    order = sorted(range(len(r)), key=lambda k: (r[k], c[k], x[k], -y[k]))
    bounds = [0]
    for p in range(1, len(order)):
        a, b = order[p - 1], order[p]
        if r[a] != r[b] or c[a] != c[b]:
            bounds.append(p)
    bounds.append(len(order))
    if not order:
        return []
    values = [y[k] for k in order]
    return sorted(order[p] for p in segment_lis(values, bounds))
