# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pure.py`` for the reference semantics.

All coordinate and value arrays are int64.  ``max_independent_set`` handles
graphs of at most 64 vertices.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t
from array import array

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil
    void qsort(void *base, size_t nmemb, size_t size,
               int (*compar)(const void *, const void *) noexcept nogil) nogil


cdef inline bint _meet(int64_t xc1, int64_t yc1, int64_t xh1, int64_t yv1,
                       int64_t xc2, int64_t yc2, int64_t xh2, int64_t yv2) noexcept nogil:
    cdef int64_t ax0, ax1, ay0, ay1, bx0, bx1, by0, by1
    if xc1 < xh1:
        ax0 = xc1; ax1 = xh1
    else:
        ax0 = xh1; ax1 = xc1
    if yc1 < yv1:
        ay0 = yc1; ay1 = yv1
    else:
        ay0 = yv1; ay1 = yc1
    if xc2 < xh2:
        bx0 = xc2; bx1 = xh2
    else:
        bx0 = xh2; bx1 = xc2
    if yc2 < yv2:
        by0 = yc2; by1 = yv2
    else:
        by0 = yv2; by1 = yc2
    if ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0:
        return False
    if yc1 == yc2 and ax0 <= bx1 and bx0 <= ax1:
        return True
    if xc1 == xc2 and ay0 <= by1 and by0 <= ay1:
        return True
    if ax0 <= xc2 <= ax1 and by0 <= yc1 <= by1:
        return True
    return bx0 <= xc1 <= bx1 and ay0 <= yc2 <= ay1


def segments_meet(int64_t xc1, int64_t yc1, int64_t xh1, int64_t yv1,
                  int64_t xc2, int64_t yc2, int64_t xh2, int64_t yv2):
    return _meet(xc1, yc1, xh1, yv1, xc2, yc2, xh2, yv2)


cdef Py_ssize_t _lis(const int64_t[:] vals, Py_ssize_t lo, Py_ssize_t hi,
                     int64_t *tail_vals, Py_ssize_t *tail_pos, Py_ssize_t *prev) noexcept nogil:
    # strict LIS over vals[lo:hi]; prev[] holds back pointers (global positions);
    # returns the number of piles, last pile's position in tail_pos[piles - 1]
    cdef Py_ssize_t piles = 0, p, a, b, mid
    cdef int64_t v
    for p in range(lo, hi):
        v = vals[p]
        a = 0
        b = piles
        while a < b:
            mid = (a + b) >> 1
            if tail_vals[mid] < v:
                a = mid + 1
            else:
                b = mid
        prev[p - lo] = tail_pos[a - 1] if a > 0 else -1
        tail_vals[a] = v
        tail_pos[a] = p
        if a == piles:
            piles += 1
    return piles


def lis_positions(const int64_t[:] seq):
    cdef Py_ssize_t n = seq.shape[0]
    if n == 0:
        return []
    return segment_lis(seq, [0, n])


def segment_lis(const int64_t[:] values, bounds):
    cdef Py_ssize_t nseg = len(bounds) - 1
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t k, lo, hi, piles, p, cnt, width = 0
    cdef list out = []
    if nseg <= 0 or n == 0:
        return out
    for k in range(nseg):
        if bounds[k + 1] - bounds[k] > width:
            width = bounds[k + 1] - bounds[k]
    cdef int64_t *tail_vals = <int64_t *> malloc(width * sizeof(int64_t))
    cdef Py_ssize_t *tail_pos = <Py_ssize_t *> malloc(width * sizeof(Py_ssize_t))
    cdef Py_ssize_t *prev = <Py_ssize_t *> malloc(width * sizeof(Py_ssize_t))
    cdef Py_ssize_t *picked = <Py_ssize_t *> malloc(width * sizeof(Py_ssize_t))
    if not tail_vals or not tail_pos or not prev or not picked:
        free(tail_vals); free(tail_pos); free(prev); free(picked)
        raise MemoryError()
    try:
        for k in range(nseg):
            lo = bounds[k]
            hi = bounds[k + 1]
            if hi - lo == 1:
                out.append(lo)
                continue
            if hi <= lo:
                continue
            piles = _lis(values, lo, hi, tail_vals, tail_pos, prev)
            cnt = 0
            p = tail_pos[piles - 1]
            while p >= 0:
                picked[cnt] = p
                cnt += 1
                p = prev[p - lo]
            while cnt > 0:
                cnt -= 1
                out.append(picked[cnt])
    finally:
        free(tail_vals); free(tail_pos); free(prev); free(picked)
    return out


def conflict_masks(const int64_t[:] xc, const int64_t[:] yc, const int64_t[:] xh, const int64_t[:] yv):
    cdef Py_ssize_t n = xc.shape[0], nbytes = (n + 7) // 8, u, v
    cdef bytearray rows = bytearray(n * nbytes)
    cdef unsigned char[:] buf = rows
    for u in range(n):
        for v in range(u + 1, n):
            if _meet(xc[u], yc[u], xh[u], yv[u], xc[v], yc[v], xh[v], yv[v]):
                buf[u * nbytes + (v >> 3)] |= <unsigned char> (1 << (v & 7))
                buf[v * nbytes + (u >> 3)] |= <unsigned char> (1 << (u & 7))
    return [int.from_bytes(rows[u * nbytes:(u + 1) * nbytes], "little") for u in range(n)]


def first_conflict(const int64_t[:] xc, const int64_t[:] yc, const int64_t[:] xh, const int64_t[:] yv):
    cdef Py_ssize_t n = xc.shape[0], u, v
    for u in range(n):
        for v in range(u + 1, n):
            if _meet(xc[u], yc[u], xh[u], yv[u], xc[v], yc[v], xh[v], yv[v]):
                return (u, v)
    return None


cdef struct _Search:
    const uint64_t *adj
    int best_size
    uint64_t best_set


cdef int _clique_cover(const uint64_t *adj, uint64_t cand) noexcept nogil:
    cdef int count = 0, v
    cdef uint64_t grow
    while cand:
        v = __builtin_ctzll(cand)
        cand &= cand - 1
        grow = cand & adj[v]
        while grow:
            v = __builtin_ctzll(grow)
            cand &= ~((<uint64_t> 1) << v)
            grow &= adj[v]
        count += 1
    return count


cdef void _search(_Search *st, uint64_t cand, uint64_t cur, int size) noexcept nogil:
    cdef int total = __builtin_popcountll(cand)
    cdef int pick = -1, pick_deg = -1, deg, v
    cdef uint64_t rest, bit
    if size + total <= st.best_size:
        return
    if size + _clique_cover(st.adj, cand) <= st.best_size:
        return
    if cand == 0:
        st.best_size = size
        st.best_set = cur
        return
    rest = cand
    while rest:
        v = __builtin_ctzll(rest)
        rest &= rest - 1
        deg = __builtin_popcountll(st.adj[v] & cand)
        if deg > pick_deg:
            pick = v
            pick_deg = deg
    if pick_deg == 0:
        st.best_size = size + total
        st.best_set = cur | cand
        return
    bit = (<uint64_t> 1) << pick
    _search(st, cand & ~st.adj[pick] & ~bit, cur | bit, size + 1)
    _search(st, cand & ~bit, cur, size)


def max_independent_set(masks):
    cdef Py_ssize_t n = len(masks), i
    if n > 64:
        raise ValueError("compiled branch and bound supports at most 64 vertices")
    cdef uint64_t adj[64]
    cdef _Search st
    for i in range(n):
        adj[i] = <uint64_t> masks[i]
    st.adj = adj
    st.best_size = 0
    st.best_set = 0
    cdef uint64_t full = ((<uint64_t> 1) << n) - 1 if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    with nogil:
        _search(&st, full, 0, 0)
    return int(st.best_set)


cdef inline int64_t _floordiv(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t q = a // b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


def grid_cells(const int64_t[:] xc, const int64_t[:] yc, const int64_t[:] xh, const int64_t[:] yv,
               int64_t den_x, int64_t den_y, bint tie_buckets):
    cdef Py_ssize_t n = xc.shape[0], k
    cdef int64_t i, j
    ai = array("q", bytes(8 * n))
    aj = array("q", bytes(8 * n))
    ar = array("q", bytes(8 * n))
    ac = array("q", bytes(8 * n))
    cdef int64_t[:] ii = ai, jj = aj, rr = ar, cc = ac
    with nogil:
        for k in range(n):
            # arms are at least the denominator, so the quotient is positive
            i = 63 - __builtin_clzll(<unsigned long long> ((xh[k] - xc[k]) // den_x))
            if tie_buckets:
                j = i
            else:
                j = 63 - __builtin_clzll(<unsigned long long> ((yv[k] - yc[k]) // den_y))
            ii[k] = i
            jj[k] = j
            rr[k] = _floordiv(yc[k], den_y << j)
            cc[k] = _floordiv(xc[k], den_x << i)
    return ai.tolist(), aj.tolist(), ar.tolist(), ac.tolist()


cdef Py_ssize_t _lis_ptr(const int64_t *vals, Py_ssize_t lo, Py_ssize_t hi,
                         int64_t *tail_vals, Py_ssize_t *tail_pos, Py_ssize_t *prev) noexcept nogil:
    cdef Py_ssize_t piles = 0, p, a, b, mid
    cdef int64_t v
    for p in range(lo, hi):
        v = vals[p]
        a = 0
        b = piles
        while a < b:
            mid = (a + b) >> 1
            if tail_vals[mid] < v:
                a = mid + 1
            else:
                b = mid
        prev[p - lo] = tail_pos[a - 1] if a > 0 else -1
        tail_vals[a] = v
        tail_pos[a] = p
        if a == piles:
            piles += 1
    return piles


cdef struct _Row:
    int64_t r
    int64_t c
    int64_t x
    int64_t y
    Py_ssize_t pos


cdef int _row_cmp(const void *pa, const void *pb) noexcept nogil:
    cdef const _Row *a = <const _Row *> pa
    cdef const _Row *b = <const _Row *> pb
    if a.r != b.r:
        return -1 if a.r < b.r else 1
    if a.c != b.c:
        return -1 if a.c < b.c else 1
    if a.x != b.x:
        return -1 if a.x < b.x else 1
    if a.y != b.y:
        return -1 if a.y > b.y else 1  # descending y on equal x
    if a.pos != b.pos:
        return -1 if a.pos < b.pos else 1
    return 0


def box_lis(const int64_t[:] r, const int64_t[:] c, const int64_t[:] x, const int64_t[:] y):
    cdef Py_ssize_t n = r.shape[0], k, lo, hi, piles, p
    if n == 0:
        return []
    cdef _Row *rows = <_Row *> malloc(n * sizeof(_Row))
    cdef int64_t *vals = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *tail_vals = <int64_t *> malloc(n * sizeof(int64_t))
    cdef Py_ssize_t *tail_pos = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t *prev = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef unsigned char *chosen = <unsigned char *> malloc(n)
    cdef list out = []
    if not rows or not vals or not tail_vals or not tail_pos or not prev or not chosen:
        free(rows); free(vals); free(tail_vals); free(tail_pos); free(prev); free(chosen)
        raise MemoryError()
    try:
        with nogil:
            for k in range(n):
                rows[k].r = r[k]
                rows[k].c = c[k]
                rows[k].x = x[k]
                rows[k].y = y[k]
                rows[k].pos = k
                chosen[k] = 0
            qsort(rows, n, sizeof(_Row), _row_cmp)
            for k in range(n):
                vals[k] = rows[k].y
            lo = 0
            while lo < n:
                hi = lo + 1
                while hi < n and rows[hi].r == rows[lo].r and rows[hi].c == rows[lo].c:
                    hi += 1
                piles = _lis_ptr(vals, lo, hi, tail_vals, tail_pos, prev)
                p = tail_pos[piles - 1]
                while p >= 0:
                    chosen[rows[p].pos] = 1
                    p = prev[p - lo]
                lo = hi
        for k in range(n):
            if chosen[k]:
                out.append(k)
    finally:
        free(rows); free(vals); free(tail_vals); free(tail_pos); free(prev); free(chosen)
    return out
