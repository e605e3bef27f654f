# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Same contracts as pure.py (keep the two in sync): vertex sets are
multiword bitsets, family masks are single 64-bit words (ground sets are
capped at 62 elements).  Tie-breaking and iteration order match the pure
backend bit for bit, so outputs are identical, not merely equivalent.
"""

from libc.stdlib cimport free, malloc, qsort
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(u64) nogil
    int __builtin_ctzll(u64) nogil


cdef inline u64 _bit(int v) nogil:
    return (<u64> 1) << (v & 63)


cdef void _int_to_words(object mask, u64* out, int w):
    cdef int i
    cdef object mm = mask
    for i in range(w):
        out[i] = <u64> (mm & 0xFFFFFFFFFFFFFFFF)
        mm = mm >> 64


# --- Bron-Kerbosch maximal-clique enumeration --------------------------------


cdef void _bk(u64* A, u64* Pst, u64* Xst, u64* Est, int* R,
              int rlen, int depth, int w, list out):
    cdef u64* P = Pst + depth * w
    cdef u64* X = Xst + depth * w
    cdef u64* E = Est + depth * w
    cdef u64* CP = Pst + (depth + 1) * w
    cdef u64* CX = Xst + (depth + 1) * w
    cdef int i, iw, v, best_u = -1, best_c = -1, c
    cdef u64 word
    cdef bint pempty = True, xempty = True
    cdef object r, one = 1
    for i in range(w):
        if P[i]:
            pempty = False
        if X[i]:
            xempty = False
    if pempty and xempty:
        r = 0
        for i in range(rlen):
            r = r | (one << R[i])  # Python ints: vertex indices exceed C shifts
        out.append(r)
        return
    if pempty:
        return
    # pivot: vertex of P | X maximizing |P & N(u)|, lowest index on ties
    for i in range(w):
        word = P[i] | X[i]
        while word:
            v = (i << 6) + __builtin_ctzll(word)
            word &= word - 1
            c = 0
            for iw in range(w):
                c += __builtin_popcountll(P[iw] & A[v * w + iw])
            if c > best_c:
                best_c = c
                best_u = v
    for i in range(w):
        E[i] = P[i] & ~A[best_u * w + i]
    for i in range(w):
        word = E[i]
        while word:
            v = (i << 6) + __builtin_ctzll(word)
            word &= word - 1
            for iw in range(w):
                CP[iw] = P[iw] & A[v * w + iw]
                CX[iw] = X[iw] & A[v * w + iw]
            R[rlen] = v
            _bk(A, Pst, Xst, Est, R, rlen + 1, depth + 1, w, out)
            P[v >> 6] &= ~_bit(v)
            X[v >> 6] |= _bit(v)


def maximal_cliques(adj, int nv):
    """All maximal cliques as vertex bitmasks (Bron-Kerbosch, pivoting)."""
    out = []
    if nv == 0:
        return out
    cdef int w = (nv + 63) >> 6
    cdef int levels = nv + 2
    cdef u64* A = <u64*> malloc(<size_t> nv * w * sizeof(u64))
    cdef u64* Pst = <u64*> malloc(<size_t> levels * w * sizeof(u64))
    cdef u64* Xst = <u64*> malloc(<size_t> levels * w * sizeof(u64))
    cdef u64* Est = <u64*> malloc(<size_t> levels * w * sizeof(u64))
    cdef int* R = <int*> malloc(<size_t> levels * sizeof(int))
    if A == NULL or Pst == NULL or Xst == NULL or Est == NULL or R == NULL:
        free(A); free(Pst); free(Xst); free(Est); free(R)
        raise MemoryError()
    cdef int v
    try:
        for v in range(nv):
            _int_to_words(adj[v], A + v * w, w)
        memset(Pst, 0, <size_t> w * sizeof(u64))
        memset(Xst, 0, <size_t> w * sizeof(u64))
        for v in range(nv):
            Pst[v >> 6] |= _bit(v)
        _bk(A, Pst, Xst, Est, R, 0, 0, w, out)
    finally:
        free(A); free(Pst); free(Xst); free(Est); free(R)
    return out


# --- exact maximum clique (greedy-coloring branch and bound) ------------------


cdef void _mcq(u64* A, u64* Pst, int depth, int size, int w, int* best):
    cdef u64* P = Pst + depth * w
    cdef u64* CP = Pst + (depth + 1) * w
    cdef int cnt = 0
    cdef int i, j, v, idx, color
    cdef u64 word
    cdef bint child_empty
    for i in range(w):
        cnt += __builtin_popcountll(P[i])
    if cnt == 0:
        if size > best[0]:
            best[0] = size
        return
    cdef int* order = <int*> malloc(<size_t> cnt * sizeof(int))
    cdef int* colors = <int*> malloc(<size_t> cnt * sizeof(int))
    cdef u64* un = <u64*> malloc(<size_t> w * sizeof(u64))
    cdef u64* avail = <u64*> malloc(<size_t> w * sizeof(u64))
    if order == NULL or colors == NULL or un == NULL or avail == NULL:
        free(order); free(colors); free(un); free(avail)
        raise MemoryError()
    memcpy(un, P, <size_t> w * sizeof(u64))
    idx = 0
    color = 0
    while idx < cnt:
        color += 1
        memcpy(avail, un, <size_t> w * sizeof(u64))
        i = 0
        while i < w:
            if avail[i] == 0:
                i += 1
                continue
            v = (i << 6) + __builtin_ctzll(avail[i])
            order[idx] = v
            colors[idx] = color
            idx += 1
            un[v >> 6] &= ~_bit(v)
            for j in range(w):
                avail[j] &= ~A[v * w + j]
            avail[v >> 6] &= ~_bit(v)
    for idx in range(cnt - 1, -1, -1):
        if size + colors[idx] <= best[0]:
            break
        v = order[idx]
        child_empty = True
        for j in range(w):
            CP[j] = P[j] & A[v * w + j]
            if CP[j]:
                child_empty = False
        if child_empty:
            if size + 1 > best[0]:
                best[0] = size + 1
        else:
            _mcq(A, Pst, depth + 1, size + 1, w, best)
        P[v >> 6] &= ~_bit(v)
    free(order); free(colors); free(un); free(avail)


def max_clique_size(adj, int nv, cand, int lb=0):
    """max(lb, size of the largest clique induced on the cand vertex set).

    lb must be the size of a clique known to exist; the empty graph has
    clique size 0.
    """
    cdef int best = lb if lb > 0 else 0
    if nv == 0 or not cand:
        return best
    cdef int w = (nv + 63) >> 6
    cdef int levels = nv + 2
    cdef u64* A = <u64*> malloc(<size_t> nv * w * sizeof(u64))
    cdef u64* Pst = <u64*> malloc(<size_t> levels * w * sizeof(u64))
    if A == NULL or Pst == NULL:
        free(A); free(Pst)
        raise MemoryError()
    cdef int v
    try:
        for v in range(nv):
            _int_to_words(adj[v], A + v * w, w)
        _int_to_words(cand, Pst, w)
        _mcq(A, Pst, 0, 0, w, &best)
    finally:
        free(A); free(Pst)
    return best


# --- minimum relabeling (canonical form) --------------------------------------


cdef int _cmp_u64(const void* a, const void* b) noexcept nogil:
    cdef u64 x = (<const u64*> a)[0]
    cdef u64 y = (<const u64*> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


cdef int _lexcmp(u64* a, u64* b, int m) nogil:
    cdef int i
    for i in range(m):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef struct CanonCtx:
    u64* ms
    int m
    int scount
    int* col_start   # indexed by element bit value (0..63)
    int* col_idx
    u64* tstk        # (scount+1) * m
    int* jstk        # (scount+1) * m
    int* unstk       # (scount+1) * scount
    u64* lowstk      # (scount+1) * m
    u64* kid_keys    # (scount+1) * scount * m
    u64* kid_t       # (scount+1) * scount * m
    int* kid_j       # (scount+1) * scount * m
    int* kid_order   # (scount+1) * scount
    u64* best
    bint have_best
    bint achieved


cdef void _canon_rec(CanonCtx* cx, int depth, int p, int ulen):
    cdef int m = cx.m
    cdef u64* t = cx.tstk + depth * m
    cdef int* j = cx.jstk + depth * m
    cdef int* un = cx.unstk + depth * cx.scount
    cdef u64* low = cx.lowstk + depth * m
    cdef int cmp_
    if ulen == 0:
        if not cx.have_best:
            memcpy(cx.best, low, <size_t> m * sizeof(u64))
            cx.have_best = True
            cx.achieved = True
        else:
            cmp_ = _lexcmp(low, cx.best, m)
            if cmp_ < 0:
                memcpy(cx.best, low, <size_t> m * sizeof(u64))
                cx.achieved = True
            elif cmp_ == 0:
                cx.achieved = True
        return
    cdef u64 bitp = (<u64> 1) << p
    cdef int shift = p + 1
    cdef u64* keys = cx.kid_keys + depth * cx.scount * m
    cdef u64* kts = cx.kid_t + depth * cx.scount * m
    cdef int* kjs = cx.kid_j + depth * cx.scount * m
    cdef int* order = cx.kid_order + depth * cx.scount
    cdef int ki, kk, e, i, ci, pos, sel
    for ki in range(ulen):
        e = un[ki]
        memcpy(kts + ki * m, t, <size_t> m * sizeof(u64))
        memcpy(kjs + ki * m, j, <size_t> m * sizeof(int))
        for ci in range(cx.col_start[e], cx.col_start[e + 1]):
            i = cx.col_idx[ci]
            kts[ki * m + i] |= bitp
            kjs[ki * m + i] -= 1
        for i in range(m):
            keys[ki * m + i] = kts[ki * m + i] | (
                (((<u64> 1) << kjs[ki * m + i]) - 1) << shift
            )
        qsort(keys + ki * m, <size_t> m, sizeof(u64), _cmp_u64)
    # stable insertion sort of kid indices by key, ascending
    for ki in range(ulen):
        order[ki] = ki
    for ki in range(1, ulen):
        sel = order[ki]
        pos = ki
        while pos > 0 and _lexcmp(keys + sel * m, keys + order[pos - 1] * m, m) < 0:
            order[pos] = order[pos - 1]
            pos -= 1
        order[pos] = sel
    cdef u64* child_t = cx.tstk + (depth + 1) * m
    cdef int* child_j = cx.jstk + (depth + 1) * m
    cdef int* child_un = cx.unstk + (depth + 1) * cx.scount
    cdef u64* child_low = cx.lowstk + (depth + 1) * m
    for kk in range(ulen):
        sel = order[kk]
        if cx.have_best:
            cmp_ = _lexcmp(keys + sel * m, cx.best, m)
            if cx.achieved:
                if cmp_ >= 0:
                    break  # keys ascend; the rest are dominated too
            elif cmp_ > 0:
                break
        memcpy(child_t, kts + sel * m, <size_t> m * sizeof(u64))
        memcpy(child_j, kjs + sel * m, <size_t> m * sizeof(int))
        memcpy(child_low, keys + sel * m, <size_t> m * sizeof(u64))
        ci = 0
        for i in range(ulen):
            if i != sel:
                child_un[ci] = un[i]
                ci += 1
        _canon_rec(cx, depth + 1, shift, ulen - 1)


def canonical_min(int n, members, seed=None):
    """Lexicographically least relabeling of a family under permutations
    of [n]; see the pure backend for the seeding contract."""
    cdef int m = len(members)
    if m == 0:
        return (), True
    cdef CanonCtx cx
    cdef int i, e, ci, levels
    cdef u64 sup = 0
    cx.m = m
    cx.ms = <u64*> malloc(<size_t> m * sizeof(u64))
    if cx.ms == NULL:
        raise MemoryError()
    for i in range(m):
        cx.ms[i] = <u64> members[i]
        sup |= cx.ms[i]
    cx.scount = __builtin_popcountll(sup)
    levels = cx.scount + 1
    cx.col_start = <int*> malloc(65 * sizeof(int))
    cx.col_idx = <int*> malloc(<size_t> m * 64 * sizeof(int))
    cx.tstk = <u64*> malloc(<size_t> levels * m * sizeof(u64))
    cx.jstk = <int*> malloc(<size_t> levels * m * sizeof(int))
    cx.unstk = <int*> malloc(<size_t> levels * cx.scount * sizeof(int))
    cx.lowstk = <u64*> malloc(<size_t> levels * m * sizeof(u64))
    cx.kid_keys = <u64*> malloc(<size_t> levels * cx.scount * m * sizeof(u64))
    cx.kid_t = <u64*> malloc(<size_t> levels * cx.scount * m * sizeof(u64))
    cx.kid_j = <int*> malloc(<size_t> levels * cx.scount * m * sizeof(int))
    cx.kid_order = <int*> malloc(<size_t> levels * cx.scount * sizeof(int))
    cx.best = <u64*> malloc(<size_t> m * sizeof(u64))
    if (
        cx.col_start == NULL or cx.col_idx == NULL or cx.tstk == NULL
        or cx.jstk == NULL or cx.unstk == NULL or cx.lowstk == NULL
        or cx.kid_keys == NULL or cx.kid_t == NULL or cx.kid_j == NULL
        or cx.kid_order == NULL or cx.best == NULL
    ):
        _canon_free(&cx)
        raise MemoryError()
    try:
        if seed is not None:
            if len(seed) != m:
                raise ValueError("seed length must match the family size")
            for i in range(m):
                cx.best[i] = <u64> seed[i]
            cx.have_best = True
        else:
            cx.have_best = False
        cx.achieved = False
        # columns: member indices containing each element, flattened
        ci = 0
        for e in range(64):
            cx.col_start[e] = ci
            if sup >> e & 1:
                for i in range(m):
                    if cx.ms[i] >> e & 1:
                        cx.col_idx[ci] = i
                        ci += 1
        cx.col_start[64] = ci
        # root: support elements ascending, all labels unassigned
        ci = 0
        for e in range(64):
            if sup >> e & 1:
                cx.unstk[ci] = e
                ci += 1
        for i in range(m):
            cx.tstk[i] = 0
            cx.jstk[i] = __builtin_popcountll(cx.ms[i])
            cx.lowstk[i] = (((<u64> 1) << cx.jstk[i]) - 1)
        qsort(cx.lowstk, <size_t> m, sizeof(u64), _cmp_u64)
        _canon_rec(&cx, 0, 0, cx.scount)
        enc = tuple(int(cx.best[i]) for i in range(m))
        return enc, bool(cx.achieved)
    finally:
        _canon_free(&cx)


cdef void _canon_free(CanonCtx* cx):
    free(cx.ms); free(cx.col_start); free(cx.col_idx)
    free(cx.tstk); free(cx.jstk); free(cx.unstk); free(cx.lowstk)
    free(cx.kid_keys); free(cx.kid_t); free(cx.kid_j); free(cx.kid_order)
    free(cx.best)
