# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: split-digraph max-flow vertex cuts and
subset-search separating-set oracles.

Must stay behavior-identical to pglab._pykernels: same augmentation order,
same enumeration order, same return values. The test suite compares the
two module for module.
"""

from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef int64_t _INF = (<int64_t>1) << 62

INF = 1 << 62


def st_vertex_cut(int n, int32_t[::1] indptr, int32_t[::1] indices,
                  int64_t[::1] caps, int s, int t, int64_t cutoff=_INF):
    """Minimum weighted vertex cut separating non-adjacent s from t.

    Same contract as pglab._pykernels.st_vertex_cut: returns (value, cut)
    when value < cutoff, else (cutoff, None).
    """
    cdef int nn = 2 * n
    cdef long m2 = indptr[n]
    cdef long narcs = 2 * n + 2 * m2
    cdef int32_t* to_ = <int32_t*>malloc(narcs * sizeof(int32_t))
    cdef int64_t* cap = <int64_t*>malloc(narcs * sizeof(int64_t))
    cdef int32_t* nxt = <int32_t*>malloc(narcs * sizeof(int32_t))
    cdef int32_t* head = <int32_t*>malloc(nn * sizeof(int32_t))
    cdef int32_t* level = <int32_t*>malloc(nn * sizeof(int32_t))
    cdef int32_t* itarc = <int32_t*>malloc(nn * sizeof(int32_t))
    cdef int32_t* queue = <int32_t*>malloc(nn * sizeof(int32_t))
    cdef int32_t* path = <int32_t*>malloc(nn * sizeof(int32_t))
    if (to_ == NULL or cap == NULL or nxt == NULL or head == NULL or
            level == NULL or itarc == NULL or queue == NULL or path == NULL):
        free(to_); free(cap); free(nxt); free(head)
        free(level); free(itarc); free(queue); free(path)
        raise MemoryError()

    cdef long cnt = 0, e
    cdef int i, u, v, w, qh, qt, plen, k
    cdef int64_t flow = 0, aug, c
    for i in range(nn):
        head[i] = -1
    for v in range(n):
        c = _INF if (v == s or v == t) else caps[v]
        to_[cnt] = 2 * v + 1; cap[cnt] = c; nxt[cnt] = head[2 * v]; head[2 * v] = <int32_t>cnt; cnt += 1
        to_[cnt] = 2 * v; cap[cnt] = 0; nxt[cnt] = head[2 * v + 1]; head[2 * v + 1] = <int32_t>cnt; cnt += 1
    for u in range(n):
        for e in range(indptr[u], indptr[u + 1]):
            w = indices[e]
            to_[cnt] = 2 * w; cap[cnt] = _INF; nxt[cnt] = head[2 * u + 1]; head[2 * u + 1] = <int32_t>cnt; cnt += 1
            to_[cnt] = 2 * u + 1; cap[cnt] = 0; nxt[cnt] = head[2 * w]; head[2 * w] = <int32_t>cnt; cnt += 1

    cdef int source = 2 * s + 1, sink = 2 * t

    while flow < cutoff:
        for i in range(nn):
            level[i] = -1
        level[source] = 0
        queue[0] = source
        qh = 0; qt = 1
        while qh < qt:
            u = queue[qh]; qh += 1
            e = head[u]
            while e != -1:
                v = to_[e]
                if cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue[qt] = v; qt += 1
                e = nxt[e]
        if level[sink] < 0:
            break
        for i in range(nn):
            itarc[i] = head[i]
        u = source
        plen = 0
        while flow < cutoff:
            e = itarc[u]
            while e != -1 and not (cap[e] > 0 and level[to_[e]] == level[u] + 1):
                e = nxt[e]
            itarc[u] = <int32_t>e
            if e == -1:
                level[u] = -1
                if u == source:
                    break
                e = path[plen - 1]; plen -= 1
                u = source if plen == 0 else to_[path[plen - 1]]
                itarc[u] = nxt[e]
            else:
                path[plen] = <int32_t>e; plen += 1
                u = to_[e]
                if u == sink:
                    aug = cutoff - flow
                    for k in range(plen):
                        if cap[path[k]] < aug:
                            aug = cap[path[k]]
                    for k in range(plen):
                        cap[path[k]] -= aug
                        cap[path[k] ^ 1] += aug
                    flow += aug
                    if flow >= cutoff:
                        break
                    k = 0
                    while cap[path[k]] > 0:
                        k += 1
                    plen = k
                    u = source if plen == 0 else to_[path[plen - 1]]

    cdef object result
    if flow >= cutoff:
        result = (int(cutoff), None)
    else:
        # residual reachability from the source; level doubles as 'seen'
        for i in range(nn):
            level[i] = 0
        level[source] = 1
        queue[0] = source
        qh = 0; qt = 1
        while qh < qt:
            u = queue[qh]; qh += 1
            e = head[u]
            while e != -1:
                v = to_[e]
                if cap[e] > 0 and level[v] == 0:
                    level[v] = 1
                    queue[qt] = v; qt += 1
                e = nxt[e]
        cut = []
        for v in range(n):
            if level[2 * v] == 1 and level[2 * v + 1] == 0:
                cut.append(v)
        result = (int(flow), cut)

    free(to_); free(cap); free(nxt); free(head)
    free(level); free(itarc); free(queue); free(path)
    return result


cdef inline int _comps(uint64_t* rows, uint64_t alive) nogil:
    cdef uint64_t remaining = alive, comp, frontier, reach, f, b
    cdef int count = 0
    while remaining:
        count += 1
        comp = remaining & (~remaining + 1)
        frontier = comp
        while frontier:
            reach = 0
            f = frontier
            while f:
                b = f & (~f + 1)
                reach |= rows[__builtin_ctzll(b)]
                f ^= b
            frontier = reach & remaining & (~comp)
            comp |= frontier
        remaining &= ~comp
    return count


def components_count(uint64_t[::1] rows, alive):
    """Number of connected components among the vertices in the alive mask."""
    if rows.shape[0] == 0:
        return 0
    return _comps(&rows[0], <uint64_t>alive)


def min_sepset_bruteforce(uint64_t[::1] rows_mv, int n, int base_comps, int max_k):
    """Smallest separating subset in (size, index-lex) order, or (-1, 0)."""
    if n < 1 or n > 64:
        raise ValueError("compiled subset search requires 1 <= n <= 64")
    cdef uint64_t* rows = &rows_mv[0]
    cdef uint64_t alive_all = <uint64_t>0 - 1 if n == 64 else ((<uint64_t>1 << n) - 1)
    cdef int comb[64]
    cdef uint64_t mask
    cdef int k, i, j
    for k in range(1, max_k + 1):
        if k > n:
            break
        for i in range(k):
            comb[i] = i
        while True:
            mask = 0
            for i in range(k):
                mask |= <uint64_t>1 << comb[i]
            if _comps(rows, alive_all & ~mask) > base_comps:
                return k, int(mask)
            i = k - 1
            while i >= 0 and comb[i] == n - k + i:
                i -= 1
            if i < 0:
                break
            comb[i] += 1
            for j in range(i + 1, k):
                comb[j] = comb[j - 1] + 1
    return -1, 0


def minimal_sepsets_upto(uint64_t[::1] rows_mv, int n, int base_comps, int max_k):
    """All minimal separating subsets of size <= max_k, in (size, lex) order."""
    if n < 1 or n > 64:
        raise ValueError("compiled subset search requires 1 <= n <= 64")
    cdef uint64_t* rows = &rows_mv[0]
    cdef uint64_t alive_all = <uint64_t>0 - 1 if n == 64 else ((<uint64_t>1 << n) - 1)
    cdef int comb[64]
    cdef uint64_t mask
    cdef int k, i, j
    cdef bint minimal
    out = []
    for k in range(1, max_k + 1):
        if k > n:
            break
        for i in range(k):
            comb[i] = i
        while True:
            mask = 0
            for i in range(k):
                mask |= <uint64_t>1 << comb[i]
            if _comps(rows, alive_all & ~mask) > base_comps:
                minimal = True
                for i in range(k):
                    if _comps(rows, alive_all & ~(mask ^ (<uint64_t>1 << comb[i]))) > base_comps:
                        minimal = False
                        break
                if minimal:
                    out.append(int(mask))
            i = k - 1
            while i >= 0 and comb[i] == n - k + i:
                i -= 1
            if i < 0:
                break
            comb[i] += 1
            for j in range(i + 1, k):
                comb[j] = comb[j - 1] + 1
    return out
