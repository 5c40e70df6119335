"""Pure-Python reference implementations of the hot kernels.

Mirrors pglab._core (the compiled extension) function for function; the
dispatcher in pglab.kernels picks whichever is available. Augmentation
and enumeration orders are identical in both, so outputs match exactly
and the test suite compares them directly.
"""

from __future__ import annotations

from itertools import combinations

INF = 1 << 62


def st_vertex_cut(n, indptr, indices, caps, s, t, cutoff=INF):
    """Minimum weighted vertex cut separating non-adjacent s from t.

    Runs max-flow on the split digraph: vertex v becomes v_in=2v, v_out=2v+1
    joined by an arc of capacity caps[v] (unbounded for s and t); every
    undirected edge u~w contributes unbounded arcs u_out->w_in, w_out->u_in.
    By max-flow/min-cut the flow value equals the least total capacity of
    vertices whose removal disconnects s from t.

    Returns (value, cut) with cut a sorted vertex list when value < cutoff;
    (cutoff, None) means the cut is at least cutoff and was abandoned early.
    """
    indptr = list(indptr)
    indices = list(indices)
    caps = list(caps)
    nn = 2 * n
    to: list[int] = []
    cap: list[int] = []
    nxt: list[int] = []
    head = [-1] * nn

    def add_edge(u, v, c):
        to.append(v)
        cap.append(c)
        nxt.append(head[u])
        head[u] = len(to) - 1
        to.append(u)
        cap.append(0)
        nxt.append(head[v])
        head[v] = len(to) - 1

    for v in range(n):
        add_edge(2 * v, 2 * v + 1, INF if v == s or v == t else caps[v])
    for u in range(n):
        for e in range(indptr[u], indptr[u + 1]):
            add_edge(2 * u + 1, 2 * indices[e], INF)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    level = [-1] * nn
    itarc = [0] * nn
    queue = [0] * nn
    path: list[int] = []

    while flow < cutoff:
        for i in range(nn):
            level[i] = -1
        level[source] = 0
        queue[0] = source
        qh, qt = 0, 1
        while qh < qt:
            u = queue[qh]
            qh += 1
            e = head[u]
            while e != -1:
                v = to[e]
                if cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue[qt] = v
                    qt += 1
                e = nxt[e]
        if level[sink] < 0:
            break
        for i in range(nn):
            itarc[i] = head[i]
        u = source
        path.clear()
        while flow < cutoff:
            e = itarc[u]
            while e != -1 and not (cap[e] > 0 and level[to[e]] == level[u] + 1):
                e = nxt[e]
            itarc[u] = e
            if e == -1:
                level[u] = -1
                if u == source:
                    break
                e = path.pop()
                u = source if not path else to[path[-1]]
                itarc[u] = nxt[e]
            else:
                path.append(e)
                u = to[e]
                if u == sink:
                    aug = cutoff - flow
                    for a in path:
                        if cap[a] < aug:
                            aug = cap[a]
                    for a in path:
                        cap[a] -= aug
                        cap[a ^ 1] += aug
                    flow += aug
                    if flow >= cutoff:
                        break
                    k = 0
                    while cap[path[k]] > 0:
                        k += 1
                    del path[k:]
                    u = source if not path else to[path[-1]]

    if flow >= cutoff:
        return cutoff, None

    seen = [False] * nn
    seen[source] = True
    stack = [source]
    while stack:
        u = stack.pop()
        e = head[u]
        while e != -1:
            v = to[e]
            if cap[e] > 0 and not seen[v]:
                seen[v] = True
                stack.append(v)
            e = nxt[e]
    cut = [v for v in range(n) if seen[2 * v] and not seen[2 * v + 1]]
    return flow, cut


def components_count(rows, alive):
    """Number of connected components among the vertices in the alive mask."""
    remaining = alive
    count = 0
    while remaining:
        count += 1
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            reach = 0
            f = frontier
            while f:
                b = f & -f
                reach |= rows[b.bit_length() - 1]
                f ^= b
            frontier = reach & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
    return count


def min_sepset_bruteforce(rows, n, base_comps, max_k):
    """Smallest separating subset, searched in (size, index-lex) order.

    Returns (size, mask) for the first subset whose removal increases the
    component count beyond base_comps, or (-1, 0) if none exists with
    size <= max_k.
    """
    alive_all = (1 << n) - 1
    for k in range(1, max_k + 1):
        for comb in combinations(range(n), k):
            mask = 0
            for v in comb:
                mask |= 1 << v
            if components_count(rows, alive_all & ~mask) > base_comps:
                return k, mask
    return -1, 0


def minimal_sepsets_upto(rows, n, base_comps, max_k):
    """All minimal separating subsets of size <= max_k, in (size, lex) order.

    A separating set is minimal iff dropping any single member stops it
    separating; for finite graphs this single-removal test is equivalent to
    checking all proper subsets.
    """
    alive_all = (1 << n) - 1
    out = []
    for k in range(1, max_k + 1):
        for comb in combinations(range(n), k):
            mask = 0
            for v in comb:
                mask |= 1 << v
            if components_count(rows, alive_all & ~mask) <= base_comps:
                continue
            minimal = True
            for v in comb:
                if components_count(rows, alive_all & ~(mask ^ (1 << v))) > base_comps:
                    minimal = False
                    break
            if minimal:
                out.append(mask)
    return out
