"""Components, separating-set verdicts, and exact vertex connectivity.

Three routes to the connectivity number are provided and must agree:

* direct max-flow over a covering family of vertex pairs (a fixed
  minimum-degree vertex against its non-neighbors, plus all non-adjacent
  pairs among its neighbors, which is guaranteed to witness the minimum);
* a capacitated minimum cut on the class-quotient graph, valid for power
  graphs because every minimal separating set is a union of classes;
* brute-force ascending-cardinality subset search, the oracle for both.

All operations are pure over immutable graphs and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pglab import kernels
from pglab.powergraph import ClassPartition, Graph, bits_of, mask_of, quotient_graph

__all__ = [
    "DEFAULT_BRUTE_CAP",
    "DEFAULT_FLOW_CAP",
    "CapExceededError",
    "ConnectivityResult",
    "SepSetReport",
    "brute_force_min_sepset",
    "components",
    "enumerate_minimal_sepsets",
    "is_minimal_separating",
    "is_separating",
    "local_connectivity",
    "vertex_connectivity",
    "vertex_connectivity_via_quotient",
]

DEFAULT_FLOW_CAP = 2000
DEFAULT_BRUTE_CAP = 22


class CapExceededError(RuntimeError):
    """Input exceeds a configured size cap; nothing was computed."""


@dataclass(frozen=True)
class ConnectivityResult:
    """Exact connectivity with a witness minimum separating set.

    The witness is empty for complete, trivial, and disconnected graphs;
    otherwise removing it disconnects the graph and its size equals kappa.
    """

    kappa: int
    witness: tuple[int, ...]
    method: str  # direct_flow | quotient_cut | brute_force


@dataclass(frozen=True)
class SepSetReport:
    """Verdict on a candidate separating set.

    is_minimal is None when minimality was not evaluated.
    """

    candidate: tuple[int, ...]
    is_separating: bool
    components_after_removal: int
    is_minimal: bool | None = None


def components(graph: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists; empty for the null graph."""
    remaining = graph.full_mask
    out = []
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            reach = 0
            for v in bits_of(frontier):
                reach |= graph.rows[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        out.append(bits_of(comp))
        remaining &= ~comp
    return out


def _validate_subset(graph: Graph, s) -> frozenset[int]:
    sset = frozenset(s)
    for v in sset:
        if not 0 <= v < graph.vertex_count:
            raise ValueError(f"vertex {v} out of range")
    return sset


def is_separating(graph: Graph, s) -> SepSetReport:
    """Does removing s increase the number of components?"""
    sset = _validate_subset(graph, s)
    if len(sset) == graph.vertex_count:
        raise ValueError("candidate set must be a proper subset of the vertices")
    base = len(components(graph))
    alive = graph.full_mask & ~mask_of(sset)
    after = kernels.components_count(graph.rows, graph.vertex_count, alive)
    return SepSetReport(tuple(sorted(sset)), after > base, after)


def is_minimal_separating(graph: Graph, s) -> SepSetReport:
    """Separating verdict plus minimality.

    Minimality is decided by the single-removal test: s is minimal iff it
    separates and no s - {x} does. Dropping one vertex at a time loses no
    generality: among separating proper subsets of s, a maximal one is
    always a co-singleton.
    """
    sset = _validate_subset(graph, s)
    if not sset:
        raise ValueError("candidate set must be nonempty")
    if len(sset) == graph.vertex_count:
        raise ValueError("candidate set must be a proper subset of the vertices")
    base = len(components(graph))
    full = graph.full_mask
    mask = mask_of(sset)
    after = kernels.components_count(graph.rows, graph.vertex_count, full & ~mask)
    if after <= base:
        return SepSetReport(tuple(sorted(sset)), False, after, False)
    minimal = True
    for x in sorted(sset):
        sub_after = kernels.components_count(
            graph.rows, graph.vertex_count, full & ~(mask ^ (1 << x))
        )
        if sub_after > base:
            minimal = False
            break
    return SepSetReport(tuple(sorted(sset)), True, after, minimal)


def _unit_caps(n: int) -> np.ndarray:
    return np.ones(n, dtype=np.int64)


def local_connectivity(graph: Graph, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint u,v-paths.

    Equals the minimum u,v vertex cut (unit-capacity max flow on the split
    digraph); u and v must be distinct and non-adjacent.
    """
    n = graph.vertex_count
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError("vertex out of range")
    if u == v:
        raise ValueError("local connectivity needs two distinct vertices")
    if graph.adjacent(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent; no finite cut exists")
    indptr, indices = graph.csr()
    value, _ = kernels.st_vertex_cut(n, indptr, indices, _unit_caps(n), u, v)
    return value


def vertex_connectivity(graph: Graph, *, flow_cap: int = DEFAULT_FLOW_CAP) -> ConnectivityResult:
    """Exact vertex connectivity with a witness minimum separating set.

    kappa is 0 for null, trivial, and disconnected graphs and n-1 for
    complete graphs (empty witness by convention). Otherwise the minimum is
    taken over max-flow cuts for a covering pair family: a fixed vertex u of
    minimum degree against every non-neighbor, plus every non-adjacent pair
    of neighbors of u. Any minimum cut either misses u (then u is separated
    from some non-neighbor) or contains u and, being minimal, touches two
    components through neighbors of u, so the family always sees it.
    """
    n = graph.vertex_count
    if n == 0:
        return ConnectivityResult(0, (), "direct_flow")
    if graph.is_complete():
        return ConnectivityResult(n - 1, (), "direct_flow")
    if len(components(graph)) > 1:
        return ConnectivityResult(0, (), "direct_flow")
    if n > flow_cap:
        raise CapExceededError(f"graph has {n} vertices, direct-flow cap is {flow_cap}")

    degrees = [graph.degree(v) for v in range(n)]
    u = min(range(n), key=lambda v: (degrees[v], v))
    neighbors = graph.neighbors(u)
    # N(u) itself separates u from its non-neighbors, so it is a valid
    # starting witness; flows only replace it with strictly smaller cuts.
    kappa = degrees[u]
    witness = tuple(neighbors)
    indptr, indices = graph.csr()
    caps = _unit_caps(n)

    for w in range(n):
        if w != u and not graph.adjacent(u, w):
            value, cut = kernels.st_vertex_cut(n, indptr, indices, caps, u, w, kappa)
            if cut is not None and value < kappa:
                kappa, witness = value, tuple(cut)
    for i, x in enumerate(neighbors):
        for y in neighbors[i + 1 :]:
            if not graph.adjacent(x, y):
                value, cut = kernels.st_vertex_cut(n, indptr, indices, caps, x, y, kappa)
                if cut is not None and value < kappa:
                    kappa, witness = value, tuple(cut)
    return ConnectivityResult(kappa, witness, "direct_flow")


def vertex_connectivity_via_quotient(graph: Graph, classes: ClassPartition) -> ConnectivityResult:
    """Exact connectivity via a capacitated cut on the class quotient.

    Because minimum separating sets of power graphs are unions of
    subgroup-equality classes, kappa equals the least weighted vertex cut
    between non-adjacent quotient nodes, with node capacity = class size.
    The witness expands the cut's classes back to vertices. Rejects
    complete graphs, where no separating set exists.
    """
    if graph.vertex_count == 0 or graph.is_complete():
        raise ValueError("complete (or null) graph has no separating set")
    quotient = quotient_graph(graph, classes)
    if len(components(graph)) > 1:
        return ConnectivityResult(0, (), "quotient_cut")

    k = quotient.node_count
    indptr = np.zeros(k + 1, dtype=np.int32)
    chunks: list[int] = []
    for a in range(k):
        nb = bits_of(quotient.rows[a])
        indptr[a + 1] = indptr[a] + len(nb)
        chunks.extend(nb)
    indices = np.array(chunks, dtype=np.int32)
    caps = np.array(quotient.weights, dtype=np.int64)

    best_value: int | None = None
    best_cut: list[int] | None = None
    for a in range(k):
        for b in range(a + 1, k):
            if quotient.adjacent(a, b):
                continue
            cutoff = kernels.INF if best_value is None else best_value
            value, cut = kernels.st_vertex_cut(k, indptr, indices, caps, a, b, cutoff)
            if cut is not None and (best_value is None or value < best_value):
                best_value, best_cut = value, cut
    if best_value is None:
        # non-complete graph with uniform classes always has a non-adjacent pair
        raise AssertionError("quotient of a non-complete graph must have a non-adjacent pair")
    witness = sorted(
        v for node in best_cut for v in classes.blocks[quotient.node_block[node]]
    )
    if len(witness) != best_value:
        raise AssertionError("quotient cut weight does not match expanded witness")
    return ConnectivityResult(best_value, tuple(witness), "quotient_cut")


def brute_force_min_sepset(graph: Graph, *, cap: int = DEFAULT_BRUTE_CAP) -> ConnectivityResult:
    """Exact minimum separating set by ascending-cardinality subset search.

    The oracle route: no structure is assumed beyond the adjacency matrix.
    kappa = n - 1 with an empty witness when no separating set exists
    (complete graphs).
    """
    n = graph.vertex_count
    if n == 0:
        return ConnectivityResult(0, (), "brute_force")
    if n > cap:
        raise CapExceededError(f"graph has {n} vertices, brute-force cap is {cap}")
    if graph.is_complete():
        return ConnectivityResult(n - 1, (), "brute_force")
    base = len(components(graph))
    if base > 1:
        return ConnectivityResult(0, (), "brute_force")
    size, mask = kernels.min_sepset_bruteforce(graph.rows, n, base, max(n - 2, 0))
    if size < 0:
        raise AssertionError("non-complete connected graph must have a separating set")
    return ConnectivityResult(size, tuple(bits_of(mask)), "brute_force")


def enumerate_minimal_sepsets(
    graph: Graph, max_size: int, *, cap: int = DEFAULT_BRUTE_CAP
) -> list[tuple[int, ...]]:
    """All minimal separating sets of size <= max_size, deterministically.

    Exhaustive subset search in (size, index-lex) order with the
    single-removal minimality filter; results are deduplicated by
    construction.
    """
    n = graph.vertex_count
    if max_size < 1:
        raise ValueError(f"max_size must be >= 1, got {max_size}")
    if n > cap:
        raise CapExceededError(f"graph has {n} vertices, enumeration cap is {cap}")
    if n == 0:
        return []
    base = len(components(graph))
    masks = kernels.minimal_sepsets_upto(graph.rows, n, base, min(max_size, n - 1))
    return [tuple(bits_of(m)) for m in masks]
