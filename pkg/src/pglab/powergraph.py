"""Power graphs, reduced graphs, equivalence classes, and class quotients.

The power graph of a finite group joins distinct elements x, y whenever one
lies in the cyclic subgroup generated by the other. Removing the identity
gives the proper power graph; for Z_n, additionally removing the generators
gives the reduced graph. Elements generating equal cyclic subgroups form
equivalence classes, and adjacency is uniform across any pair of classes,
which makes the vertex-weighted class quotient well defined.

Adjacency is stored as one arbitrary-precision bitmask per vertex, so
neighborhoods, induced subgraphs, and sweeps are word-parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from pglab.groups import CyclicGroup, FiniteGroup
from pglab.numtheory import divisors, euler_phi, is_prime

__all__ = [
    "ClassPartition",
    "Graph",
    "NullGraphError",
    "QuotientGraph",
    "QuotientStructureError",
    "bits_of",
    "build_power_graph",
    "build_power_graph_zn_fast",
    "build_proper_power_graph",
    "build_reduced_graph",
    "equiv_classes",
    "generator_set_szn",
    "neighborhood",
    "nbd_union_formula",
    "quotient_graph",
    "reduced_class_neighborhood",
    "restrict_classes",
]


class NullGraphError(ValueError):
    """Signals that a requested induced graph has no vertices."""


class QuotientStructureError(ValueError):
    """The given partition is not clique-blocked with uniform cross adjacency."""


def bits_of(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph with bit-packed adjacency rows.

    Immutable after construction. `labels` carry display names and
    `source_ids` track original vertex identities through induced
    subgraphs, so reduced-graph reports can still speak in group elements.
    The null graph (no vertices) and the trivial graph are legal values.
    """

    __slots__ = ("vertex_count", "rows", "labels", "source_ids", "_csr", "_src_index")

    def __init__(self, rows, labels=None, source_ids=None):
        n = len(rows)
        self.vertex_count = n
        self.rows = tuple(rows)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self.source_ids = (
            tuple(source_ids) if source_ids is not None else tuple(range(n))
        )
        if len(self.labels) != n:
            raise ValueError("labels length does not match vertex count")
        if len(self.source_ids) != n:
            raise ValueError("source_ids length does not match vertex count")
        for v, row in enumerate(self.rows):
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row < 0 or row >> n:
                raise ValueError(f"adjacency bits out of range in row {v}")
        self._csr = None
        self._src_index = None

    # -- basic queries ----------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def neighbors(self, u: int) -> list[int]:
        return bits_of(self.rows[u])

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self):
        """Yield edges (u, v) with u < v, lexicographically ascending."""
        for u in range(self.vertex_count):
            m = self.rows[u] >> (u + 1)
            while m:
                b = m & -m
                yield (u, u + 1 + b.bit_length() - 1)
                m ^= b

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(self.rows[u] == full ^ (1 << u) for u in range(self.vertex_count))

    def validate_symmetric(self) -> None:
        """O(E) symmetry audit; builders produce symmetric rows by design."""
        for u in range(self.vertex_count):
            for v in self.neighbors(u):
                if not self.adjacent(v, u):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # -- derived structures ------------------------------------------------

    def induced(self, vertices) -> Graph:
        """Induced subgraph on the given vertices (ascending index order)."""
        kept = sorted(set(vertices))
        if any(not 0 <= v < self.vertex_count for v in kept):
            raise ValueError("induced subgraph vertices out of range")
        remap = {old: new for new, old in enumerate(kept)}
        rows = []
        for old in kept:
            row = self.rows[old]
            new_row = 0
            for w in kept:
                if (row >> w) & 1:
                    new_row |= 1 << remap[w]
            rows.append(new_row)
        return Graph(
            rows,
            labels=[self.labels[v] for v in kept],
            source_ids=[self.source_ids[v] for v in kept],
        )

    def index_of_source(self, source_id: int) -> int:
        """Vertex index carrying the given original id."""
        if self._src_index is None:
            self._src_index = {s: i for i, s in enumerate(self.source_ids)}
        return self._src_index[source_id]

    def indices_of_sources(self, source_ids) -> set[int]:
        return {self.index_of_source(s) for s in source_ids}

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Cached CSR adjacency (indptr, indices) for the flow kernels."""
        if self._csr is None:
            indptr = np.zeros(self.vertex_count + 1, dtype=np.int32)
            chunks = []
            for u in range(self.vertex_count):
                nb = self.neighbors(u)
                indptr[u + 1] = indptr[u] + len(nb)
                chunks.extend(nb)
            self._csr = (indptr, np.array(chunks, dtype=np.int32))
        return self._csr

    # -- exports -----------------------------------------------------------

    def to_edge_lines(self) -> str:
        """One `u v` line per edge by label, sorted by vertex index."""
        return "".join(f"{self.labels[u]} {self.labels[v]}\n" for u, v in self.edges())

    def to_dot(self, name: str = "g") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.vertex_count):
            lines.append(f'  "{self.labels[v]}";')
        for u, v in self.edges():
            lines.append(f'  "{self.labels[u]}" -- "{self.labels[v]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count()})"


@dataclass(frozen=True)
class ClassPartition:
    """Partition of vertices by equality of generated cyclic subgroups.

    Blocks are sorted ascending; `representatives[b]` is the canonical
    member of block b (for Z_n the divisor gcd(a, n), with 0 for the
    identity class; the least member index otherwise).
    """

    blocks: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    representatives: tuple[int, ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_mask(self, b: int) -> int:
        return mask_of(self.blocks[b])


@dataclass(frozen=True)
class QuotientGraph:
    """Vertex-weighted quotient of a graph by an adjacency-uniform partition."""

    weights: tuple[int, ...]
    rows: tuple[int, ...]
    node_block: tuple[int, ...]

    @property
    def node_count(self) -> int:
        return len(self.weights)

    def adjacent(self, a: int, b: int) -> bool:
        return bool((self.rows[a] >> b) & 1)


# -- power graph builders ---------------------------------------------------


def build_power_graph(group: FiniteGroup) -> Graph:
    """Power graph of a finite group from the group operation alone."""
    n = group.order
    op = group.op
    identity = group.identity
    sub = [0] * n  # sub[x] = bitmask of the cyclic subgroup generated by x
    for x in range(n):
        mask = 1 << identity
        cur = x
        while cur != identity:
            mask |= 1 << cur
            cur = op(cur, x)
        sub[x] = mask
    gen_by = [0] * n  # gen_by[u] = bitmask of x with u in <x>
    for x in range(n):
        m = sub[x]
        bit = 1 << x
        while m:
            low = m & -m
            gen_by[low.bit_length() - 1] |= bit
            m ^= low
    rows = [(sub[u] | gen_by[u]) & ~(1 << u) for u in range(n)]
    return Graph(rows, labels=[group.label(i) for i in range(n)])


@lru_cache(maxsize=512)
def build_power_graph_zn_fast(n: int) -> Graph:
    """Power graph of Z_n via the gcd rule.

    Distinct a, b are adjacent iff gcd(a, n) and gcd(b, n) divide one
    another; agrees edge-for-edge with build_power_graph(build_cyclic(n)).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    divs = divisors(n)
    class_mask = {d: 0 for d in divs}
    class_mask[n] |= 1  # vertex 0
    for a in range(1, n):
        class_mask[gcd(a, n)] |= 1 << a
    nbr_mask = {}
    for d in divs:
        m = 0
        for e in divs:
            if d % e == 0 or e % d == 0:
                m |= class_mask[e]
        nbr_mask[d] = m
    rows = [0] * n
    rows[0] = nbr_mask[n] & ~1
    for a in range(1, n):
        rows[a] = nbr_mask[gcd(a, n)] & ~(1 << a)
    return Graph(rows, labels=[str(i) for i in range(n)])


def build_proper_power_graph(group: FiniteGroup) -> Graph:
    """Power graph with the identity vertex removed."""
    full = build_power_graph(group)
    return full.induced(range(1, group.order))


def generator_set_szn(n: int) -> set[int]:
    """The identity together with all generators of Z_n (universal vertices)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return {0} | {a for a in range(1, n) if gcd(a, n) == 1}


@lru_cache(maxsize=512)
def build_reduced_graph(n: int) -> Graph:
    """Power graph of Z_n with the identity and all generators removed.

    Raises NullGraphError for prime n, where nothing remains; callers
    decide how to surface the null graph.
    """
    if n < 2:
        raise ValueError(f"reduced graph requires n >= 2, got {n}")
    if is_prime(n):
        raise NullGraphError(f"the reduced graph of Z_{n} is the null graph")
    full = build_power_graph_zn_fast(n)
    keep = sorted(set(range(n)) - generator_set_szn(n))
    return full.induced(keep)


# -- equivalence classes ------------------------------------------------------


def equiv_classes(group: FiniteGroup) -> ClassPartition:
    """Partition of group elements by equality of generated subgroups.

    For cyclic groups the representative of a nonzero class is the divisor
    gcd(a, n) (a member of its own class); the identity class keeps 0.
    """
    n = group.order
    if isinstance(group, CyclicGroup):
        members: dict[int, list[int]] = {}
        for a in range(n):
            rep = gcd(a, n) if a else 0
            members.setdefault(rep, []).append(a)
        reps = sorted(members)
        blocks = tuple(tuple(members[r]) for r in reps)
    else:
        from pglab.groups import cyclic_subgroup

        by_subgroup: dict[int, list[int]] = {}
        for x in range(n):
            key = mask_of(cyclic_subgroup(group, x))
            by_subgroup.setdefault(key, []).append(x)
        block_list = sorted(by_subgroup.values(), key=lambda b: b[0])
        blocks = tuple(tuple(b) for b in block_list)
        reps = [b[0] for b in blocks]
    class_of = [0] * n
    for b, block in enumerate(blocks):
        for v in block:
            class_of[v] = b
    return ClassPartition(blocks, tuple(class_of), tuple(reps))


def restrict_classes(classes: ClassPartition, kept) -> ClassPartition:
    """Restrict a partition to an induced subgraph's kept vertices.

    Every block must be kept whole or dropped whole (removing part of a
    class would break adjacency uniformity); kept vertices are renumbered
    in ascending order, matching Graph.induced.
    """
    kept_sorted = sorted(set(kept))
    kept_set = set(kept_sorted)
    remap = {old: new for new, old in enumerate(kept_sorted)}
    blocks = []
    reps = []
    for b, block in enumerate(classes.blocks):
        inside = [v for v in block if v in kept_set]
        if not inside:
            continue
        if len(inside) != len(block):
            raise ValueError(f"class {b} is split by the kept vertex set")
        blocks.append(tuple(remap[v] for v in block))
        reps.append(remap[classes.representatives[b]])
    class_of = [0] * len(kept_sorted)
    for b, block in enumerate(blocks):
        for v in block:
            class_of[v] = b
    return ClassPartition(tuple(blocks), tuple(class_of), tuple(reps))


# -- neighborhoods ------------------------------------------------------------


def neighborhood(graph: Graph, vertices) -> set[int]:
    """All vertices outside the given set adjacent to some member of it."""
    vs = set(vertices)
    if any(not 0 <= v < graph.vertex_count for v in vs):
        raise ValueError("vertex out of range")
    m = 0
    for v in vs:
        m |= graph.rows[v]
    return set(bits_of(m & ~mask_of(vs)))


def reduced_class_neighborhood(n: int, a: int) -> set[int]:
    """Neighborhood of the class of a in Z_n, minus identity and generators.

    Computed directly from power-graph adjacency; `a` must be neither 0 nor
    coprime to n (those vertices are universal and have no reduced class).
    Returned as residues of Z_n.
    """
    if not 0 <= a < n:
        raise ValueError(f"a={a} out of range for Z_{n}")
    if a == 0 or gcd(a, n) == 1:
        raise ValueError(f"a={a} is the identity or a generator of Z_{n}")
    graph = build_power_graph_zn_fast(n)
    d = gcd(a, n)
    cls = {x for x in range(1, n) if gcd(x, n) == d}
    return neighborhood(graph, cls) - generator_set_szn(n)


def nbd_union_formula(n: int, a: int) -> set[int]:
    """Reduced class neighborhood as a union of divisor classes (cross-check).

    With b = gcd(a, n): the classes of proper divisors c of b with c > 1,
    together with the classes of proper multiples d of b dividing n.
    """
    if not 0 <= a < n:
        raise ValueError(f"a={a} out of range for Z_{n}")
    if a == 0 or gcd(a, n) == 1:
        raise ValueError(f"a={a} is the identity or a generator of Z_{n}")
    b = gcd(a, n)
    out: set[int] = set()
    for c in divisors(b):
        if 1 < c < b:
            out |= {x for x in range(1, n) if gcd(x, n) == c}
    for d in divisors(n):
        if b < d < n and d % b == 0:
            out |= {x for x in range(1, n) if gcd(x, n) == d}
    return out


# -- quotient -----------------------------------------------------------------


def quotient_graph(graph: Graph, classes: ClassPartition) -> QuotientGraph:
    """Vertex-weighted quotient of a graph by its subgroup-equality classes.

    Requires every block to be a clique and cross-block adjacency to be
    all-or-none; violations raise QuotientStructureError since they
    indicate a malformed partition rather than a user error.
    """
    n = graph.vertex_count
    if len(classes.class_of) != n:
        raise ValueError("partition does not match the graph's vertex count")
    seen = [False] * n
    for block in classes.blocks:
        for v in block:
            if not 0 <= v < n or seen[v]:
                raise ValueError("blocks do not partition the vertex set")
            seen[v] = True
    if not all(seen):
        raise ValueError("blocks do not partition the vertex set")

    masks = [classes.block_mask(b) for b in range(classes.block_count)]
    for b, block in enumerate(classes.blocks):
        for v in block:
            expected = masks[b] & ~(1 << v)
            if graph.rows[v] & masks[b] != expected:
                raise QuotientStructureError(f"block {b} is not a clique at vertex {v}")

    k = classes.block_count
    rows = [0] * k
    for a in range(k):
        for b in range(a + 1, k):
            patterns = {1 if graph.rows[v] & masks[b] == masks[b] else (0 if graph.rows[v] & masks[b] == 0 else -1) for v in classes.blocks[a]}
            if patterns == {1}:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
            elif patterns != {0}:
                raise QuotientStructureError(
                    f"adjacency between blocks {a} and {b} is not uniform"
                )
    return QuotientGraph(
        weights=classes.sizes(),
        rows=tuple(rows),
        node_block=tuple(range(k)),
    )
