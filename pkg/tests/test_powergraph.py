from math import gcd

import pytest

from pglab.connectivity import components
from pglab.groups import build_abelian_p, build_cyclic
from pglab.numtheory import divisors, euler_phi, factorize
from pglab.powergraph import (
    ClassPartition,
    Graph,
    NullGraphError,
    QuotientStructureError,
    build_power_graph,
    build_power_graph_zn_fast,
    build_proper_power_graph,
    build_reduced_graph,
    equiv_classes,
    generator_set_szn,
    nbd_union_formula,
    neighborhood,
    quotient_graph,
    reduced_class_neighborhood,
    restrict_classes,
)


def zn_graph(n):
    return build_power_graph_zn_fast(n)


def reduced_with_classes(n):
    reduced = build_reduced_graph(n)
    kept = list(reduced.source_ids)
    return reduced, restrict_classes(equiv_classes(build_cyclic(n)), kept)


# -- Graph type ---------------------------------------------------------------


def test_graph_rejects_self_loops_and_bad_rows():
    with pytest.raises(ValueError):
        Graph([1])  # bit 0 set in row 0
    with pytest.raises(ValueError):
        Graph([4, 0])  # bit beyond vertex count
    with pytest.raises(ValueError):
        Graph([0, 0], labels=["a"])


def test_null_and_trivial_graphs_are_values():
    null = Graph([])
    assert null.vertex_count == 0 and list(null.edges()) == []
    assert null.is_complete()
    trivial = Graph([0])
    assert trivial.vertex_count == 1 and trivial.is_complete()


def test_induced_subgraph_preserves_labels_and_sources():
    g = zn_graph(12)
    sub = g.induced([2, 3, 6])
    assert sub.labels == ("2", "3", "6")
    assert sub.source_ids == (2, 3, 6)
    assert sub.adjacent(0, 2) and sub.adjacent(1, 2) and not sub.adjacent(0, 1)
    assert sub.index_of_source(6) == 2


def test_edge_lines_and_dot_are_deterministic():
    g = build_reduced_graph(6)
    assert g.to_edge_lines() == "2 4\n"
    assert g.to_edge_lines() == g.to_edge_lines()
    dot = g.to_dot("r")
    assert dot.startswith("graph r {") and '"2" -- "4";' in dot
    assert dot == g.to_dot("r")


# -- builders -----------------------------------------------------------------


def test_power_graph_examples():
    assert build_power_graph(build_cyclic(4)).is_complete()
    g6 = build_power_graph(build_cyclic(6))
    assert not g6.adjacent(2, 3)
    trivial = build_power_graph(build_cyclic(1))
    assert trivial.vertex_count == 1 and trivial.edge_count() == 0


def test_zn_fast_examples():
    g12 = zn_graph(12)
    assert g12.adjacent(2, 10)
    assert not g12.adjacent(4, 6)
    assert zn_graph(7).is_complete()


def test_zn_fast_matches_generic_up_to_500():
    for n in range(1, 501):
        fast = zn_graph(n)
        generic = build_power_graph(build_cyclic(n))
        assert fast.rows == generic.rows, n


def test_proper_power_graph_examples():
    assert build_proper_power_graph(build_cyclic(5)).is_complete()
    klein = build_proper_power_graph(build_abelian_p(2, [1, 1]))
    assert klein.vertex_count == 3 and klein.edge_count() == 0
    z2z4 = build_proper_power_graph(build_abelian_p(2, [1, 2]))
    assert len(components(z2z4)) == 3


def test_generator_set_examples():
    assert generator_set_szn(12) == {0, 1, 5, 7, 11}
    assert generator_set_szn(6) == {0, 1, 5}
    assert generator_set_szn(2) == {0, 1}
    for n in range(2, 200):
        assert len(generator_set_szn(n)) == euler_phi(n) + 1


def test_reduced_graph_examples():
    assert set(build_reduced_graph(12).source_ids) == {2, 3, 4, 6, 8, 9, 10}
    r6 = build_reduced_graph(6)
    assert set(r6.source_ids) == {2, 3, 4}
    assert list(r6.edges()) == [(0, 2)]  # 2 -- 4 only; disconnected
    assert len(components(r6)) == 2
    r4 = build_reduced_graph(4)
    assert r4.vertex_count == 1 and r4.source_ids == (2,)
    with pytest.raises(NullGraphError):
        build_reduced_graph(7)
    with pytest.raises(ValueError):
        build_reduced_graph(1)


# -- classes ------------------------------------------------------------------


def test_equiv_classes_z12():
    classes = equiv_classes(build_cyclic(12))
    sizes = {classes.representatives[b]: len(block) for b, block in enumerate(classes.blocks)}
    assert sizes == {0: 1, 1: 4, 2: 2, 3: 2, 4: 2, 6: 1}


def test_equiv_classes_prime_and_30():
    assert equiv_classes(build_cyclic(7)).block_count == 2
    assert equiv_classes(build_cyclic(30)).block_count == len(divisors(30)) == 8


def test_class_count_matches_divisors_up_to_300():
    for n in range(1, 301):
        classes = equiv_classes(build_cyclic(n))
        assert classes.block_count == len(divisors(n))
        for b, block in enumerate(classes.blocks):
            rep = classes.representatives[b]
            expected = 1 if rep == 0 else euler_phi(n // rep)
            assert len(block) == expected


def test_generic_group_classes_use_least_member():
    g = build_abelian_p(2, [1, 1])
    classes = equiv_classes(g)
    assert classes.block_count == 4  # identity + three order-2 classes
    assert classes.representatives == (0, 1, 2, 3)


def test_restrict_classes_rejects_split_blocks():
    classes = equiv_classes(build_cyclic(12))
    with pytest.raises(ValueError):
        restrict_classes(classes, [1, 2, 3])  # cuts the generator class


# -- invariants ----------------------------------------------------------------


def test_power_graph_connected_up_to_256():
    from _corpus import small_group_corpus

    for group in small_group_corpus(30):
        assert len(components(build_power_graph(group))) == 1
    for n in (64, 128, 255, 256):
        assert len(components(zn_graph(n))) == 1


def test_complete_iff_prime_power_up_to_500():
    for n in range(1, 501):
        expected = n == 1 or factorize(n).num_primes == 1
        assert zn_graph(n).is_complete() == expected, n


def test_generators_universal_up_to_500():
    for n in range(2, 501):
        g = zn_graph(n)
        full = g.full_mask
        for v in generator_set_szn(n):
            assert g.rows[v] == full ^ (1 << v), (n, v)


def test_classes_are_cliques_and_adjacency_uniform_up_to_200():
    for n in range(2, 201):
        g = zn_graph(n)
        classes = equiv_classes(build_cyclic(n))
        quotient_graph(g, classes)  # raises on any clique/uniformity violation


def test_symmetry_audit_on_sample():
    for n in (2, 12, 30, 210):
        zn_graph(n).validate_symmetric()
        build_power_graph(build_cyclic(n)).validate_symmetric()


# -- neighborhoods --------------------------------------------------------------


def test_neighborhood_examples():
    g12 = zn_graph(12)
    assert neighborhood(g12, {3, 9}) == {0, 1, 5, 7, 11, 6}
    assert neighborhood(g12, set(range(12))) == set()
    assert neighborhood(g12, {0}) == set(range(1, 12))


def test_reduced_class_neighborhood_examples():
    assert reduced_class_neighborhood(12, 3) == {6}
    assert reduced_class_neighborhood(12, 4) == {2, 10}
    assert reduced_class_neighborhood(12, 2) == {4, 6, 8}
    with pytest.raises(ValueError):
        reduced_class_neighborhood(12, 5)  # generator
    with pytest.raises(ValueError):
        reduced_class_neighborhood(12, 0)


def test_reduced_class_neighborhood_matches_union_form_up_to_300():
    for n in range(4, 301):
        if factorize(n).num_primes == 0:
            continue
        szn = generator_set_szn(n)
        for d in divisors(n):
            if d in (1, n):
                continue
            # one representative per class: the neighborhood is class-determined
            assert reduced_class_neighborhood(n, d) == nbd_union_formula(n, d), (n, d)


# -- quotient -------------------------------------------------------------------


def test_quotient_of_reduced_z12():
    reduced, classes = reduced_with_classes(12)
    q = quotient_graph(reduced, classes)
    reps = [reduced.source_ids[classes.representatives[b]] for b in range(q.node_count)]
    assert reps == [2, 3, 4, 6]
    assert q.weights == (2, 2, 2, 1)
    edges = {
        (reps[a], reps[b])
        for a in range(q.node_count)
        for b in range(a + 1, q.node_count)
        if q.adjacent(a, b)
    }
    assert edges == {(2, 4), (2, 6), (3, 6)}


def test_quotient_of_reduced_pqr_is_hexagon():
    for n in (30, 105):
        p, q, r = factorize(n).primes
        reduced, classes = reduced_with_classes(n)
        quot = quotient_graph(reduced, classes)
        assert quot.node_count == 6
        degs = [bin(quot.rows[a]).count("1") for a in range(6)]
        assert degs == [2] * 6
        reps = [reduced.source_ids[classes.representatives[b]] for b in range(6)]
        expected = {
            tuple(sorted(e))
            for e in ((p, p * q), (p, p * r), (q, p * q), (q, q * r), (r, p * r), (r, q * r))
        }
        got = {
            tuple(sorted((reps[a], reps[b])))
            for a in range(6)
            for b in range(a + 1, 6)
            if quot.adjacent(a, b)
        }
        assert got == expected


def test_quotient_of_complete_graph_two_blocks():
    g = zn_graph(5)  # K_5
    blocks = ((0,), (1, 2, 3, 4))
    classes = ClassPartition(blocks, (0, 1, 1, 1, 1), (0, 1))
    q = quotient_graph(g, classes)
    assert q.node_count == 2 and q.adjacent(0, 1)
    assert q.weights == (1, 4)


def test_quotient_rejects_non_clique_blocks():
    g = Graph([0b010, 0b101, 0b010])  # path 0-1-2
    classes = ClassPartition(((0, 2), (1,)), (0, 1, 0), (0, 1))
    with pytest.raises(QuotientStructureError):
        quotient_graph(g, classes)


def test_quotient_rejects_nonuniform_adjacency():
    # vertices 0,1 adjacent; 0-2 edge but no 1-2 edge
    g = Graph([0b110, 0b001, 0b001])
    classes = ClassPartition(((0, 1), (2,)), (0, 0, 1), (0, 2))
    with pytest.raises(QuotientStructureError):
        quotient_graph(g, classes)


def test_quotient_rejects_bad_partition():
    g = zn_graph(4)
    classes = ClassPartition(((0, 1),), (0, 0, 0, 0), (0,))
    with pytest.raises(ValueError):
        quotient_graph(g, classes)
