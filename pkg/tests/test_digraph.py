from __future__ import annotations

import pytest
from hypothesis import given

from conftest import digraphs
from oracles import brute_cycle_through, brute_is_multipath, brute_multipaths
from multipath.cohomology import multipath_betti
from multipath.digraph import (
    MULTIGRAPH,
    Digraph,
    GluingMap,
    build_digraph,
    coherent_cycle_through,
    components,
    contract_edge,
    disjoint_union,
    from_document,
    glue,
    is_multipath,
    reverse_orientation,
)
from multipath.errors import DuplicateEdge, SelfLoop, VertexOutOfRange
from multipath.euler import isomorphic
from multipath.families import alternating, dandelion, linear, polygon, sink_star, square_with_diagonal
from multipath.poset import enumerate_path_poset


def test_build_linear():
    g = build_digraph(3, [(0, 1), (1, 2)])
    assert g.vertex_count == 3 and g.edge_count == 2
    assert g == linear(2)


def test_self_loop_rejected():
    with pytest.raises(SelfLoop) as exc:
        build_digraph(2, [(0, 0)])
    assert exc.value.edge_index == 0


def test_duplicate_needs_multigraph():
    with pytest.raises(DuplicateEdge):
        build_digraph(2, [(0, 1), (0, 1)])
    g = build_digraph(2, [(0, 1), (0, 1)], MULTIGRAPH)
    assert g.edge_count == 2


def test_vertex_range():
    with pytest.raises(VertexOutOfRange):
        build_digraph(2, [(0, 2)])


def test_document_round_trip():
    g = dandelion(2, 1)
    assert from_document(g.to_document()) == g
    with pytest.raises(ValueError, match="vertices"):
        from_document({"edges": []})
    with pytest.raises(ValueError, match=r"edges\[1\]"):
        from_document({"vertices": 3, "edges": [[0, 1], [1]]})


def test_reverse_examples():
    r = reverse_orientation(linear(2))
    assert r.edges == ((1, 0), (2, 1))
    assert isomorphic(reverse_orientation(dandelion(2, 3)), dandelion(3, 2))


@given(digraphs())
def test_reverse_involution(g):
    assert reverse_orientation(reverse_orientation(g)) == g


def test_disjoint_union_sizes():
    u = disjoint_union(linear(1), linear(1))
    assert (u.vertex_count, u.edge_count) == (4, 2)


@given(digraphs(max_vertices=4, max_edges=3), digraphs(max_vertices=4, max_edges=3))
def test_disjoint_union_multiplies_poset(g1, g2):
    n = len(enumerate_path_poset(disjoint_union(g1, g2)))
    assert n == len(enumerate_path_poset(g1)) * len(enumerate_path_poset(g2))


@given(digraphs(max_vertices=5, max_edges=5))
def test_union_with_a2_shifts(g):
    # H(A_2) is one-dimensional in degree 1
    assert multipath_betti(disjoint_union(g, alternating(2))) == multipath_betti(g).shift(1)


def test_glue_two_segments():
    common = linear(1)
    g = glue(linear(2), linear(2), GluingMap(common, (1, 2), (0, 1)))
    assert (g.vertex_count, g.edge_count) == (4, 3)
    assert isomorphic(g, linear(3))


def test_glue_empty_is_disjoint_union():
    empty = build_digraph(0, [])
    g1, g2 = dandelion(1, 2), polygon(2)
    glued = glue(g1, g2, GluingMap(empty, (), ()))
    assert glued == disjoint_union(g1, g2)


@given(digraphs(max_vertices=4, max_edges=4, multigraph=False))
def test_glue_edge_count(g2):
    g1 = sink_star(2)
    common = build_digraph(1, [])
    glued = glue(g1, g2, GluingMap(common, (2,), (0,)))
    assert glued.edge_count == g1.edge_count + g2.edge_count - common.edge_count
    assert glued.vertex_count == g1.vertex_count + g2.vertex_count - 1


def test_is_multipath_examples():
    assert is_multipath(linear(2), 0b11)
    assert not is_multipath(polygon(2), 0b111)
    assert not is_multipath(sink_star(2), 0b11)
    with pytest.raises(ValueError):
        is_multipath(linear(2), 0b100)


@given(digraphs())
def test_is_multipath_matches_brute_force(g):
    want = set(brute_multipaths(g))
    for mask in range(1 << g.edge_count):
        subset = frozenset(i for i in range(g.edge_count) if mask >> i & 1)
        assert is_multipath(g, mask) == (subset in want)


def test_cycle_through_examples():
    p3 = polygon(3)
    assert all(coherent_cycle_through(p3, e) for e in range(p3.edge_count))
    i3 = linear(3)
    assert not any(coherent_cycle_through(i3, e) for e in range(i3.edge_count))
    q = square_with_diagonal()
    chord = q.edges.index((1, 3))
    assert coherent_cycle_through(q, chord)


@given(digraphs())
def test_cycle_through_matches_brute_force(g):
    for e in range(g.edge_count):
        assert coherent_cycle_through(g, e) == brute_cycle_through(g, e)


def test_components_of_multipath():
    g = linear(3)
    assert components(g, 0b101) == ((0, 1), (2, 3))
    assert components(g, 0) == ((0,), (1,), (2,), (3,))


def test_contract_edge():
    g = contract_edge(linear(3), 1)
    assert isomorphic(g, linear(2))


def test_brute_force_oracle_itself():
    # sanity of the oracle on hand-checked cases
    assert brute_is_multipath(polygon(2), (0, 1))
    assert not brute_is_multipath(polygon(2), (0, 1, 2))
    assert isinstance(Digraph(1, ()), Digraph)
