from __future__ import annotations

import pytest
from hypothesis import given

from conftest import digraphs
from multipath.cohomology import BettiTable, multipath_betti
from multipath.digraph import GluingMap, build_digraph, weak_components
from multipath.errors import NotDecomposable, NotUnivalent
from multipath.euler import isomorphic
from multipath.families import alternating, dandelion, ladder, linear, polygon, source_star
from multipath.structure import (
    TARGET_BUNDLE,
    acyclicity_report,
    decompose_at_vertex,
    decomposition_gluing,
    detect_cone_edge,
    is_cone_edge,
    mayer_vietoris_check,
    suspend,
    univalent_vertices,
    wedge_family,
)


def _drop_isolated(g):
    from multipath.digraph import induced_subgraph
    return induced_subgraph(g, [v for v in range(g.vertex_count) if g.valence(v)])


def test_dandelion_decomposition():
    dec = decompose_at_vertex(dandelion(3, 2), 3, TARGET_BUNDLE)
    assert dec.partition_ok
    assert isomorphic(_drop_isolated(dec.base), source_star(2))
    assert len(dec.pieces) == 3
    assert all(isomorphic(_drop_isolated(p), dandelion(1, 2)) for p in dec.pieces)


def test_alternating_decomposition():
    dec = decompose_at_vertex(alternating(3), 1)
    assert dec.partition_ok and len(dec.pieces) == 2


def test_not_decomposable():
    with pytest.raises(NotDecomposable):
        decompose_at_vertex(linear(2), 1)


@given(digraphs(max_edges=5))
def test_partition_always_holds(g):
    for v in range(g.vertex_count):
        if len(g.in_edges[v]) >= 2:
            assert decompose_at_vertex(g, v, "TargetBundle").partition_ok
        if len(g.out_edges[v]) >= 2:
            assert decompose_at_vertex(g, v, "SourceBundle").partition_ok


def test_cone_edges():
    e = detect_cone_edge(linear(3))
    assert e is not None and 1 in linear(3).edges[e]
    g = dandelion(1, 4)
    tail = g.edges.index((0, 1))
    assert is_cone_edge(g, tail)
    assert detect_cone_edge(polygon(3)) is None


@given(digraphs())
def test_cone_edge_forces_zero(g):
    if detect_cone_edge(g) is not None:
        assert multipath_betti(g).is_zero()


@given(digraphs())
def test_proved_acyclic_is_acyclic(g):
    if acyclicity_report(g).proved:
        assert multipath_betti(g).is_zero()


def _arborescences_of_depth_two(max_edges):
    import networkx as nx
    from multipath.generators import enumerate_digraphs
    for g in enumerate_digraphs(max_edges):
        h = nx.DiGraph(list(g.edges))
        if g.edge_count == 0 or not nx.is_arborescence(h):
            continue
        root = next(v for v in h if h.in_degree(v) == 0)
        if max(nx.shortest_path_length(h, root).values()) >= 2:
            yield g, h.out_degree(root)


def test_arborescences():
    seen = 0
    for g, root_degree in _arborescences_of_depth_two(6):
        seen += 1
        zero = multipath_betti(g).is_zero()
        # the prover never claims more than the direct computation
        assert acyclicity_report(g).proved == zero
        if root_degree == 1:
            assert zero
    assert seen == 78


def test_arborescence_with_branching_root_is_not_acyclic():
    # root 0 has two children and 3 is at distance two, yet b2 = 1
    tree = build_digraph(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
    assert multipath_betti(tree) == BettiTable({2: 1})
    assert not acyclicity_report(tree).proved


def test_acyclicity_examples():
    tree = build_digraph(4, [(0, 1), (1, 2), (1, 3)])
    assert acyclicity_report(tree).proved
    for n in (3, 5, 7):
        rep = acyclicity_report(ladder(n))
        assert rep.proved and rep.trace
    rep = acyclicity_report(polygon(3))
    assert not rep.proved and multipath_betti(polygon(3))[3] == 1
    assert "verdict: ProvedAcyclic" in acyclicity_report(tree).to_text()


def test_mv_dandelion():
    g1, g2, base, gm = decomposition_gluing(decompose_at_vertex(dandelion(2, 2), 2))
    rep = mayer_vietoris_check(g1, g2, base, gm)
    assert rep.ok and rep.status == "ok"
    assert rep.betti["glued"] == BettiTable({2: 1})


def test_mv_alternating():
    g1, g2, base, gm = decomposition_gluing(decompose_at_vertex(alternating(5), 1))
    rep = mayer_vietoris_check(g1, g2, base, gm)
    assert rep.ok and rep.betti["glued"] == BettiTable({2: 1})


def test_mv_poset_mismatch():
    rep = mayer_vietoris_check(linear(2), linear(2), linear(1),
                               GluingMap(linear(1), (1, 2), (0, 1)))
    assert rep.status == "PosetMismatch" and not rep.ok


def test_suspend_examples():
    g = suspend(source_star(2), 1)
    assert multipath_betti(g) == BettiTable({2: 1})
    g = source_star(3)
    g = suspend(g, univalent_vertices(g)[0])
    g = suspend(g, univalent_vertices(g)[-1])
    assert multipath_betti(g) == BettiTable({3: 2})
    assert multipath_betti(suspend(linear(1), 0)).is_zero()
    with pytest.raises(NotUnivalent):
        suspend(linear(2), 1)


@given(digraphs(max_edges=5))
def test_suspend_shifts(g):
    for w in univalent_vertices(g)[:2]:
        assert multipath_betti(suspend(g, w)) == multipath_betti(g).shift(1)


def test_wedges():
    assert wedge_family(3, 1) == dandelion(4, 2)
    assert multipath_betti(wedge_family(3, 1)) == BettiTable({2: 3})
    assert multipath_betti(wedge_family(2, 2)) == BettiTable({3: 2})
    assert wedge_family(1, 0) == dandelion(2, 0)
    assert multipath_betti(wedge_family(1, 0)) == BettiTable({1: 1})
    assert len(weak_components(wedge_family(2, 3))) == 1
