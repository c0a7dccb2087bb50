"""Seeded random digraphs and exhaustive enumeration of small digraphs."""

from __future__ import annotations

import random

import networkx as nx

from .digraph import MULTIGRAPH, SIMPLE, Digraph


def random_digraph(rng: random.Random, max_edges: int = 6, max_vertices: int = 7,
                   multigraph_rate: float = 0.2) -> Digraph:
    """Uniform edge count in 0..max_edges on 1..max_vertices vertices."""
    n = rng.randint(1, max_vertices)
    mode = MULTIGRAPH if n >= 2 and rng.random() < multigraph_rate else SIMPLE
    capacity = n * (n - 1)
    m = rng.randint(0, max_edges)
    if mode == SIMPLE:
        m = min(m, capacity)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    while len(edges) < m:
        s, t = rng.randrange(n), rng.randrange(n)
        if s == t or (mode == SIMPLE and (s, t) in seen):
            continue
        seen.add((s, t))
        edges.append((s, t))
    return Digraph(n, tuple(edges), mode)


def random_digraphs(seed: int, count: int, **kw) -> list[Digraph]:
    rng = random.Random(seed)
    return [random_digraph(rng, **kw) for _ in range(count)]


def _nx(edges, n, multi: bool):
    h = nx.MultiDiGraph() if multi else nx.DiGraph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return h


def enumerate_digraphs(max_edges: int, multigraph: bool = False) -> list[Digraph]:
    """One representative per isomorphism class of digraphs without isolated
    vertices and with at most ``max_edges`` edges (the empty graph included).

    Built by adding one edge at a time (possibly on fresh vertices) and
    discarding isomorphic duplicates.
    """
    mode = MULTIGRAPH if multigraph else SIMPLE
    layer: list[tuple[int, tuple[tuple[int, int], ...]]] = [(0, ())]
    out = [Digraph(0, (), mode)]
    for _ in range(max_edges):
        buckets: dict[str, list] = {}
        nxt = []
        for n, edges in layer:
            for s in range(n + 2):
                for t in range(n + 2):
                    if s == t:
                        continue
                    fresh = {v for v in (s, t) if v >= n}
                    if fresh and fresh not in ({n}, {n, n + 1}):
                        continue
                    if n + 1 in fresh and (s, t) != (n, n + 1):
                        continue
                    if not multigraph and (s, t) in edges:
                        continue
                    new_n = n + len(fresh)
                    new_edges = edges + ((s, t),)
                    h = _nx(new_edges, new_n, multigraph)
                    key = nx.weisfeiler_lehman_graph_hash(
                        nx.DiGraph(h) if multigraph else h) + f"/{new_n}"
                    group = buckets.setdefault(key, [])
                    if any(nx.is_isomorphic(h, other) for other in group):
                        continue
                    group.append(h)
                    nxt.append((new_n, new_edges))
        layer = nxt
        out.extend(Digraph(n, edges, mode) for n, edges in layer)
    return out
