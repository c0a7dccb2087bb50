"""Finite directed (multi)graphs and graph-level operations.

Vertices are the integers ``0 .. vertex_count - 1``. Edges are kept in an
ordered tuple; that order is observable because it fixes the sign
assignment used by the cochain complexes built on top of a graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    NotRegularMorphism,
    SelfLoop,
    VertexOutOfRange,
)

SIMPLE = "simple"
MULTIGRAPH = "multigraph"
MODES = (SIMPLE, MULTIGRAPH)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    edges: tuple[Edge, ...]
    mode: str = SIMPLE
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise ValueError("one label per vertex required")
        seen: set[Edge] = set()
        for i, (s, t) in enumerate(self.edges):
            for v in (s, t):
                if not 0 <= v < self.vertex_count:
                    raise VertexOutOfRange(i, v, self.vertex_count)
            if s == t:
                raise SelfLoop(i, s)
            if self.mode == SIMPLE and (s, t) in seen:
                raise DuplicateEdge(i, (s, t))
            seen.add((s, t))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else f"v{v}"

    @cached_property
    def out_edges(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (s, _) in enumerate(self.edges):
            out[s].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (_, t) in enumerate(self.edges):
            inc[t].append(i)
        return tuple(tuple(x) for x in inc)

    def valence(self, v: int) -> int:
        return len(self.out_edges[v]) + len(self.in_edges[v])

    def incident(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.out_edges[v] + self.in_edges[v]))

    def with_edges(self, edges: Iterable[Edge]) -> "Digraph":
        """Same vertex set and labels, new edge list."""
        return Digraph(self.vertex_count, tuple(edges), self.mode, self.labels)

    def delete_edges(self, removed: Iterable[int]) -> tuple["Digraph", tuple[int, ...]]:
        """Spanning subgraph without ``removed``; also returns kept original indices."""
        gone = set(removed)
        kept = tuple(i for i in range(self.edge_count) if i not in gone)
        return self.with_edges(self.edges[i] for i in kept), kept

    def permute_edges(self, order: Sequence[int]) -> "Digraph":
        """Reorder the edge list: new edge ``k`` is old edge ``order[k]``."""
        if sorted(order) != list(range(self.edge_count)):
            raise ValueError("order must be a permutation of the edge indices")
        return self.with_edges(self.edges[i] for i in order)

    def relabel_vertices(self, perm: Sequence[int]) -> "Digraph":
        """Rename vertex ``v`` to ``perm[v]``; edge order is unchanged."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError("perm must be a permutation of the vertices")
        labels = None
        if self.labels is not None:
            new = [""] * self.vertex_count
            for v, p in enumerate(perm):
                new[p] = self.labels[v]
            labels = tuple(new)
        edges = tuple((perm[s], perm[t]) for s, t in self.edges)
        return Digraph(self.vertex_count, edges, self.mode, labels)

    def to_document(self) -> dict:
        doc = {
            "vertices": self.vertex_count,
            "edges": [[s, t] for s, t in self.edges],
            "mode": self.mode,
        }
        if self.labels is not None:
            doc["labels"] = list(self.labels)
        return doc

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        for v in range(self.vertex_count):
            lines.append(f'  {v} [label="{self.label(v)}"];')
        for i, (s, t) in enumerate(self.edges):
            lines.append(f'  {s} -> {t} [label="e{i}", arrowhead=normal];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_digraph(vertex_count: int, edges: Iterable[Sequence[int]], mode: str = SIMPLE,
                  labels: Sequence[str] | None = None) -> Digraph:
    pairs = tuple((int(e[0]), int(e[1])) for e in edges)
    return Digraph(int(vertex_count), pairs, mode, None if labels is None else tuple(labels))


def from_document(doc: dict) -> Digraph:
    """Inverse of :meth:`Digraph.to_document`; raises ``ValueError`` naming the bad field."""
    if not isinstance(doc, dict):
        raise ValueError("graph document must be a mapping")
    if "vertices" not in doc:
        raise ValueError("missing field 'vertices'")
    n = doc["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError("field 'vertices' must be a non-negative integer")
    raw = doc.get("edges", [])
    if not isinstance(raw, list):
        raise ValueError("field 'edges' must be a list")
    edges = []
    for i, e in enumerate(raw):
        if (not isinstance(e, (list, tuple)) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise ValueError(f"field 'edges[{i}]' must be a pair of integers")
        edges.append((e[0], e[1]))
    mode = doc.get("mode", SIMPLE)
    if mode not in MODES:
        raise ValueError(f"field 'mode' must be one of {MODES}")
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise ValueError("field 'labels' must list one name per vertex")
    return build_digraph(n, edges, mode, labels)


def reverse_orientation(g: Digraph) -> Digraph:
    return g.with_edges((t, s) for s, t in g.edges)


def disjoint_union(g1: Digraph, g2: Digraph) -> Digraph:
    n = g1.vertex_count
    edges = g1.edges + tuple((s + n, t + n) for s, t in g2.edges)
    mode = MULTIGRAPH if MULTIGRAPH in (g1.mode, g2.mode) else SIMPLE
    labels = None
    if g1.labels is not None or g2.labels is not None:
        labels = tuple(g1.label(v) for v in range(n)) + tuple(
            g2.label(v) + "'" for v in range(g2.vertex_count))
    return Digraph(n + g2.vertex_count, edges, mode, labels)


@dataclass(frozen=True)
class GluingMap:
    """Embeddings of ``common`` into the two graphs being glued.

    ``left``/``right`` map common vertices to vertices of g1/g2. The optional
    edge maps pick images for the common edges; when omitted, each common
    edge is sent to the first unused edge with the image endpoints.
    """

    common: Digraph
    left: tuple[int, ...]
    right: tuple[int, ...]
    left_edges: tuple[int, ...] | None = None
    right_edges: tuple[int, ...] | None = None


def edge_images(common: Digraph, vmap: Sequence[int], target: Digraph,
                 explicit: Sequence[int] | None, side: str) -> tuple[int, ...]:
    if len(vmap) != common.vertex_count:
        raise NotRegularMorphism(f"{side} vertex map has wrong length")
    if len(set(vmap)) != len(vmap):
        raise NotRegularMorphism(f"{side} vertex map is not injective")
    if any(not 0 <= v < target.vertex_count for v in vmap):
        raise NotRegularMorphism(f"{side} vertex map leaves the target graph")
    images: list[int] = []
    if explicit is not None:
        if len(explicit) != common.edge_count or len(set(explicit)) != len(explicit):
            raise NotRegularMorphism(f"{side} edge map must be injective on all common edges")
        for (s, t), j in zip(common.edges, explicit):
            if target.edges[j] != (vmap[s], vmap[t]):
                raise NotRegularMorphism(f"{side} edge map does not preserve endpoints")
        return tuple(explicit)
    used: set[int] = set()
    for s, t in common.edges:
        want = (vmap[s], vmap[t])
        hit = next((j for j in target.out_edges[want[0]]
                    if j not in used and target.edges[j] == want), None)
        if hit is None:
            raise NotRegularMorphism(f"{side}: common edge {(s, t)} has no image")
        used.add(hit)
        images.append(hit)
    return tuple(images)


def glue_with_maps(g1: Digraph, g2: Digraph, gm: GluingMap
                   ) -> tuple[Digraph, tuple[int, ...], tuple[int, ...]]:
    """Pushout of g1 and g2 along the common graph.

    Returns the glued graph and, for g1 and g2, the index of each of their
    edges in the glued edge list.
    """
    le = edge_images(gm.common, gm.left, g1, gm.left_edges, "left")
    re = edge_images(gm.common, gm.right, g2, gm.right_edges, "right")
    n1 = g1.vertex_count
    vmap2: dict[int, int] = {gm.right[c]: gm.left[c] for c in range(gm.common.vertex_count)}
    nxt = n1
    for v in range(g2.vertex_count):
        if v not in vmap2:
            vmap2[v] = nxt
            nxt += 1
    edges = list(g1.edges)
    emap1 = tuple(range(g1.edge_count))
    shared = {r: le[c] for c, r in enumerate(re)}
    emap2 = []
    for j, (s, t) in enumerate(g2.edges):
        if j in shared:
            emap2.append(shared[j])
        else:
            emap2.append(len(edges))
            edges.append((vmap2[s], vmap2[t]))
    mode = MULTIGRAPH if MULTIGRAPH in (g1.mode, g2.mode) or len(set(edges)) < len(edges) else SIMPLE
    labels = None
    if g1.labels is not None or g2.labels is not None:
        extra = [g2.label(v) for v in range(g2.vertex_count) if vmap2[v] >= n1]
        labels = tuple(g1.label(v) for v in range(n1)) + tuple(extra)
    return Digraph(nxt, tuple(edges), mode, labels), emap1, tuple(emap2)


def glue(g1: Digraph, g2: Digraph, gm: GluingMap) -> Digraph:
    return glue_with_maps(g1, g2, gm)[0]


def is_multipath(g: Digraph, edge_set: int) -> bool:
    """In/out degree at most one everywhere and no directed cycle."""
    if edge_set < 0 or edge_set >> g.edge_count:
        raise ValueError("bitmask has bits beyond the edge count")
    succ: dict[int, int] = {}
    has_pred: set[int] = set()
    level = 0
    for i, (s, t) in enumerate(g.edges):
        if edge_set >> i & 1:
            if s in succ or t in has_pred:
                return False
            succ[s] = t
            has_pred.add(t)
            level += 1
    # every vertex now has in/out degree <= 1; walks from path starts cover all acyclic edges
    walked = 0
    for v in succ:
        if v in has_pred:
            continue
        while v in succ:
            v = succ[v]
            walked += 1
    return walked == level


def components(g: Digraph, edge_set: int) -> tuple[tuple[int, ...], ...]:
    """Connected components of the spanning subgraph, ordered by minimal vertex."""
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (s, t) in enumerate(g.edges):
        if edge_set >> i & 1:
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(vs) for vs in sorted(groups.values()))


def coherent_cycle_through(g: Digraph, edge: int) -> bool:
    """True iff the edge lies on a directed cycle, i.e. its target reaches its source."""
    s, t = g.edges[edge]
    seen = {t}
    stack = [t]
    while stack:
        v = stack.pop()
        if v == s:
            return True
        for j in g.out_edges[v]:
            w = g.edges[j][1]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def weak_components(g: Digraph) -> tuple[tuple[int, ...], ...]:
    return components(g, (1 << g.edge_count) - 1)


def induced_subgraph(g: Digraph, vertices: Sequence[int]) -> Digraph:
    """Subgraph on ``vertices`` (renumbered in the given order) with every edge inside it."""
    index = {v: k for k, v in enumerate(vertices)}
    edges = tuple((index[s], index[t]) for s, t in g.edges if s in index and t in index)
    labels = tuple(g.label(v) for v in vertices) if g.labels is not None else None
    return Digraph(len(vertices), edges, g.mode, labels)


def contract_edge(g: Digraph, edge: int) -> Digraph:
    """Identify the endpoints of ``edge`` and drop it; the head vertex disappears.

    Vertices above the removed one shift down by one. Raises SelfLoop if a
    second edge joins the same two vertices.
    """
    a, b = g.edges[edge]

    def ren(v: int) -> int:
        v = a if v == b else v
        return v - 1 if v > b else v

    edges = tuple((ren(s), ren(t)) for i, (s, t) in enumerate(g.edges) if i != edge)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[v] for v in range(g.vertex_count) if v != b)
    return Digraph(g.vertex_count - 1, edges, g.mode, labels)
