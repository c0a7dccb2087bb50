"""Structural results: vertex decompositions, cone edges, acyclicity proofs,
Mayer-Vietoris bookkeeping, suspension and the wedge-of-spheres family."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cohomology import BettiTable, multipath_betti
from .digraph import (
    Digraph,
    GluingMap,
    coherent_cycle_through,
    edge_images,
    glue_with_maps,
    induced_subgraph,
    weak_components,
)
from .errors import NotDecomposable, NotUnivalent
from .families import dandelion
from .linalg import QQ, FieldSpec
from .poset import enumerate_path_poset, level_counts

TARGET_BUNDLE = "TargetBundle"
SOURCE_BUNDLE = "SourceBundle"


@dataclass(frozen=True)
class Decomposition:
    vertex: int
    kind: str
    base: Digraph
    pieces: tuple[Digraph, ...]
    bundle_edges: tuple[int, ...]
    base_edges: tuple[int, ...]           # original index of each base edge
    piece_edges: tuple[tuple[int, ...], ...]
    partition_ok: bool


def _partition_holds(g: Digraph, bundle: Sequence[int], base: Digraph,
                     base_edges: Sequence[int], pieces: Sequence[Digraph],
                     piece_edges: Sequence[Sequence[int]]) -> bool:
    """Multipaths avoiding the bundle are P(base); those containing bundle
    edge h are P(piece_h) minus P(base). Compared as edge sets of g."""

    def lift(mask: int, emap: Sequence[int]) -> int:
        out = 0
        for k, orig in enumerate(emap):
            if mask >> k & 1:
                out |= 1 << orig
        return out

    whole = set(enumerate_path_poset(g).masks)
    bmask = 0
    for e in bundle:
        bmask |= 1 << e
    avoid = {m for m in whole if not m & bmask}
    base_set = {lift(m, base_edges) for m in enumerate_path_poset(base).masks}
    if avoid != base_set:
        return False
    seen = set(avoid)
    for h, e in enumerate(bundle):
        with_h = {m for m in whole if m >> e & 1}
        if any(m & bmask & ~(1 << e) for m in with_h):
            return False
        piece_set = {lift(m, piece_edges[h]) for m in enumerate_path_poset(pieces[h]).masks}
        if with_h != piece_set - base_set:
            return False
        seen |= with_h
    return seen == whole


def decompose_at_vertex(g: Digraph, v: int, kind: str | None = None) -> Decomposition:
    """Split off the edges entering (or leaving) ``v``; needs at least two of them."""
    if kind is None:
        kind = TARGET_BUNDLE if len(g.in_edges[v]) >= 2 else SOURCE_BUNDLE
    bundle = g.in_edges[v] if kind == TARGET_BUNDLE else g.out_edges[v]
    if kind not in (TARGET_BUNDLE, SOURCE_BUNDLE) or len(bundle) < 2:
        raise NotDecomposable(
            f"vertex {v} is the {'target' if kind == TARGET_BUNDLE else 'source'} "
            f"of {len(bundle)} edge(s); at least 2 are needed")
    base, base_edges = g.delete_edges(bundle)
    pieces, piece_edges = [], []
    for e in bundle:
        piece, kept = g.delete_edges(x for x in bundle if x != e)
        pieces.append(piece)
        piece_edges.append(kept)
    ok = _partition_holds(g, bundle, base, base_edges, pieces, piece_edges)
    return Decomposition(v, kind, base, tuple(pieces), tuple(bundle), base_edges,
                         tuple(piece_edges), ok)


def is_cone_edge(g: Digraph, e: int) -> bool:
    a, b = g.edges[e]
    if any(g.edges[i][1] != a for i in g.incident(a) if i != e):
        return False
    if any(g.edges[i][0] != b for i in g.incident(b) if i != e):
        return False
    return not coherent_cycle_through(g, e)


def detect_cone_edge(g: Digraph) -> int | None:
    """First edge (a, b) with only incoming edges at a, only outgoing at b, on no cycle."""
    return next((e for e in range(g.edge_count) if is_cone_edge(g, e)), None)


def cone_bijection_holds(g: Digraph, e: int) -> bool:
    """P(g) is P(g minus e) together with a copy H + e of every element."""
    rest, kept = g.delete_edges([e])
    lifted = set()
    for m in enumerate_path_poset(rest).masks:
        out = 0
        for k, orig in enumerate(kept):
            if m >> k & 1:
                out |= 1 << orig
        lifted.add(out)
    whole = set(enumerate_path_poset(g).masks)
    return whole == lifted | {m | 1 << e for m in lifted}


PROVED = "ProvedAcyclic"
INCONCLUSIVE = "Inconclusive"


@dataclass
class AcyclicityReport:
    verdict: str
    trace: list[dict] = field(default_factory=list)

    @property
    def proved(self) -> bool:
        return self.verdict == PROVED

    def to_document(self) -> dict:
        return {"verdict": self.verdict, "trace": self.trace}

    def to_text(self) -> str:
        lines = [f"verdict: {self.verdict}"]
        for step in self.trace:
            pad = "  " * step.get("depth", 0)
            detail = ", ".join(f"{k}={v}" for k, v in step.items() if k not in ("depth", "rule"))
            lines.append(f"{pad}- {step['rule']}: {detail}")
        return "\n".join(lines) + "\n"


def normal_form(g: Digraph) -> tuple:
    """Key for memoisation: isolated vertices dropped, remaining vertices
    renumbered by first appearance in the sorted edge list."""
    order: dict[int, int] = {}
    for s, t in sorted(g.edges):
        for v in (s, t):
            if v not in order:
                order[v] = len(order)
    return (len(order), tuple(sorted((order[s], order[t]) for s, t in g.edges)))


def acyclicity_report(g: Digraph, depth_cap: int = 16) -> AcyclicityReport:
    memo: dict[tuple, bool] = {}
    trace: list[dict] = []
    ok = _prove(g, 0, depth_cap, memo, trace)
    return AcyclicityReport(PROVED if ok else INCONCLUSIVE, trace)


def _prove(g: Digraph, depth: int, cap: int, memo: dict, trace: list) -> bool:
    key = normal_form(g)
    if key in memo:
        if memo[key]:
            trace.append({"rule": "memo", "depth": depth, "edges": list(g.edges)})
        return memo[key]
    if depth > cap:
        return False
    if g.edge_count == 0:
        memo[key] = False
        return False
    comps = [c for c in weak_components(g) if len(c) > 1]
    if len(comps) > 1:
        for c in comps:
            sub = induced_subgraph(g, c)
            mark = len(trace)
            if _prove(sub, depth + 1, cap, memo, trace):
                trace.insert(mark, {"rule": "disjoint-union", "depth": depth,
                                    "component": list(c)})
                memo[key] = True
                return True
            del trace[mark:]
        memo[key] = False
        return False
    e = detect_cone_edge(g)
    if e is not None:
        trace.append({"rule": "cone-edge", "depth": depth, "edge": e,
                      "endpoints": list(g.edges[e]), "graph": list(g.edges)})
        memo[key] = True
        return True
    for v in range(g.vertex_count):
        for kind, bundle in ((TARGET_BUNDLE, g.in_edges[v]), (SOURCE_BUNDLE, g.out_edges[v])):
            if len(bundle) < 2:
                continue
            base, _ = g.delete_edges(bundle)
            pieces = [g.delete_edges(x for x in bundle if x != b)[0] for b in bundle]
            mark = len(trace)
            trace.append({"rule": "vertex-decomposition", "depth": depth, "vertex": v,
                          "kind": kind, "bundle": list(bundle), "graph": list(g.edges)})
            if all(_prove(h, depth + 1, cap, memo, trace) for h in [base] + pieces):
                memo[key] = True
                return True
            del trace[mark:]
    memo[key] = False
    return False


@dataclass
class MVReport:
    poset_match: bool
    problems: list[str] = field(default_factory=list)
    dims: dict[str, list[int]] = field(default_factory=dict)
    betti: dict[str, BettiTable] = field(default_factory=dict)
    acyclic_pieces: bool = False

    @property
    def ok(self) -> bool:
        return self.poset_match and not self.problems

    @property
    def status(self) -> str:
        if not self.poset_match:
            return "PosetMismatch"
        return "ok" if self.ok else "IdentityFailure"


def _lift(mask: int, emap: Sequence[int]) -> int:
    out = 0
    for k, orig in enumerate(emap):
        if mask >> k & 1:
            out |= 1 << orig
    return out


def mayer_vietoris_check(g1: Digraph, g2: Digraph, common: Digraph, gm: GluingMap,
                         f: FieldSpec = QQ) -> MVReport:
    """Glue, confirm the path poset is the glued poset, then check the identities."""
    if gm.common != common:
        raise ValueError("gluing map refers to a different common graph")
    glued, emap1, emap2 = glue_with_maps(g1, g2, gm)
    P = set(enumerate_path_poset(glued).masks)
    im1 = {_lift(m, emap1) for m in enumerate_path_poset(g1).masks}
    im2 = {_lift(m, emap2) for m in enumerate_path_poset(g2).masks}
    # common edges sit inside g1 at the left edge images
    cmap = [emap1[j] for j in edge_images(common, gm.left, g1, gm.left_edges, "left")]
    imc = {_lift(m, cmap) for m in enumerate_path_poset(common).masks}
    report = MVReport(poset_match=(P == im1 | im2 and im1 & im2 == imc))
    if not report.poset_match:
        missing = sorted(P - (im1 | im2))
        report.problems.append(
            f"{len(missing)} multipath(s) of the glued graph lie in neither piece"
            if missing else "pieces overlap beyond the common graph")
        return report
    graphs = {"glued": glued, "g1": g1, "g2": g2, "common": common}
    dims = {k: level_counts(enumerate_path_poset(h)) for k, h in graphs.items()}
    betti = {k: multipath_betti(h, f) for k, h in graphs.items()}
    report.dims, report.betti = dims, betti

    def at(xs, n):
        return xs[n] if n < len(xs) else 0

    top = max(len(v) for v in dims.values())
    for n in range(top):
        if at(dims["glued"], n) != at(dims["g1"], n) + at(dims["g2"], n) - at(dims["common"], n):
            report.problems.append(f"dimension identity fails in degree {n}")
    alt = sum((-1) ** n * (betti["glued"][n] - betti["g1"][n] - betti["g2"][n] + betti["common"][n])
              for n in range(top + 1))
    if alt != 0:
        report.problems.append(f"alternating rank sum is {alt}, expected 0")
    report.acyclic_pieces = betti["g1"].is_zero() and betti["g2"].is_zero()
    if report.acyclic_pieces and betti["glued"] != betti["common"].shift(1):
        report.problems.append("pieces acyclic but b_n(glued) != b_{n-1}(common)")
    return report


def decomposition_gluing(dec: Decomposition, first: int = 0, second: int = 1
                         ) -> tuple[Digraph, Digraph, Digraph, GluingMap]:
    """Two pieces of a decomposition glued over their shared base, as MV input.

    With exactly two bundle edges the glued graph is the original graph.
    """
    base = dec.base
    ident = tuple(range(base.vertex_count))
    g1, g2 = dec.pieces[first], dec.pieces[second]
    # base edges are the pieces' edges other than their bundle edge, in order
    def base_positions(piece_edges):
        return tuple(k for k, orig in enumerate(piece_edges) if orig in set(dec.base_edges))
    gm = GluingMap(base, ident, ident, base_positions(dec.piece_edges[first]),
                   base_positions(dec.piece_edges[second]))
    return g1, g2, base, gm


def univalent_vertices(g: Digraph) -> list[int]:
    return [v for v in range(g.vertex_count) if g.valence(v) == 1]


def suspend(g: Digraph, w: int) -> Digraph:
    """Attach two new edges at the univalent vertex w.

    If w is the source of its edge, both new edges point into w; otherwise
    both leave w. Either way the Betti table shifts up by one degree.
    """
    if g.valence(w) != 1:
        raise NotUnivalent(f"vertex {w} has valence {g.valence(w)}")
    e = g.incident(w)[0]
    n = g.vertex_count
    if g.edges[e][0] == w:
        extra = ((n, w), (n + 1, w))
    else:
        extra = ((w, n), (w, n + 1))
    labels = None
    if g.labels is not None:
        labels = g.labels + (f"u{n}", f"u{n + 1}")
    return Digraph(n + 2, g.edges + extra, g.mode, labels)


def wedge_family(k: int, n: int) -> Digraph:
    """Graph whose only cohomology is dimension k in degree n + 1."""
    if k < 1 or n < 0:
        raise ValueError("wedge_family needs k >= 1 and n >= 0")
    if n == 0:
        return dandelion(k + 1, 0)
    g = dandelion(k + 1, 2)
    for _ in range(n - 1):
        g = suspend(g, univalent_vertices(g)[-1])
    return g
