"""Named graph families and a few fixed example graphs.

Family members are returned with edges sorted by source index, then
target index. Vertex numbering follows the figure labels: for stars the
leaves ``w_i`` feeding the centre come first, then the centre ``v0``, then
the leaves ``x_j`` it feeds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .digraph import Digraph, build_digraph
from .errors import BadParameters

KINDS = ("Linear", "Polygon", "Alternating", "Dandelion", "HGraph",
         "SinkStar", "SourceStar", "WedgeFamily")

_ARITY = {"Linear": 1, "Polygon": 1, "Alternating": 1, "Dandelion": 2,
          "HGraph": 2, "SinkStar": 1, "SourceStar": 1, "WedgeFamily": 2}


@dataclass(frozen=True)
class GraphFamily:
    kind: str
    parameters: tuple[int, ...]


def _sorted(n: int, edges, labels) -> Digraph:
    return build_digraph(n, sorted(edges), labels=labels)


def linear(n: int) -> Digraph:
    """Coherently oriented path v0 -> v1 -> ... -> vn."""
    return _sorted(n + 1, [(i, i + 1) for i in range(n)], [f"v{i}" for i in range(n + 1)])


def polygon(n: int) -> Digraph:
    """Directed cycle on n+1 vertices and n+1 edges."""
    if n < 1:
        raise BadParameters("Polygon(n) needs n >= 1")
    edges = [(i, i + 1) for i in range(n)] + [(n, 0)]
    return _sorted(n + 1, edges, [f"v{i}" for i in range(n + 1)])


def alternating(n: int) -> Digraph:
    """Linear graph on n+1 vertices whose orientations alternate, starting v0 -> v1."""
    edges = [(i - 1, i) if i % 2 else (i, i - 1) for i in range(1, n + 1)]
    return _sorted(n + 1, edges, [f"v{i}" for i in range(n + 1)])


def dandelion(n: int, m: int) -> Digraph:
    """Centre v0 with n incoming edges from w1..wn and m outgoing edges to x1..xm."""
    c = n
    edges = [(i, c) for i in range(n)] + [(c, c + 1 + j) for j in range(m)]
    labels = [f"w{i + 1}" for i in range(n)] + ["v0"] + [f"x{j + 1}" for j in range(m)]
    return _sorted(n + m + 1, edges, labels)


def h_graph(n: int, m: int) -> Digraph:
    """w_i -> v0 -> v1 -> x_j."""
    a, b = n, n + 1
    edges = [(i, a) for i in range(n)] + [(a, b)] + [(b, b + 1 + j) for j in range(m)]
    labels = [f"w{i + 1}" for i in range(n)] + ["v0", "v1"] + [f"x{j + 1}" for j in range(m)]
    return _sorted(n + m + 2, edges, labels)


def sink_star(n: int) -> Digraph:
    """n edges all pointing into one centre."""
    return dandelion(n, 0)


def source_star(n: int) -> Digraph:
    """n edges all leaving one centre."""
    return dandelion(0, n)


def family(spec: GraphFamily) -> Digraph:
    kind, params = spec.kind, tuple(spec.parameters)
    if kind not in KINDS:
        raise BadParameters(f"unknown family {kind!r}")
    if len(params) != _ARITY[kind]:
        raise BadParameters(f"{kind} takes {_ARITY[kind]} parameter(s), got {len(params)}")
    if any((not isinstance(p, int)) or p < 0 for p in params):
        raise BadParameters("family parameters must be non-negative integers")
    if kind == "Linear":
        return linear(*params)
    if kind == "Polygon":
        return polygon(*params)
    if kind == "Alternating":
        return alternating(*params)
    if kind == "Dandelion":
        return dandelion(*params)
    if kind == "HGraph":
        return h_graph(*params)
    if kind == "SinkStar":
        return sink_star(*params)
    if kind == "SourceStar":
        return source_star(*params)
    from .structure import wedge_family
    k, n = params
    if k < 1:
        raise BadParameters("WedgeFamily(k, n) needs k >= 1")
    return wedge_family(k, n)


# extra fixed graphs

def square_with_diagonal() -> Digraph:
    """Directed 4-cycle v0->v1->v2->v3->v0 plus the chord v1->v3."""
    return _sorted(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)], [f"v{i}" for i in range(4)])


def h_shaped() -> Digraph:
    """Six vertices: v0->v1<-v2, v3->v4<-v5 and the bridge v1->v4."""
    return _sorted(6, [(0, 1), (2, 1), (3, 4), (5, 4), (1, 4)], [f"v{i}" for i in range(6)])


def ladder(n: int) -> Digraph:
    """Row of squares on v0..vn (n odd, n >= 3).

    Odd vertices form the top row, even vertices the bottom row. Each odd
    v_j points down to v_{j-1} and left to v_{j-2}; bottom edges run
    v_{2i} -> v_{2i+2}.
    """
    if n < 3 or n % 2 == 0:
        raise BadParameters("ladder(n) needs odd n >= 3")
    edges = []
    for j in range(1, n + 1, 2):
        edges.append((j, j - 1))
        if j >= 3:
            edges.append((j, j - 2))
            edges.append((j - 3, j - 1))
    return _sorted(n + 1, edges, [f"v{i}" for i in range(n + 1)])


_CLI_NAMES = {
    "linear": "Linear", "polygon": "Polygon", "alternating": "Alternating",
    "dandelion": "Dandelion", "hgraph": "HGraph", "sink": "SinkStar",
    "source": "SourceStar", "wedge": "WedgeFamily",
}
_EXTRAS = {"square-diagonal": square_with_diagonal, "h-shaped": h_shaped}


def parse_family(text: str) -> Digraph:
    """Build a graph from ``name:p1,p2`` (for example ``dandelion:3,2``)."""
    m = re.fullmatch(r"\s*([a-z-]+)\s*(?::\s*([0-9,\s]*))?", text)
    if not m:
        raise BadParameters(f"cannot parse family spec {text!r}")
    name, raw = m.group(1), (m.group(2) or "").strip()
    params = tuple(int(x) for x in raw.split(",") if x.strip()) if raw else ()
    if name in _EXTRAS:
        if params:
            raise BadParameters(f"{name} takes no parameters")
        return _EXTRAS[name]()
    if name == "ladder":
        if len(params) != 1:
            raise BadParameters("ladder takes 1 parameter")
        return ladder(params[0])
    if name not in _CLI_NAMES:
        known = sorted(list(_CLI_NAMES) + list(_EXTRAS) + ["ladder"])
        raise BadParameters(f"unknown family {name!r}; known: {', '.join(known)}")
    return family(GraphFamily(_CLI_NAMES[name], params))
