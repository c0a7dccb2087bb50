"""Graded Euler characteristics and the leaf-removal sequences.

Everything here works at chain level: the Euler characteristic of the
algebra complex only depends on how many multipaths have each level and
component count, so no ranks are needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .algebra import Algebra, algebra_dims, qdim
from .digraph import Digraph, coherent_cycle_through, contract_edge, induced_subgraph
from .errors import ConfigurationMismatch
from .poset import enumerate_path_poset
from .polynomial import LaurentPolynomial

ALPHA = "α"
COHERENT = "coherent"
NONCOHERENT = "noncoherent"
CONTRACTION = "contraction"
CASES = (COHERENT, NONCOHERENT, CONTRACTION)


def alpha() -> LaurentPolynomial:
    return LaurentPolynomial.variable(ALPHA)


def chi_alpha(g: Digraph) -> LaurentPolynomial:
    """Sum over multipaths of (-1)^level * alpha^components."""
    p = enumerate_path_poset(g)
    V = g.vertex_count
    return LaurentPolynomial({V - n: (-1) ** n * len(ids) for n, ids in enumerate(p.levels)}, ALPHA)


def graded_euler(g: Digraph, a: Algebra, in_alpha: bool = False) -> LaurentPolynomial:
    """Graded Euler characteristic in q, or in alpha = qdim(A) when ``in_alpha``."""
    dim = qdim(a)
    chi = chi_alpha(g)
    return chi if in_alpha else chi.compose(dim)


def alternating_chi_sequence(max_n: int) -> list[LaurentPolynomial]:
    """chi(A_0) = alpha, chi(A_1) = alpha(alpha - 1), chi(A_n) = alpha(chi(A_{n-1}) - chi(A_{n-2}))."""
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    a = alpha()
    seq = [a, a * (a - 1)]
    for _ in range(2, max_n + 1):
        seq.append(a * (seq[-1] - seq[-2]))
    return seq[:max_n + 1]


@dataclass(frozen=True)
class LeafConfiguration:
    case: str
    g_prime: Digraph
    g_double: Digraph | None
    e1: int | None
    e2: int


def _without_vertices(g: Digraph, drop: set[int]) -> Digraph:
    return induced_subgraph(g, [v for v in range(g.vertex_count) if v not in drop])


def leaf_configurations(g: Digraph) -> list[LeafConfiguration]:
    """All configurations of ``g`` to which a leaf-removal sequence applies.

    Leaf cases: a univalent vertex a with edge e1 to a bivalent vertex b
    whose other edge is e2. Contraction case: an edge e2 = (x, y) whose
    tail has only incoming other edges, whose head has only outgoing other
    edges, and which lies on no directed cycle.
    """
    out: list[LeafConfiguration] = []
    for a in range(g.vertex_count):
        if g.valence(a) != 1:
            continue
        e1 = g.incident(a)[0]
        s, t = g.edges[e1]
        b = t if s == a else s
        if g.valence(b) != 2:
            continue
        e2 = next(i for i in g.incident(b) if i != e1)
        coherent = (g.edges[e1][1] == b) == (g.edges[e2][0] == b)
        g1 = _without_vertices(g, {a})
        if coherent:
            out.append(LeafConfiguration(COHERENT, g1, None, e1, e2))
        else:
            g2 = _without_vertices(g, {a, b})
            out.append(LeafConfiguration(NONCOHERENT, g1, g2, e1, e2))
    for e in range(g.edge_count):
        x, y = g.edges[e]
        if (all(g.edges[i][1] == x for i in g.incident(x) if i != e)
                and all(g.edges[i][0] == y for i in g.incident(y) if i != e)
                and not coherent_cycle_through(g, e)):
            out.append(LeafConfiguration(CONTRACTION, contract_edge(g, e), None, None, e))
    return out


def _nx(g: Digraph) -> nx.MultiDiGraph:
    h = nx.MultiDiGraph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def isomorphic(g: Digraph, h: Digraph) -> bool:
    if (g.vertex_count, g.edge_count) != (h.vertex_count, h.edge_count):
        return False
    return nx.is_isomorphic(_nx(g), _nx(h))


@dataclass
class LeafReport:
    case: str
    rank: int
    dims_g: list[int]
    dims_prime: list[int]
    dims_double: list[int] | None
    dimension_failures: list[int] = field(default_factory=list)
    chi_ok: bool = True
    chi_g: LaurentPolynomial | None = None
    chi_predicted: LaurentPolynomial | None = None

    @property
    def ok(self) -> bool:
        return not self.dimension_failures and self.chi_ok


def leaf_sequence_dimension_check(g: Digraph, g_prime: Digraph, g_double: Digraph | None,
                                  a: Algebra, orientation_case: str) -> LeafReport:
    """Check the dimension and Euler identities forced by the short exact sequence.

    coherent / contraction: dim C^n(g) = dim C^{n-1}(g') + r dim C^n(g'),
    chi(g) = (alpha - 1) chi(g').
    noncoherent: dim C^n(g) = r dim C^{n-1}(g'') + r dim C^n(g'),
    chi(g) = alpha (chi(g') - chi(g'')).
    """
    if orientation_case not in CASES:
        raise ConfigurationMismatch(f"unknown case {orientation_case!r}")
    if (orientation_case == NONCOHERENT) != (g_double is not None):
        raise ConfigurationMismatch("g'' is required exactly in the non-coherent case")
    matched = any(
        c.case == orientation_case and isomorphic(c.g_prime, g_prime)
        and (g_double is None or isomorphic(c.g_double, g_double))
        for c in leaf_configurations(g))
    if not matched:
        raise ConfigurationMismatch(
            f"the given graphs are not in the {orientation_case} configuration")
    r = a.rank
    dg = algebra_dims(g, r)
    dp = algebra_dims(g_prime, r)
    dd = algebra_dims(g_double, r) if g_double is not None else None

    def at(xs, n):
        return xs[n] if 0 <= n < len(xs) else 0

    top = max(len(dg), len(dp) + 1, (len(dd) + 1) if dd else 0)
    failures = []
    for n in range(top):
        if orientation_case == NONCOHERENT:
            want = r * at(dd, n - 1) + r * at(dp, n)
        else:
            want = at(dp, n - 1) + r * at(dp, n)
        if at(dg, n) != want:
            failures.append(n)
    al = alpha()
    chi_g = chi_alpha(g)
    if orientation_case == NONCOHERENT:
        predicted = al * (chi_alpha(g_prime) - chi_alpha(g_double))
    else:
        predicted = (al - 1) * chi_alpha(g_prime)
    ok = chi_g == predicted
    if a.graded:
        q = qdim(a)
        ok = ok and chi_g.compose(q) == predicted.compose(q)
    return LeafReport(orientation_case, r, dg, dp, dd, failures, ok, chi_g, predicted)


def power_series_coefficients(max_n: int) -> list[LaurentPolynomial]:
    """Coefficients of alpha(1 - t) / (1 - alpha t (1 - t)) through t^max_n.

    Computed by long division of power series with coefficients in Z[alpha].
    """
    a = alpha()
    num = [a, -a]                      # alpha - alpha t
    den = [LaurentPolynomial.constant(1, ALPHA), -a, a]   # 1 - alpha t + alpha t^2
    out: list[LaurentPolynomial] = []
    for n in range(max_n + 1):
        c = num[n] if n < len(num) else LaurentPolynomial({}, ALPHA)
        for k in range(1, min(n, 2) + 1):
            c = c - den[k] * out[n - k]
        out.append(c)
    return out
