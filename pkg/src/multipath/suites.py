"""Named verification suites run by ``multipath verify``.

Each suite returns a :class:`SuiteResult` holding one line per check. A
suite fails when any of its checks fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .algebra import algebra_betti, diagonal, dual_numbers
from .cohomology import BettiTable, build_field_complex, multipath_betti, verify_d_squared
from .digraph import GluingMap, build_digraph, disjoint_union, reverse_orientation
from .euler import (
    NONCOHERENT,
    alpha,
    alternating_chi_sequence,
    chi_alpha,
    leaf_configurations,
    leaf_sequence_dimension_check,
    power_series_coefficients,
)
from .families import (
    alternating,
    dandelion,
    h_shaped,
    ladder,
    linear,
    polygon,
    sink_star,
    source_star,
    square_with_diagonal,
)
from .generators import enumerate_digraphs, random_digraphs
from .linalg import QQ, FieldSpec
from .linear import alternating_betti, closed_form_betti_word, linear_from_word
from .polynomial import LaurentPolynomial
from .simplicial import verify_shift_isomorphism
from .structure import (
    acyclicity_report,
    cone_bijection_holds,
    decompose_at_vertex,
    decomposition_gluing,
    detect_cone_edge,
    mayer_vietoris_check,
    suspend,
    univalent_vertices,
    wedge_family,
)


@dataclass
class SuiteResult:
    name: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append((label, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> list[tuple[str, bool, str]]:
        return [c for c in self.checks if not c[1]]

    def to_text(self) -> str:
        lines = [f"suite {self.name}: {'PASS' if self.ok else 'FAIL'} "
                 f"({len(self.checks) - len(self.failures)}/{len(self.checks)})"]
        for label, ok, detail in self.checks:
            tail = f"  [{detail}]" if detail and not ok else ""
            lines.append(f"  {'ok  ' if ok else 'FAIL'} {label}{tail}")
        return "\n".join(lines) + "\n"


def _fmt(t: BettiTable) -> str:
    return str(t.support)


def named_graphs() -> list[tuple[str, object, BettiTable]]:
    """Named graphs with their known cohomology."""
    rows: list[tuple[str, object, BettiTable]] = [
        ("single vertex", build_digraph(1, []), BettiTable({0: 1})),
    ]
    for n in range(1, 6):
        rows.append((f"I_{n}", linear(n), BettiTable({})))
    rows.append(("RLRLR", linear_from_word("RLRLR"), BettiTable({2: 1})))
    for n in range(2, 6):
        rows.append((f"sink with {n} edges", sink_star(n), BettiTable({1: n - 1})))
    for n in range(2, 6):
        for m in range(2, 8 - n):
            rows.append((f"D_{n},{m}", dandelion(n, m), BettiTable({2: (n - 1) * (m - 1)})))
    rows.append(("H-shaped", h_shaped(), BettiTable({2: 2})))
    rows.append(("P_3 + diagonal", square_with_diagonal(), BettiTable({2: 1, 3: 1})))
    for n in range(2, 7):
        rows.append((f"P_{n}", polygon(n), BettiTable({n: 1})))
    return rows


def suite_named(f: FieldSpec = QQ) -> SuiteResult:
    res = SuiteResult("named")
    for name, g, want in named_graphs():
        got = multipath_betti(g, f)
        res.add(f"{name}: {_fmt(want)}", got == want, f"got {_fmt(got)}")
    return res


def suite_linalt(max_n: int = 12, f: FieldSpec = QQ) -> SuiteResult:
    from .linear import recursion_check_alternating
    res = SuiteResult("linalt")
    rep = recursion_check_alternating(max(max_n, 2), f)
    for n in range(max_n + 1):
        got = rep.tables[n]
        want = alternating_betti(n)
        res.add(f"A_{n} closed form {_fmt(want)}", got == want, f"got {_fmt(got)}")
    for n in rep.checked:
        res.add(f"A_{n} three-case recursion", n not in rep.mismatches)
    return res


def suite_linear(max_n: int = 10, f: FieldSpec = QQ) -> SuiteResult:
    res = SuiteResult("linear")
    for n in range(max_n + 1):
        bad = []
        for letters in product("RL", repeat=n):
            w = "".join(letters)
            if closed_form_betti_word(w) != multipath_betti(linear_from_word(w), f):
                bad.append(w)
        res.add(f"all {2 ** n} words of length {n}", not bad, f"mismatch on {bad[:5]}")
    return res


def suite_dandelion(f: FieldSpec = QQ) -> SuiteResult:
    res = SuiteResult("dandelion")
    for n in range(0, 5):
        for m in range(0, 5):
            g = dandelion(n, m)
            got = multipath_betti(g, f)
            if n == 0 or m == 0:
                k = n + m
                want = BettiTable({0: 1}) if k == 0 else BettiTable({1: k - 1})
            elif n == 1 or m == 1:
                want = BettiTable({})
            else:
                want = BettiTable({2: (n - 1) * (m - 1)})
            res.add(f"D_{n},{m}: {_fmt(want)}", got == want, f"got {_fmt(got)}")
            rev = multipath_betti(reverse_orientation(g), f)
            res.add(f"D_{n},{m} reversed equals D_{m},{n}", rev == multipath_betti(dandelion(m, n), f))
    return res


def _gluing_cases():
    cases = []
    for k in range(2, 5):
        for m in range(0, 4):
            g = dandelion(k, m)
            v0 = k
            dec = decompose_at_vertex(g, v0)
            cases.append((f"D_{k},{m} at its centre", dec, k == 2))
    for n in range(3, 9):
        g = alternating(n)
        dec = decompose_at_vertex(g, 1)
        cases.append((f"A_{n} at v1", dec, True))
    return cases


def suite_mv(f: FieldSpec = QQ) -> SuiteResult:
    res = SuiteResult("mv")
    for name, dec, whole in _gluing_cases():
        g1, g2, base, gm = decomposition_gluing(dec)
        rep = mayer_vietoris_check(g1, g2, base, gm, f)
        res.add(f"{name}: identities", rep.ok, "; ".join(rep.problems))
    # concrete consequences
    g1, g2, base, gm = decomposition_gluing(decompose_at_vertex(dandelion(2, 2), 2))
    rep = mayer_vietoris_check(g1, g2, base, gm, f)
    res.add("D_2,2 gluing recovers b2 = 1", rep.ok and rep.betti["glued"] == BettiTable({2: 1}))
    g1, g2, base, gm = decomposition_gluing(decompose_at_vertex(alternating(5), 1))
    rep = mayer_vietoris_check(g1, g2, base, gm, f)
    res.add("A_5 gluing gives b2 = 1", rep.ok and rep.betti["glued"] == BettiTable({2: 1}))
    i2 = linear(2)
    common = linear(1)
    gm = GluingMap(common, (1, 2), (0, 1))
    rep = mayer_vietoris_check(i2, i2, common, gm, f)
    res.add("two I_2 over the middle edge: poset mismatch reported", rep.status == "PosetMismatch")
    return res


def named_instances() -> list[tuple[str, object]]:
    rows = [(name, g) for name, g, _ in named_graphs()]
    rows += [(f"A_{n}", alternating(n)) for n in range(0, 8)]
    rows += [(f"D_1,{m}", dandelion(1, m)) for m in range(1, 5)]
    rows += [(f"D_{n},1", dandelion(n, 1)) for n in range(1, 5)]
    rows += [(f"source with {n} edges", source_star(n)) for n in range(1, 5)]
    rows += [("ladder 5", ladder(5))]
    return rows


def suite_shift(count: int = 200, seed: int = 0, f: FieldSpec = QQ) -> SuiteResult:
    res = SuiteResult("shift")
    for name, g in named_instances():
        rep = verify_shift_isomorphism(g, f)
        res.add(f"{name}", rep.ok, f"degrees {rep.mismatches}")
    bad = []
    for i, g in enumerate(random_digraphs(seed, count, max_edges=6)):
        if not verify_shift_isomorphism(g, f).ok:
            bad.append(i)
    res.add(f"{count} random digraphs (seed {seed})", not bad, f"failing indices {bad[:10]}")
    return res


ALT_CHI_TABLE = {
    0: "a",
    1: "a*(a - 1)",
    2: "a**2*(a - 2)",
    3: "a**2*(a**2 - 3*a + 1)",
    4: "a**3*(a - 1)*(a - 3)",
    5: "a**3*(a**3 - 5*a**2 + 6*a - 1)",
    6: "a**4*(a - 2)*(a**2 - 4*a + 2)",
    7: "a**4*(a - 1)*(a**3 - 6*a**2 + 9*a - 1)",
    8: "a**5*(a**2 - 5*a + 5)*(a**2 - 3*a + 1)",
    9: "a**5*(a**5 - 9*a**4 + 28*a**3 - 35*a**2 + 15*a - 1)",
    10: "a**6*(a - 1)*(a - 2)*(a - 3)*(a**2 - 4*a + 1)",
    11: "a**6*(a**6 - 11*a**5 + 45*a**4 - 84*a**3 + 70*a**2 - 21*a + 1)",
}


def from_sympy(expr_text: str) -> LaurentPolynomial:
    import sympy
    a = sympy.Symbol("a")
    poly = sympy.Poly(sympy.expand(sympy.sympify(expr_text, locals={"a": a})), a)
    return LaurentPolynomial({k[0]: int(c) for k, c in poly.terms()}, "α")


def suite_chi_table() -> SuiteResult:
    res = SuiteResult("chi-table")
    seq = alternating_chi_sequence(11)
    series = power_series_coefficients(11)
    for n, text in ALT_CHI_TABLE.items():
        want = from_sympy(text)
        direct = chi_alpha(alternating(n))
        res.add(f"A_{n}: direct chain-level value", direct == want, f"got {direct}")
        res.add(f"A_{n}: recursion value", seq[n] == want, f"got {seq[n]}")
        res.add(f"A_{n}: generating series coefficient", series[n] == want, f"got {series[n]}")
    a = alpha()
    for n in range(0, 9):
        want = a * (a - 1) ** n
        res.add(f"I_{n}: alpha(alpha-1)^{n}", chi_alpha(linear(n)) == want)
    return res


def suite_leaf_ses(seed: int = 0) -> SuiteResult:
    res = SuiteResult("leaf-ses")
    graphs = [(w, linear_from_word(w)) for n in range(2, 7)
              for w in ("".join(x) for x in product("RL", repeat=n))]
    graphs += [(f"random {i}", g) for i, g in enumerate(random_digraphs(seed, 40, max_edges=6))]
    algebras = [dual_numbers(1), diagonal(3)]
    checked = 0
    bad = []
    for name, g in graphs:
        for conf in leaf_configurations(g):
            for a in algebras:
                rep = leaf_sequence_dimension_check(
                    g, conf.g_prime, conf.g_double if conf.case == NONCOHERENT else None,
                    a, conf.case)
                checked += 1
                if not rep.ok:
                    bad.append((name, conf.case, a.name))
    res.add(f"{checked} leaf/contraction configurations", not bad and checked > 0, str(bad[:5]))
    g = alternating(3)
    conf = next(c for c in leaf_configurations(g) if c.case == NONCOHERENT)
    rep = leaf_sequence_dimension_check(g, alternating(2), alternating(1), dual_numbers(), NONCOHERENT)
    res.add("A_3 from A_2 and A_1", rep.ok and conf is not None)
    return res


def suite_wedges(f: FieldSpec = QQ) -> SuiteResult:
    res = SuiteResult("wedges")
    for k in range(1, 5):
        for n in range(0, 4):
            got = multipath_betti(wedge_family(k, n), f)
            want = BettiTable({n + 1: k})
            res.add(f"G_{k},{n}: {_fmt(want)}", got == want, f"got {_fmt(got)}")
    return res


def suite_structure(seed: int = 0, f: FieldSpec = QQ) -> SuiteResult:
    res = SuiteResult("structure")
    graphs = enumerate_digraphs(5)
    bad, checked = [], 0
    for g in graphs:
        for v in range(g.vertex_count):
            for kind, bundle in (("TargetBundle", g.in_edges[v]), ("SourceBundle", g.out_edges[v])):
                if len(bundle) >= 2:
                    checked += 1
                    if not decompose_at_vertex(g, v, kind).partition_ok:
                        bad.append((g.edges, v, kind))
    res.add(f"partition check on {checked} decompositions of all digraphs with <= 5 edges",
            not bad, str(bad[:3]))
    hits, bad_cone = 0, []
    for g in graphs:
        e = detect_cone_edge(g)
        if e is not None:
            hits += 1
            if not multipath_betti(g, f).is_zero() or not cone_bijection_holds(g, e):
                bad_cone.append(g.edges)
    res.add(f"cone edge implies zero cohomology ({hits} hits)", not bad_cone, str(bad_cone[:3]))
    proved, bad_proof = 0, []
    for g in graphs:
        if acyclicity_report(g).proved:
            proved += 1
            if not multipath_betti(g, f).is_zero():
                bad_proof.append(g.edges)
    res.add(f"ProvedAcyclic implies zero cohomology ({proved} proofs)", not bad_proof,
            str(bad_proof[:3]))
    res.add("ladder graphs proved acyclic",
            all(acyclicity_report(ladder(n)).proved for n in (3, 5, 7, 9)))
    rng = random.Random(seed)
    bad_susp, done = [], 0
    pool = random_digraphs(seed, 400, max_edges=5)
    for g in pool:
        ws = univalent_vertices(g)
        if not ws:
            continue
        w = rng.choice(ws)
        if multipath_betti(suspend(g, w), f) != multipath_betti(g, f).shift(1):
            bad_susp.append((g.edges, w))
        done += 1
        if done == 50:
            break
    res.add(f"suspension shifts Betti tables ({done} instances)", done == 50 and not bad_susp,
            str(bad_susp[:3]))
    return res


def suite_algebra() -> SuiteResult:
    res = SuiteResult("algebra")
    dn = dual_numbers()
    for n in range(0, 6):
        got = algebra_betti(linear(n), dn)
        res.add(f"H(I_{n}; Q[x]/(x^2)) = 2 in degree 0", got == BettiTable({0: 2}), _fmt(got))
    for r in (1, 2, 3):
        for n in range(0, 4):
            got = algebra_betti(linear(n), diagonal(r))
            want = BettiTable({0: r * (r - 1) ** n if n else r})
            res.add(f"H(I_{n}; Q^{r}) rank {want[0]}", got == want, _fmt(got))
    return res


def suite_properties(seed: int = 0, f: FieldSpec = QQ) -> SuiteResult:
    res = SuiteResult("properties")
    graphs = [g for _, g in named_instances()] + random_digraphs(seed, 60, max_edges=6)
    rng = random.Random(seed)
    d2, perm_bad, rev_bad = [], [], []
    for i, g in enumerate(graphs):
        if not verify_d_squared(build_field_complex(g, f)):
            d2.append(i)
        base = multipath_betti(g, f)
        for _ in range(5):
            order = list(range(g.edge_count))
            rng.shuffle(order)
            if multipath_betti(g.permute_edges(order), f) != base:
                perm_bad.append(i)
                break
        if multipath_betti(reverse_orientation(g), f) != base:
            rev_bad.append(i)
    res.add("d o d = 0 on every complex", not d2, str(d2[:5]))
    res.add("invariant under 5 edge orders per graph", not perm_bad, str(perm_bad[:5]))
    res.add("invariant under reversal", not rev_bad, str(rev_bad[:5]))
    pool = random_digraphs(seed + 1, 100, max_edges=4, max_vertices=5)
    conv_bad = []
    for i in range(50):
        g1, g2 = pool[2 * i], pool[2 * i + 1]
        if multipath_betti(disjoint_union(g1, g2), f) != multipath_betti(g1, f).convolve(
                multipath_betti(g2, f)):
            conv_bad.append(i)
    res.add("disjoint union convolves Betti tables (50 pairs)", not conv_bad, str(conv_bad[:5]))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "named": suite_named,
    "linalt": suite_linalt,
    "linear": suite_linear,
    "dandelion": suite_dandelion,
    "mv": suite_mv,
    "shift": suite_shift,
    "chi-table": suite_chi_table,
    "leaf-ses": suite_leaf_ses,
    "wedges": suite_wedges,
    "structure": suite_structure,
    "algebra": suite_algebra,
    "properties": suite_properties,
}
