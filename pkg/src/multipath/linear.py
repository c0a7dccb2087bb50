"""Oriented linear graphs: orientation words, stability, reduction and the
closed-form cohomology.

A word over {R, L} of length n describes a path on v_0..v_n whose i-th edge
is (v_{i-1}, v_i) for R and (v_i, v_{i-1}) for L.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .cohomology import BettiTable, multipath_betti
from .digraph import Digraph, build_digraph
from .errors import NotLinear
from .linalg import QQ, FieldSpec


def validate_word(word: str) -> str:
    w = word.strip().upper()
    if any(ch not in "RL" for ch in w):
        raise NotLinear(f"orientation words use only R and L, got {word!r}")
    return w


def linear_from_word(word: str) -> Digraph:
    w = validate_word(word)
    edges = [(i - 1, i) if ch == "R" else (i, i - 1) for i, ch in enumerate(w, start=1)]
    return build_digraph(len(w) + 1, edges, labels=[f"v{i}" for i in range(len(w) + 1)])


def alternating_word(n: int) -> str:
    return "".join("R" if i % 2 == 0 else "L" for i in range(n))


def word_of(g: Digraph) -> str:
    """Read the orientation word along the path, starting from the lower-index end."""
    n = g.vertex_count
    if n == 0:
        raise NotLinear("the empty graph is not a linear graph")
    if g.edge_count != n - 1:
        raise NotLinear(f"{n} vertices need {n - 1} edges, found {g.edge_count}")
    if n == 1:
        return ""
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (s, t) in enumerate(g.edges):
        nbrs[s].append((t, i))
        nbrs[t].append((s, i))
    if any(len(x) > 2 for x in nbrs):
        raise NotLinear("a vertex has more than two incident edges")
    ends = [v for v in range(n) if len(nbrs[v]) == 1]
    if len(ends) != 2:
        raise NotLinear("the underlying graph is not a path")
    prev, v = None, min(ends)
    letters = []
    seen = {v}
    while True:
        nxt = [(w, i) for w, i in nbrs[v] if w != prev]
        if not nxt:
            break
        w, i = nxt[0]
        if w in seen:
            raise NotLinear("the underlying graph contains a cycle")
        seen.add(w)
        letters.append("R" if g.edges[i] == (v, w) else "L")
        prev, v = v, w
    if len(seen) != n:
        raise NotLinear("the underlying graph is disconnected")
    return "".join(letters)


@dataclass(frozen=True)
class ReductionData:
    word: str
    stable_vertices: frozenset[int]
    satisfies_D: int
    components: tuple[int, ...]
    deleted_edges: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.components)


def _runs(word: str) -> list[tuple[int, int]]:
    """(first edge index, length) of each maximal run of equal letters."""
    out, i = [], 0
    for _, grp in groupby(word):
        k = len(list(grp))
        out.append((i, k))
        i += k
    return out


def analyze_word(word: str) -> ReductionData:
    w = validate_word(word)
    n = len(w)
    ins = [0] * (n + 1)
    outs = [0] * (n + 1)
    for i, ch in enumerate(w, start=1):
        s, t = (i - 1, i) if ch == "R" else (i, i - 1)
        outs[s] += 1
        ins[t] += 1
    stable = frozenset(v for v in range(n + 1) if not (ins[v] and outs[v]))
    runs = _runs(w)
    # directed paths stay inside one run, and run ends are the stable vertices
    max_d = max((k for _, k in runs), default=0)
    deleted = tuple(e for start, k in runs for e in range(start, start + k - 1))
    kept = [e for e in range(n) if e not in set(deleted)]
    # components of the kept edges along the path, vertices in index order
    comps: list[int] = []
    size = 0
    for v in range(n):
        # edge v joins v_v and v_{v+1}
        if v in kept:
            size += 1
        else:
            comps.append(size)
            size = 0
    comps.append(size)
    return ReductionData(w, stable, max_d, tuple(comps), deleted)


def analyze(g: Digraph) -> ReductionData:
    return analyze_word(word_of(g))


def alternating_betti(n: int) -> BettiTable:
    """Dimension one in degree k exactly when n = 3(k-1)+2 or n = 3k."""
    out = {}
    for k in range(n + 1):
        if n == 3 * (k - 1) + 2 or n == 3 * k:
            out[k] = 1
    return BettiTable(out)


def closed_form_betti_word(word: str) -> BettiTable:
    data = analyze_word(word)
    n = len(data.word)
    if n == 0:
        return BettiTable({0: 1})
    if data.satisfies_D > 2:
        return BettiTable({})
    if data.satisfies_D == 1:
        return alternating_betti(n)
    ks = data.components
    h = len(ks)
    if any(k % 3 == 0 for k in ks[:-1]) or ks[-1] % 3 == 1:
        return BettiTable({})
    table = BettiTable({0: 1})
    for k in ks[:-1]:
        table = table.convolve(alternating_betti(3 * (k // 3)))
    table = table.convolve(alternating_betti(ks[-1]))
    return table.shift(h - 1)


def closed_form_betti(g: Digraph) -> BettiTable:
    return closed_form_betti_word(word_of(g))


@dataclass
class RecursionReport:
    checked: list[int]
    mismatches: list[int]
    tables: dict[int, BettiTable]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def recursion_check_alternating(max_n: int, f: FieldSpec = QQ) -> RecursionReport:
    """Check H(A_n) against H(A_{n-1}), 0 or H^{*-1}(A_{n-2}) by n mod 3."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    from .families import alternating
    tables = {n: multipath_betti(alternating(n), f) for n in range(max_n + 1)}
    bad = []
    for n in range(2, max_n + 1):
        if n % 3 == 0:
            want = tables[n - 1]
        elif n % 3 == 1:
            want = BettiTable({})
        else:
            want = tables[n - 2].shift(1)
        if tables[n] != want:
            bad.append(n)
    return RecursionReport(list(range(2, max_n + 1)), bad, tables)
