"""The multipath complex X(G) and its reduced simplicial cohomology.

X(G) has one vertex per edge of G and one simplex per multipath. This
module builds it by its own depth-first search and computes cohomology from
the alternating-face coboundary with dense Bareiss elimination. Apart from
the size cap setting it shares no code with the poset, sign or cochain
modules, so comparing the two answers is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .cohomology import BettiTable
from .digraph import Digraph, is_multipath
from .errors import SizeLimitExceeded
from .linalg import QQ, FieldSpec, rank_bareiss
from .poset import default_size_cap


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_labels: tuple[str, ...]
    facets: tuple[tuple[int, ...], ...]

    @cached_property
    def all_simplices(self) -> frozenset[tuple[int, ...]]:
        out: set[tuple[int, ...]] = {()}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
        return frozenset(out)

    def simplices_of_dim(self, d: int) -> list[tuple[int, ...]]:
        return sorted(s for s in self.all_simplices if len(s) == d + 1)

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1


def _independent_sets(g: Digraph, size_cap: int) -> list[int]:
    """Every edge set accepted by is_multipath, found by ordered extension."""
    found: list[int] = []

    def grow(mask: int, start: int):
        found.append(mask)
        if len(found) > size_cap:
            raise SizeLimitExceeded(f"multipath complex has more than {size_cap} simplices")
        for e in range(start, g.edge_count):
            m = mask | (1 << e)
            if is_multipath(g, m):
                grow(m, e + 1)

    grow(0, 0)
    return found


def build_multipath_complex(g: Digraph, size_cap: int | None = None) -> SimplicialComplex:
    cap = default_size_cap() if size_cap is None else size_cap
    sets = _independent_sets(g, cap)
    present = set(sets)
    facets = []
    for m in sets:
        if all(m >> e & 1 or (m | 1 << e) not in present for e in range(g.edge_count)):
            facets.append(tuple(e for e in range(g.edge_count) if m >> e & 1))
    if not facets:
        facets = [()]
    labels = tuple(f"e{i}" for i in range(g.edge_count))
    return SimplicialComplex(labels, tuple(sorted(facets)))


def coboundary(x: SimplicialComplex, d: int) -> list[list[int]]:
    """Matrix of delta^d: C^d -> C^{d+1}, rows indexed by (d+1)-simplices.

    delta(f)([v_0..v_{d+1}]) = sum_j (-1)^j f([v_0..^v_j..v_{d+1}]), vertices sorted.
    """
    lower = x.simplices_of_dim(d)
    upper = x.simplices_of_dim(d + 1)
    col = {s: i for i, s in enumerate(lower)}
    mat = [[0] * len(lower) for _ in upper]
    for r, s in enumerate(upper):
        for j in range(len(s)):
            face = s[:j] + s[j + 1:]
            mat[r][col[face]] = -1 if j % 2 else 1
    return mat


def reduced_simplicial_betti(x: SimplicialComplex, f: FieldSpec = QQ) -> BettiTable:
    """Reduced Betti numbers in degrees -1 .. dim X (the empty simplex is degree -1)."""
    top = x.dimension
    dims = {d: len(x.simplices_of_dim(d)) for d in range(-1, top + 1)}
    ranks = {}
    for d in range(-1, top):
        m = coboundary(x, d)
        ranks[d] = rank_bareiss(m, f.p) if m and m[0] else 0
    betti = {}
    for d in range(-1, top + 1):
        betti[d] = dims[d] - ranks.get(d, 0) - ranks.get(d - 1, 0)
    return BettiTable(betti)


def export_complex(x: SimplicialComplex) -> str:
    lines = [" ".join(x.vertex_labels[v] for v in f) for f in x.facets]
    return "\n".join(lines) + "\n"


def join_size(x: SimplicialComplex) -> int:
    return len(x.all_simplices)


@dataclass(frozen=True)
class ShiftReport:
    multipath: BettiTable
    simplicial: BettiTable
    mismatches: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_shift_isomorphism(g: Digraph, f: FieldSpec = QQ) -> ShiftReport:
    """Compare multipath Betti numbers in degree n with reduced b_{n-1} of X(g)."""
    from .cohomology import multipath_betti
    mu = multipath_betti(g, f)
    sim = reduced_simplicial_betti(build_multipath_complex(g), f)
    shifted = sim.shift(1)
    degs = set(mu.support) | set(shifted.support)
    bad = tuple(sorted(n for n in degs if mu[n] != shifted[n]))
    return ShiftReport(mu, sim, bad)
