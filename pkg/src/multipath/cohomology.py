"""Multipath cochain complexes with field coefficients and their Betti numbers."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence

from .digraph import Digraph
from .errors import NotAComplex, TorsionWarning
from .linalg import QQ, FieldSpec, Matrix, rank, reduce_mod
from .poset import PathPoset, enumerate_path_poset
from .signs import SignAssignment, canonical_sign


@dataclass(frozen=True)
class CochainComplex:
    """``differentials[n]`` maps C^n to C^{n+1} (shape dims[n+1] x dims[n])."""

    dims: tuple[int, ...]
    differentials: tuple[Matrix, ...]
    field: FieldSpec = QQ

    def __post_init__(self):
        if len(self.differentials) != max(len(self.dims) - 1, 0):
            raise ValueError("need one differential between consecutive degrees")
        for n, d in enumerate(self.differentials):
            if d.shape != (self.dims[n + 1], self.dims[n]):
                raise ValueError(f"d^{n} has shape {d.shape}, expected "
                                 f"{(self.dims[n + 1], self.dims[n])}")


class BettiTable:
    """Cohomology dimensions by degree; absent degrees are zero."""

    def __init__(self, betti: Mapping[int, int], euler: int | None = None):
        self.betti = {int(k): int(v) for k, v in sorted(betti.items())}
        if any(v < 0 for v in self.betti.values()):
            raise ValueError("Betti numbers are non-negative")
        alt = sum((-1) ** k * v for k, v in self.betti.items())
        if euler is not None and euler != alt:
            raise ValueError(f"euler {euler} disagrees with alternating sum {alt}")
        self.euler = alt

    def __getitem__(self, n: int) -> int:
        return self.betti.get(n, 0)

    @property
    def support(self) -> dict[int, int]:
        return {k: v for k, v in self.betti.items() if v}

    def is_zero(self) -> bool:
        return not self.support

    def total(self) -> int:
        return sum(self.betti.values())

    def shift(self, k: int) -> "BettiTable":
        """Table of the complex shifted up by ``k``: new[n + k] = old[n]."""
        return BettiTable({n + k: v for n, v in self.betti.items()})

    def convolve(self, other: "BettiTable") -> "BettiTable":
        """Graded tensor product."""
        out: dict[int, int] = {}
        for a, x in self.support.items():
            for b, y in other.support.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return BettiTable(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BettiTable) and self.support == other.support

    def __hash__(self) -> int:
        return hash(tuple(self.support.items()))

    def __repr__(self) -> str:
        return f"BettiTable({self.support})"

    def degrees(self) -> list[int]:
        if not self.betti:
            return [0]
        return list(range(min(self.betti), max(self.betti) + 1))

    def to_csv(self) -> str:
        lines = ["degree,dimension"]
        lines += [f"{n},{self[n]}" for n in self.degrees()]
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        degs = self.degrees()
        cells = [("degree", "dimension")] + [(str(n), str(self[n])) for n in degs]
        w0 = max(len(a) for a, _ in cells)
        w1 = max(len(b) for _, b in cells)
        lines = [f"{a:>{w0}}  {b:>{w1}}" for a, b in cells]
        lines.append(f"euler characteristic: {self.euler}")
        return "\n".join(lines) + "\n"


def complex_from_poset(p: PathPoset, signs: SignAssignment | None = None,
                       field: FieldSpec = QQ) -> CochainComplex:
    s = canonical_sign(p) if signs is None else signs
    dims = tuple(len(ids) for ids in p.levels)
    rows: list[list[dict[int, int]]] = [[{} for _ in range(dims[n + 1])]
                                        for n in range(len(dims) - 1)]
    for k, (lo, hi, _) in enumerate(p.covers):
        n = p.level_of(lo)
        rows[n][p.position_in_level(hi)][p.position_in_level(lo)] = -1 if s.signs[k] else 1
    mats = [Matrix(dims[n + 1], dims[n], rows[n]) for n in range(len(dims) - 1)]
    if field.p is not None:
        mats = [reduce_mod(m, field.p) for m in mats]
    return CochainComplex(dims, tuple(mats), field)


def build_field_complex(g: Digraph, f: FieldSpec = QQ, size_cap: int | None = None) -> CochainComplex:
    """One generator per multipath; d adds one edge with the canonical sign."""
    return complex_from_poset(enumerate_path_poset(g, size_cap), None, f)


def verify_d_squared(c: CochainComplex) -> bool:
    for n in range(len(c.differentials) - 1):
        if not (c.differentials[n + 1] @ c.differentials[n]).is_zero(c.field.p):
            return False
    return True


def betti_numbers(c: CochainComplex) -> BettiTable:
    if not verify_d_squared(c):
        raise NotAComplex("d o d is not zero")
    ranks = [rank(d, c.field) for d in c.differentials]
    betti = {}
    for n, dim in enumerate(c.dims):
        out = ranks[n] if n < len(ranks) else 0
        inc = ranks[n - 1] if n >= 1 else 0
        betti[n] = dim - out - inc
    return BettiTable(betti, euler_characteristic(c))


def euler_characteristic(c: CochainComplex) -> int:
    return sum((-1) ** n * d for n, d in enumerate(c.dims))


def multipath_betti(g: Digraph, f: FieldSpec = QQ, size_cap: int | None = None) -> BettiTable:
    return betti_numbers(build_field_complex(g, f, size_cap))


def field_cross_check(g: Digraph, primes: Sequence[int] = (2, 3, 101)) -> dict[str, BettiTable]:
    """Betti tables over Q and each F_p; warns with TorsionWarning on disagreement."""
    p = enumerate_path_poset(g)
    out = {"Q": betti_numbers(complex_from_poset(p, field=QQ))}
    for q in primes:
        out[f"F_{q}"] = betti_numbers(complex_from_poset(p, field=FieldSpec.prime(q)))
    differ = [k for k, v in out.items() if v != out["Q"]]
    if differ:
        warnings.warn(f"Betti numbers over {', '.join(differ)} differ from Q: "
                      "integral torsion present", TorsionWarning, stacklevel=2)
    return out
