"""Multipath cochain complexes with coefficients in a finite-rank unital algebra.

A multipath H with c(H) connected components carries the tensor power
A^{c(H)}, one factor per component, components ordered by their minimal
vertex. Adding an edge merges the component of its source (slot i) with
the component of its target (slot j); the product a_source * a_target is
written into slot min(i, j) and the other slot is dropped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product as cartesian
from pathlib import Path
from typing import Sequence

from .cohomology import BettiTable, CochainComplex, betti_numbers
from .digraph import Digraph, components
from .errors import InvalidAlgebra, UngradedAlgebra
from .linalg import QQ, Matrix
from .poset import PathPoset, enumerate_path_poset
from .polynomial import LaurentPolynomial
from .signs import canonical_sign


@dataclass(frozen=True)
class Algebra:
    """``table[i][j][k]`` is the coefficient of basis element k in e_i * e_j."""

    rank: int
    table: tuple[tuple[tuple[Fraction, ...], ...], ...]
    unit: tuple[Fraction, ...]
    degrees: tuple[int, ...] | None = None
    name: str = "A"

    def __post_init__(self):
        r = self.rank
        if r < 1:
            raise InvalidAlgebra("rank must be at least 1")
        if len(self.table) != r or any(len(row) != r or any(len(c) != r for c in row)
                                       for row in self.table):
            raise InvalidAlgebra(f"structure constants must form an {r}x{r}x{r} array")
        if len(self.unit) != r:
            raise InvalidAlgebra("unit must have one coefficient per basis element")
        if self.degrees is not None and len(self.degrees) != r:
            raise InvalidAlgebra("degrees must list one integer per basis element")

    @property
    def graded(self) -> bool:
        return self.degrees is not None

    @cached_property
    def products(self) -> tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...]:
        """Sparse form of the table: products[i][j] = ((k, coeff), ...)."""
        return tuple(tuple(tuple((k, c) for k, c in enumerate(self.table[i][j]) if c)
                           for j in range(self.rank)) for i in range(self.rank))

    def multiply(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * self.rank
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, c in self.products[i][j]:
                    out[k] += a * b * c
        return out

    def basis(self, i: int) -> list[Fraction]:
        v = [Fraction(0)] * self.rank
        v[i] = Fraction(1)
        return v

    def validate(self) -> "Algebra":
        """Raise InvalidAlgebra unless unital, associative and (if graded) homogeneous."""
        r = self.rank
        unit = list(self.unit)
        for i in range(r):
            e = self.basis(i)
            if self.multiply(unit, e) != e or self.multiply(e, unit) != e:
                raise InvalidAlgebra(f"unit is not a two-sided identity on e{i}")
        for i in range(r):
            for j in range(r):
                ij = self.multiply(self.basis(i), self.basis(j))
                for k in range(r):
                    left = self.multiply(ij, self.basis(k))
                    right = self.multiply(self.basis(i), self.multiply(self.basis(j), self.basis(k)))
                    if left != right:
                        raise InvalidAlgebra(f"associativity fails on (e{i}, e{j}, e{k})")
        if self.degrees is not None:
            d = self.degrees
            for i in range(r):
                for j in range(r):
                    for k, _ in self.products[i][j]:
                        if d[k] != d[i] + d[j]:
                            raise InvalidAlgebra(
                                f"e{i}*e{j} has a component on e{k} of the wrong degree")
        return self


def make_algebra(table, unit, degrees=None, name: str = "A") -> Algebra:
    r = len(unit)
    t = tuple(tuple(tuple(Fraction(table[i][j][k]) for k in range(r)) for j in range(r))
              for i in range(r))
    deg = None if degrees is None else tuple(int(x) for x in degrees)
    return Algebra(r, t, tuple(Fraction(u) for u in unit), deg, name).validate()


def dual_numbers(degree: int = 1) -> Algebra:
    """Q[x]/(x^2) on the basis (1, x), with deg x = ``degree``."""
    if degree not in (1, 2):
        raise InvalidAlgebra("deg x must be 1 or 2")
    t = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return make_algebra(t, [1, 0], [0, degree], f"Q[x]/(x^2), deg x = {degree}")


def diagonal(r: int) -> Algebra:
    """Q^r with orthogonal idempotents, concentrated in degree 0."""
    t = [[[1 if i == j == k else 0 for k in range(r)] for j in range(r)] for i in range(r)]
    return make_algebra(t, [1] * r, [0] * r, f"Q^{r}")


def ground_field() -> Algebra:
    return make_algebra([[[1]]], [1], [0], "Q")


def matrix_algebra(n: int) -> Algebra:
    """n x n matrices over Q on the elementary basis; non-commutative for n >= 2."""
    r = n * n
    t = [[[0] * r for _ in range(r)] for _ in range(r)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                # E_ab * E_bc = E_ac
                t[a * n + b][b * n + c][a * n + c] = 1
    unit = [1 if a == b else 0 for a in range(n) for b in range(n)]
    return make_algebra(t, unit, [0] * r, f"M_{n}(Q)")


def algebra_from_document(doc: dict) -> Algebra:
    try:
        r = int(doc["rank"])
        raw = doc["table"]
        unit = [Fraction(str(u)) for u in doc["unit"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidAlgebra(f"algebra document needs rank, table and unit ({exc})") from None
    flat: list
    if isinstance(raw, list) and len(raw) == r ** 3 and not any(isinstance(x, list) for x in raw):
        flat = raw
    else:
        try:
            flat = [raw[i][j][k] for i in range(r) for j in range(r) for k in range(r)]
        except (IndexError, TypeError):
            raise InvalidAlgebra("table must be r^3 numbers, flat or nested") from None
    vals = [Fraction(str(x)) for x in flat]
    table = [[[vals[(i * r + j) * r + k] for k in range(r)] for j in range(r)] for i in range(r)]
    if len(unit) != r:
        raise InvalidAlgebra("unit must have rank entries")
    return make_algebra(table, unit, doc.get("degrees"), doc.get("name", "A"))


BUILTINS = {
    "dual-numbers": lambda: dual_numbers(1),
    "dual-numbers-2": lambda: dual_numbers(2),
    "field": ground_field,
}


def parse_algebra(text: str) -> Algebra:
    """Builtin name (``dual-numbers``, ``dual-numbers-2``, ``field``, ``diagonal:r``) or JSON file."""
    if text in BUILTINS:
        return BUILTINS[text]()
    if text.startswith("diagonal:"):
        return diagonal(int(text.split(":", 1)[1]))
    path = Path(text)
    if not path.exists():
        raise InvalidAlgebra(f"unknown algebra {text!r} (not a builtin and no such file)")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InvalidAlgebra(f"{path}: line {exc.lineno}: {exc.msg}") from None
    return algebra_from_document(doc)


def qdim(a: Algebra) -> LaurentPolynomial:
    if a.degrees is None:
        raise UngradedAlgebra(f"{a.name} carries no grading")
    out: dict[int, int] = {}
    for d in a.degrees:
        out[d] = out.get(d, 0) + 1
    return LaurentPolynomial(out, "q")


def _merge_slots(comps, hi_comps, s: int, t: int) -> tuple[int, int]:
    """Slots of the source and target components; checks the merged order."""
    i = next(k for k, c in enumerate(comps) if s in c)
    j = next(k for k, c in enumerate(comps) if t in c)
    lo, up = min(i, j), max(i, j)
    merged = list(comps)
    merged[lo] = tuple(sorted(comps[lo] + comps[up]))
    del merged[up]
    if tuple(merged) != hi_comps:
        raise AssertionError("merged components are not ordered by minimal vertex")
    return i, j


def build_algebra_complex(g: Digraph, a: Algebra, poset: PathPoset | None = None) -> CochainComplex:
    p = enumerate_path_poset(g) if poset is None else poset
    signs = canonical_sign(p).signs
    r = a.rank
    comps = [components(g, m) for m in p.masks]
    # offset of each multipath's block inside its degree
    dims: list[int] = []
    offset = [0] * len(p.masks)
    for ids in p.levels:
        total = 0
        for i in ids:
            offset[i] = total
            total += r ** len(comps[i])
        dims.append(total)
    rows: list[list[dict[int, Fraction]]] = [[{} for _ in range(dims[n + 1])]
                                             for n in range(len(dims) - 1)]
    for k, (lo, hi, e) in enumerate(p.covers):
        n = p.level_of(lo)
        s, t = g.edges[e]
        i, j = _merge_slots(comps[lo], comps[hi], s, t)
        c = len(comps[lo])
        lo_slot, up_slot = min(i, j), max(i, j)
        sgn = -1 if signs[k] else 1
        target_rows = rows[n]
        for idx, word in enumerate(cartesian(range(r), repeat=c)):
            for out_k, coeff in a.products[word[i]][word[j]]:
                new = list(word)
                new[lo_slot] = out_k
                del new[up_slot]
                pos = 0
                for x in new:
                    pos = pos * r + x
                row = target_rows[offset[hi] + pos]
                col = offset[lo] + idx
                row[col] = row.get(col, 0) + sgn * coeff
    mats = tuple(Matrix(dims[n + 1], dims[n], rows[n]) for n in range(len(dims) - 1))
    return CochainComplex(tuple(dims), mats, QQ)


def algebra_betti(g: Digraph, a: Algebra) -> BettiTable:
    return betti_numbers(build_algebra_complex(g, a))


def algebra_dims(g: Digraph, r: int, poset: PathPoset | None = None) -> list[int]:
    """dim C^n(g; A) for a rank-r algebra: level counts weighted by r^{components}."""
    p = enumerate_path_poset(g) if poset is None else poset
    V = g.vertex_count
    return [len(ids) * r ** (V - n) for n, ids in enumerate(p.levels)]
