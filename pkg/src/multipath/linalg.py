"""Exact matrices and rank computations over Q and F_p.

Two independent elimination routines live here on purpose:

* :func:`rank_rational` / :func:`rank_mod_p` clear one column at a time,
  touch only rows with a nonzero entry there, and divide each updated row
  by its content. They drive the multipath cochain complexes.
* :func:`rank_bareiss` is textbook one-step Bareiss elimination (every
  row below the pivot updated, exact division by the previous pivot). The
  simplicial route uses it, so the two routes share no elimination code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Number = int | Fraction


@dataclass(frozen=True)
class FieldSpec:
    kind: str = "Rationals"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Rationals":
            if self.p is not None:
                raise ValueError("the rationals take no characteristic")
        elif self.kind == "PrimeField":
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Rationals")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("PrimeField", p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "0"):
            return cls.rationals()
        if t.startswith("f") or t.startswith("gf"):
            t = t.lstrip("gf").lstrip("_")
        return cls.prime(int(t))

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"


QQ = FieldSpec.rationals()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Matrix:
    """Sparse exact matrix stored as one ``{column: value}`` dict per row."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[Mapping[int, Number]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = tuple({} for _ in range(nrows))
        else:
            if len(rows) != nrows:
                raise ValueError("row count mismatch")
            self.rows = tuple({c: v for c, v in r.items() if v} for r in rows)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[Number]], ncols: int | None = None) -> "Matrix":
        n = len(dense)
        m = ncols if ncols is not None else (len(dense[0]) if n else 0)
        return cls(n, m, [{j: v for j, v in enumerate(r) if v} for r in dense])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def to_dense(self) -> list[list[Number]]:
        out = []
        for r in self.rows:
            row = [0] * self.ncols
            for c, v in r.items():
                row[c] = v
            out.append(row)
        return out

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_zero(self, p: int | None = None) -> bool:
        if p is None:
            return all(not r for r in self.rows)
        return all(v % p == 0 for r in self.rows for v in r.values())

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self.rows:
            acc: dict[int, Number] = {}
            for k, a in r.items():
                for c, b in other.rows[k].items():
                    acc[c] = acc.get(c, 0) + a * b
            out.append(acc)
        return Matrix(self.nrows, other.ncols, out)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.rows == other.rows)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def _integer_row(row: Mapping[int, Number], ncols: int) -> list[int] | None:
    """Dense integer multiple of the row with content 1, or None if zero."""
    if not row:
        return None
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = [0] * ncols
    g = 0
    for c, v in row.items():
        iv = int(v * den)
        out[c] = iv
        g = gcd(g, iv)
    if g > 1:
        out = [x // g for x in out]
    return out


def rank_rational(m: Matrix) -> int:
    """Rank over Q by fraction-free elimination with content normalisation."""
    rows = [r for r in (_integer_row(x, m.ncols) for x in m.rows) if r is not None]
    if not rows:
        return 0
    rank = 0
    n = len(rows)
    for c in range(m.ncols):
        piv = None
        best = None
        for r in range(rank, n):
            v = rows[r][c]
            if v and (best is None or abs(v) < best):
                piv, best = r, abs(v)
                if best == 1:
                    break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        a = prow[c]
        for r in range(rank + 1, n):
            row = rows[r]
            b = row[c]
            if not b:
                continue
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = row[:c] + [fa * x - fb * y for x, y in zip(row[c:], prow[c:])]
            h = 0
            for x in new[c + 1:]:
                if x:
                    h = gcd(h, x)
                    if h == 1:
                        break
            if h > 1:
                new = [x // h for x in new]
            rows[r] = new
        rank += 1
        if rank == n:
            break
    return rank


def rank_mod_p(m: Matrix, p: int) -> int:
    """Rank over F_p, same column-by-column scheme as :func:`rank_rational`."""
    rows = []
    for x in m.rows:
        if not x:
            continue
        row = [0] * m.ncols
        nz = False
        for c, v in x.items():
            if isinstance(v, Fraction):
                v = v.numerator * pow(v.denominator, -1, p)
            row[c] = v % p
            nz = nz or bool(row[c])
        if nz:
            rows.append(row)
    rank = 0
    n = len(rows)
    for c in range(m.ncols):
        piv = next((r for r in range(rank, n) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        prow = [(x * inv) % p for x in rows[rank]]
        rows[rank] = prow
        for r in range(rank + 1, n):
            b = rows[r][c]
            if b:
                row = rows[r]
                rows[r] = row[:c] + [(x - b * y) % p for x, y in zip(row[c:], prow[c:])]
        rank += 1
        if rank == n:
            break
    return rank


def rank_bareiss(dense: Sequence[Sequence[int]], p: int | None = None) -> int:
    """One-step Bareiss elimination on an integer matrix.

    Over Q every intermediate entry is a minor of the input, so the division
    by the previous pivot is exact. With ``p`` given, arithmetic is mod p.
    """
    a = [list(r) for r in dense]
    if p is not None:
        a = [[x % p for x in r] for r in a]
    n = len(a)
    if n == 0:
        return 0
    m = len(a[0])
    prev = 1
    rank = 0
    for c in range(m):
        piv = next((r for r in range(rank, n) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pv = a[rank][c]
        for r in range(rank + 1, n):
            row = a[r]
            for j in range(c + 1, m):
                val = pv * row[j] - row[c] * a[rank][j]
                if p is None:
                    row[j] = val // prev
                else:
                    row[j] = val * pow(prev, -1, p) % p
            row[c] = 0
        prev = pv
        rank += 1
        if rank == n:
            break
    return rank


def rank(m: Matrix, field: FieldSpec = QQ) -> int:
    if field.p is None:
        return rank_rational(m)
    return rank_mod_p(m, field.p)


def reduce_mod(m: Matrix, p: int) -> Matrix:
    rows = []
    for r in m.rows:
        out = {}
        for c, v in r.items():
            if isinstance(v, Fraction):
                v = v.numerator * pow(v.denominator, -1, p)
            v %= p
            if v:
                out[c] = v
        rows.append(out)
    return Matrix(m.nrows, m.ncols, rows)


def identity(n: int) -> Matrix:
    return Matrix(n, n, [{i: 1} for i in range(n)])


def from_entries(nrows: int, ncols: int, entries: Iterable[tuple[int, int, Number]]) -> Matrix:
    rows: list[dict[int, Number]] = [{} for _ in range(nrows)]
    for i, j, v in entries:
        rows[i][j] = rows[i].get(j, 0) + v
    return Matrix(nrows, ncols, rows)
