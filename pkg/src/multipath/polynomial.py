"""Integer Laurent polynomials in one variable."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class LaurentPolynomial:
    __slots__ = ("coefficients", "var")

    def __init__(self, coefficients: Mapping[int, int] | None = None, var: str = "q"):
        self.coefficients = {int(k): int(v) for k, v in sorted((coefficients or {}).items()) if v}
        self.var = var

    @classmethod
    def constant(cls, c: int, var: str = "q") -> "LaurentPolynomial":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, var: str = "q") -> "LaurentPolynomial":
        return cls({exponent: coefficient}, var)

    @classmethod
    def variable(cls, var: str = "q") -> "LaurentPolynomial":
        return cls({1: 1}, var)

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.coefficients)
        for k, v in o.coefficients.items():
            out[k] = out.get(k, 0) + v
        return LaurentPolynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({k: -v for k, v in self.coefficients.items()}, self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out: dict[int, int] = {}
        for a, x in self.coefficients.items():
            for b, y in o.coefficients.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPolynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coefficients) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, v), = self.coefficients.items()
            if v not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPolynomial({k * n: v if n % 2 else 1}, self.var)
        result = LaurentPolynomial.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.var)
        return isinstance(other, LaurentPolynomial) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(tuple(self.coefficients.items()))

    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> int | None:
        return max(self.coefficients) if self.coefficients else None

    def low_degree(self) -> int | None:
        return min(self.coefficients) if self.coefficients else None

    def evaluate(self, x: int | Fraction) -> int | Fraction:
        total: int | Fraction = 0
        for k, v in self.coefficients.items():
            total += v * (Fraction(x) ** k if k < 0 else x ** k)
        return total

    def compose(self, inner: "LaurentPolynomial") -> "LaurentPolynomial":
        """Substitute ``inner`` for the variable (non-negative exponents only)."""
        if self.coefficients and min(self.coefficients) < 0:
            raise ValueError("cannot substitute into negative powers")
        out = LaurentPolynomial({}, inner.var)
        for k, v in self.coefficients.items():
            out = out + inner ** k * v
        return out

    def rename(self, var: str) -> "LaurentPolynomial":
        return LaurentPolynomial(self.coefficients, var)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for k, v in self.coefficients.items():
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"
