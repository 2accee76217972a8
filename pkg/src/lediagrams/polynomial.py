"""Exact integer polynomials and Laurent polynomials in one variable."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Dense polynomial with integer coefficients, constant term first.

    >>> q = IntPolynomial.variable()
    >>> (1 + q) * (1 + q)
    IntPolynomial([1, 2, 1])
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"coefficient {a!r} is not an integer")
        self.coeffs: tuple[int, ...] = c

    @classmethod
    def variable(cls) -> IntPolynomial:
        return cls([0, 1])

    @classmethod
    def constant(cls, a: int) -> IntPolynomial:
        return cls([a])

    @classmethod
    def monomial(cls, degree: int, a: int = 1) -> IntPolynomial:
        return cls([0] * degree + [a])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by the k-th power of the variable (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift; use LaurentPolynomial")
        return IntPolynomial((0,) * k + self.coeffs) if self.coeffs else self

    @staticmethod
    def _coerce(other) -> IntPolynomial | None:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPolynomial(self.coefficient(i) + o.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPolynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_terms(dict(enumerate(self.coeffs)), "q")

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def format_terms(terms: dict[int, int], var: str) -> str:
    """Human-readable sum, highest power first."""
    parts = []
    for e in sorted((e for e, a in terms.items() if a), reverse=True):
        a = terms[e]
        mag = abs(a)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}{power}"
        sign = "-" if a < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


Number = Union[int, Fraction]


class LaurentPolynomial:
    """Integer Laurent polynomial stored as ``(low, coeffs)``.

    ``coeffs[i]`` is the coefficient of ``t**(low + i)``; leading and trailing
    zeros are dropped, and the zero polynomial has ``low == 0``.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Sequence[int] = (), low: int = 0):
        c = list(coeffs)
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        c = list(_trim(c[start:]))
        self.coeffs: tuple[int, ...] = tuple(c)
        self.low: int = low + start if c else 0

    @classmethod
    def from_poly(cls, p: IntPolynomial) -> LaurentPolynomial:
        return cls(p.coeffs, 0)

    @classmethod
    def monomial(cls, exponent: int, a: int = 1) -> LaurentPolynomial:
        return cls([a], exponent)

    def terms(self) -> dict[int, int]:
        return {self.low + i: a for i, a in enumerate(self.coeffs) if a}

    @property
    def is_polynomial(self) -> bool:
        return self.low >= 0 or not self.coeffs

    def to_poly(self) -> IntPolynomial:
        if not self.is_polynomial:
            raise ValueError(f"{self} has negative exponents")
        return IntPolynomial((0,) * self.low + self.coeffs)

    @staticmethod
    def _coerce(other) -> LaurentPolynomial | None:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, IntPolynomial):
            return LaurentPolynomial.from_poly(other)
        if isinstance(other, int):
            return LaurentPolynomial([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            return self
        if not self.coeffs:
            return o
        low = min(self.low, o.low)
        high = max(self.low + len(self.coeffs), o.low + len(o.coeffs))
        out = [0] * (high - low)
        for src in (self, o):
            for i, a in enumerate(src.coeffs):
                out[src.low - low + i] += a
        return LaurentPolynomial(out, low)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial([-a for a in self.coeffs], self.low)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return LaurentPolynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return LaurentPolynomial(out, self.low + o.low)

    __rmul__ = __mul__

    def __call__(self, x: Number) -> Number:
        if x == 0 and self.low < 0:
            raise ZeroDivisionError("negative exponent evaluated at 0")
        total: Number = 0
        for e, a in self.terms().items():
            total += a * (Fraction(x) ** e if e < 0 else x ** e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.low, self.coeffs) == (o.low, o.coeffs)

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return f"LaurentPolynomial({list(self.coeffs)}, low={self.low})"

    def __str__(self):
        return format_terms(self.terms(), "t")
