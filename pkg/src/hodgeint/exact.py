"""Exact rationals, Bernoulli numbers and truncated power series.

Rationals are plain :class:`fractions.Fraction` objects, which are always
stored in lowest terms with a positive denominator.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable

__all__ = [
    "Rational",
    "rat_arith",
    "format_rational",
    "parse_rational",
    "bernoulli",
    "TruncatedSeries",
    "series_reciprocal",
    "sinh_norm_series",
]

Rational = Fraction

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) to two rationals exactly."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "div" and b == 0:
        raise ZeroDivisionError("rational division by zero")
    return Fraction(fn(Fraction(a), Fraction(b)))


def format_rational(q: Fraction | int) -> str:
    """Canonical text form: ``num/den``, or just ``num`` when den is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; rejects anything not in canonical form."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if d <= 0:
        raise ValueError(f"malformed rational {text!r}: denominator must be positive")
    q = Fraction(n, d)
    if format_rational(q) != text:
        raise ValueError(f"rational {text!r} is not in lowest terms")
    return q


_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(m: int) -> Fraction:
    """B_m from sum_{k=0}^{m} C(m+1, k) B_k = 0 (m > 0), so B_1 = -1/2."""
    if m < 0:
        raise ValueError("Bernoulli index must be non-negative")
    while len(_BERNOULLI) <= m:
        n = len(_BERNOULLI)
        s = sum(comb(n + 1, k) * _BERNOULLI[k] for k in range(n))
        _BERNOULLI.append(-s / (n + 1))
    return _BERNOULLI[m]


@dataclass(frozen=True)
class TruncatedSeries:
    """Dense power series sum_{i<=order} c_i t^i over the rationals."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Fraction | int], order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = (coeffs + [Fraction(0)] * (order + 1))[: order + 1]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, c: Fraction | int, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise ValueError("series truncation orders differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coefficients, other.coefficients)])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coefficients[j]
        return TruncatedSeries(out)

    def __pow__(self, k: int) -> "TruncatedSeries":
        base = self if k >= 0 else self.reciprocal()
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(abs(k)):
            result = result * base
        return result

    def reciprocal(self) -> "TruncatedSeries":
        return series_reciprocal(self)


def series_reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    a = s.coefficients
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    b = [Fraction(0)] * len(a)
    b[0] = 1 / a[0]
    for m in range(1, len(a)):
        b[m] = -sum(a[k] * b[m - k] for k in range(1, m + 1)) / a[0]
    return TruncatedSeries(b)


def sinh_norm_series(k: int, order: int) -> TruncatedSeries:
    """sinh(kt/2)/(kt/2) = sum_m (k/2)^{2m} t^{2m} / (2m+1)!, truncated at ``order``."""
    if k <= 0:
        raise ValueError("k must be positive")
    coeffs = [Fraction(0)] * (order + 1)
    for m in range(order // 2 + 1):
        coeffs[2 * m] = Fraction(k ** (2 * m), 4**m * factorial(2 * m + 1))
    return TruncatedSeries(coeffs)

