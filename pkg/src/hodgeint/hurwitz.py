"""Normalized one-part double Hurwitz numbers H((d), nu) / r!.

The closed form is

    H_{chi_inf}((d), nu) / r! = d^{-chi_inf + l(nu)} / |Aut nu|
                                * [t^{2 g_inf}] prod_k (sinh(kt/2)/(kt/2))^{c_k}

with r = -chi_inf + 1 + l(nu), chi_inf = 2 - 2 g_inf, c_1 = m_1(nu) - 1 and
c_k = m_k(nu) for k > 1.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .exact import TruncatedSeries, sinh_norm_series
from .partitions import Partition, aut_order

__all__ = [
    "sinh_exponents",
    "sinh_product_coefficient",
    "sinh_product_coefficient_series",
    "hurwitz_weight",
    "transposition_count",
]


def sinh_exponents(nu: Iterable[int]) -> dict[int, int]:
    """The exponents c_k; c_1 is -1 when nu has no part equal to 1."""
    c = Counter(nu)
    c[1] -= 1
    return {k: ck for k, ck in sorted(c.items()) if ck}


def transposition_count(nu: Iterable[int], g_inf: int) -> int:
    """r = 2 g_inf - 1 + l(nu), the number of simple branch points."""
    return 2 * g_inf - 1 + len(tuple(nu))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _power_coefficient(k: int, c: int, b: int) -> Fraction:
    """[t^{2b}] (sinh(kt/2)/(kt/2))^c for c >= 0, by splitting b over the c factors."""
    total = Fraction(0)
    for split in _compositions(b, c):
        denom = 1
        for a in split:
            denom *= factorial(2 * a + 1)
        total += Fraction(k ** (2 * b), 4**b * denom)
    return total


@lru_cache(maxsize=None)
def _ratio_coefficient(h: int, m: int) -> Fraction:
    """[t^{2m}] of sinh(ht/2)/(h sinh(t/2)) = (1/h) sum_j exp((h-1-2j) t/2)."""
    odd_l = range(1, h, 2) if h % 2 == 0 else range(2, h, 2)
    s = Fraction(sum(l ** (2 * m) for l in odd_l) * 2, 4**m)
    if h % 2 == 1 and m == 0:
        s += 1
    return s / (h * factorial(2 * m))


def sinh_product_coefficient(nu: Iterable[int], g_inf: int) -> Fraction:
    """[t^{2 g_inf}] prod_k (sinh(kt/2)/(kt/2))^{c_k}, via explicit coefficient sums.

    When nu has no part 1 (c_1 = -1) the inverse factor is paired with one
    factor of the smallest part h and the quotient is expanded as a finite
    sum of exponentials.
    """
    nu = Partition(nu)
    if not nu:
        raise ValueError("partition must be nonempty")
    if g_inf < 0:
        return Fraction(0)
    return _sinh_coefficient(tuple(nu), g_inf)


@lru_cache(maxsize=None)
def _sinh_coefficient(nu: tuple[int, ...], g_inf: int) -> Fraction:
    c = sinh_exponents(nu)
    factors = []  # (coefficient function of b)
    if c.get(1, 0) == -1:
        h = min(nu)
        factors.append(lambda b, h=h: _ratio_coefficient(h, b))
        c = dict(c)
        del c[1]
        c[h] -= 1
    for k, ck in c.items():
        if ck:
            factors.append(lambda b, k=k, ck=ck: _power_coefficient(k, ck, b))
    total = Fraction(0)
    for split in _compositions(g_inf, len(factors)):
        term = Fraction(1)
        for f, b in zip(factors, split):
            term *= f(b)
            if not term:
                break
        total += term
    return total


def sinh_product_coefficient_series(nu: Iterable[int], g_inf: int) -> Fraction:
    """Same coefficient by multiplying truncated series; the check path."""
    nu = Partition(nu)
    order = 2 * g_inf
    product = TruncatedSeries.constant(1, order)
    for k, ck in sinh_exponents(nu).items():
        product = product * sinh_norm_series(k, order) ** ck
    return product[order]


def hurwitz_weight(d: int, nu: Iterable[int], g_inf: int) -> Fraction:
    nu = Partition(nu)
    if nu.size != d:
        raise ValueError(f"partition {nu} does not have size {d}")
    if d <= 0:
        raise ValueError("degree must be positive")
    chi_inf = 2 - 2 * g_inf
    return (
        Fraction(d) ** (len(nu) - chi_inf)
        / aut_order(nu)
        * sinh_product_coefficient(nu, g_inf)
    )
