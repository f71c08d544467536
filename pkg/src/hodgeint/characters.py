"""Symmetric group characters and the Burnside formula for double Hurwitz numbers.

Only used to cross-check the closed form in :mod:`hodgeint.hurwitz`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable

from .partitions import Partition, enumerate_partitions, z_factor

__all__ = [
    "mn_character",
    "character_table",
    "hook_length_dimension",
    "central_character",
    "burnside_double_hurwitz",
]


def mn_character(irrep: Iterable[int], class_type: Iterable[int]) -> int:
    """chi_irrep evaluated on the class of cycle type ``class_type`` (Murnaghan-Nakayama)."""
    irrep, class_type = Partition(irrep), Partition(class_type)
    if irrep.size != class_type.size:
        raise ValueError(f"size mismatch: {irrep} vs {class_type}")
    return _mn(_beta_set(irrep), tuple(class_type))


def _beta_set(lam: tuple[int, ...]) -> frozenset[int]:
    n = len(lam)
    return frozenset(part + n - 1 - i for i, part in enumerate(lam))


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    r, rest = cycles[0], cycles[1:]
    total = 0
    # removing a rim hook of length r slides one bead down r places
    for b in beta:
        target = b - r
        if target < 0 or target in beta:
            continue
        height = sum(1 for x in beta if target < x < b)
        total += (-1) ** height * _mn((beta - {b}) | {target}, rest)
    return total


@lru_cache(maxsize=None)
def character_table(d: int) -> dict[tuple[Partition, Partition], int]:
    parts = enumerate_partitions(d)
    return {(xi, nu): mn_character(xi, nu) for xi in parts for nu in parts}


def hook_length_dimension(lam: Iterable[int]) -> int:
    lam = Partition(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.size) // hooks


def central_character(xi: Iterable[int]) -> Fraction:
    """f_xi(2) = |C_(2)| chi_xi(transposition) / dim R_xi; zero for d < 2."""
    xi = Partition(xi)
    d = xi.size
    if d < 2:
        return Fraction(0)
    dim = mn_character(xi, (1,) * d)
    return Fraction(comb(d, 2) * mn_character(xi, (2,) + (1,) * (d - 2)), dim)


def burnside_double_hurwitz(mu: Iterable[int], nu: Iterable[int], r: int) -> Fraction:
    """Disconnected double Hurwitz number with r simple branch points."""
    mu, nu = Partition(mu), Partition(nu)
    if mu.size != nu.size:
        raise ValueError(f"size mismatch: {mu} vs {nu}")
    if r < 0:
        raise ValueError("number of branch points must be non-negative")
    d = mu.size
    table = character_table(d)
    total = Fraction(0)
    for xi in enumerate_partitions(d):
        f = central_character(xi)
        total += f**r * Fraction(table[xi, nu], z_factor(nu)) * Fraction(table[xi, mu], z_factor(mu))
    return total
