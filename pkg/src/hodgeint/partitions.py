"""Integer partitions and the vertex splittings used by the graph sum.

Partitions and exponent tuples are stored as weakly decreasing tuples, so
equal multisets compare and hash equal.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Partition",
    "ExponentTuple",
    "VertexTriple",
    "enumerate_partitions",
    "z_factor",
    "aut_order",
    "sub_multisets",
    "enumerate_vertex_configs",
]


class _SortedTuple(tuple):
    _min_part = 0

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] < cls._min_part:
            raise ValueError(f"{cls.__name__} entries must be >= {cls._min_part}: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self)})"


class Partition(_SortedTuple):
    """Weakly decreasing tuple of positive integers."""

    _min_part = 1


class ExponentTuple(_SortedTuple):
    """Weakly decreasing tuple of non-negative integers (zeros allowed)."""

    _min_part = 0


class VertexTriple(NamedTuple):
    genus: int
    nu_block: Partition
    e_block: ExponentTuple


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of d in reverse lexicographic order, (d) first."""
    if d < 0:
        raise ValueError("cannot partition a negative integer")
    return [Partition(p) for p in _partitions(d, d)]


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for p in range(min(n, largest), 0, -1):
        out.extend((p,) + rest for rest in _partitions(n - p, p))
    return tuple(out)


def z_factor(nu: Iterable[int]) -> int:
    """z_nu = prod_i i^{m_i} m_i!, the centralizer order of cycle type nu."""
    z = 1
    for part, mult in Counter(nu).items():
        z *= part**mult * factorial(mult)
    return z


def aut_order(parts: Iterable[int]) -> int:
    """prod of m! over the multiplicities m of the distinct entries."""
    a = 1
    for mult in Counter(parts).values():
        a *= factorial(mult)
    return a


def sub_multisets(items: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield every (chosen, remainder) split of a sorted multiset, each once."""
    groups = sorted(Counter(items).items(), reverse=True)

    def rec(i: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        if i == len(groups):
            yield (), ()
            return
        value, mult = groups[i]
        for chosen, rest in rec(i + 1):
            for q in range(mult + 1):
                yield (value,) * q + chosen, (value,) * (mult - q) + rest

    yield from rec(0)


def enumerate_vertex_configs(
    nu: Iterable[int], e: Iterable[int], chi0: int
) -> list[tuple[tuple[VertexTriple, ...], Fraction]]:
    """Unordered splittings of (nu, e, chi0) into vertices, with weight 1/prod m_k!.

    Each configuration is a weakly decreasing tuple of VertexTriples whose
    nu blocks are nonempty and union to nu, whose e blocks union to e, and
    whose Euler characteristics sum(2 - 2 g_i) equal chi0.
    """
    nu = Partition(nu)
    e = ExponentTuple(e)
    if chi0 % 2 or chi0 > 2 * len(nu):
        return []
    return list(_configs(tuple(nu), tuple(e), chi0))


@lru_cache(maxsize=4096)
def _configs(nu: tuple[int, ...], e: tuple[int, ...], chi0: int):
    out = []
    for config in _decreasing_blocks(nu, e, chi0, None):
        weight = Fraction(1)
        for mult in Counter(config).values():
            weight /= factorial(mult)
        out.append((config, weight))
    return tuple(out)


def _decreasing_blocks(nu, e, chi_rest, bound) -> Iterator[tuple[VertexTriple, ...]]:
    # Blocks are produced in weakly decreasing order, so every multiset of
    # triples is generated exactly once.
    if not nu:
        if not e and chi_rest == 0:
            yield ()
        return
    if chi_rest > 2 * len(nu):
        return
    for nu_block, nu_rest in sub_multisets(nu):
        if not nu_block:
            continue
        # after this block at most len(nu_rest) vertices remain, each with chi <= 2
        max_genus = (2 * len(nu_rest) - chi_rest + 2) // 2
        for e_block, e_rest in sub_multisets(e):
            for g in range(max(0, max_genus) + 1):
                triple = VertexTriple(g, Partition(nu_block), ExponentTuple(e_block))
                if bound is not None and triple > bound:
                    continue
                for rest in _decreasing_blocks(nu_rest, e_rest, chi_rest - (2 - 2 * g), triple):
                    yield (triple,) + rest
