"""Hodge integral identities, the value table and the vertex contributions.

A Hodge integral with one lambda class

    int_{M_{g,m}} psi_1^{k_1} ... psi_m^{k_m} lambda_j

depends only on (g, j) and the multiset of psi exponents, so it is keyed by a
:class:`HodgeKey` holding the exponents in weakly decreasing order.
"""
from __future__ import annotations

import enum
import os
from fractions import Fraction
from itertools import product
from math import comb, factorial
from pathlib import Path
from typing import Callable, Iterable, Iterator, NamedTuple

from .exact import format_rational, parse_rational
from .partitions import (
    ExponentTuple,
    Partition,
    VertexTriple,
    _partitions,
    aut_order,
    enumerate_vertex_configs,
    sub_multisets,
)

__all__ = [
    "HodgeKey",
    "Degenerate",
    "canonical_key",
    "LinearExpr",
    "HodgeTable",
    "CacheFormatError",
    "BookkeepingError",
    "KeyResolver",
    "d_vertex",
    "d_bullet",
    "d_bullet_by_configs",
    "vertex_monomials",
    "keys_of_dimension",
]


class Degenerate(enum.Enum):
    ZERO = "zero"          # dimension mismatch, the integral vanishes
    UNSTABLE = "unstable"  # 2g - 2 + m <= 0, no moduli space


class HodgeKey(NamedTuple):
    genus: int
    lambda_index: int
    psi: tuple[int, ...]

    @property
    def n_points(self) -> int:
        return len(self.psi)

    @property
    def dimension(self) -> int:
        return 3 * self.genus - 3 + len(self.psi)

    def __str__(self) -> str:
        return f"{self.genus} {self.lambda_index} [{','.join(map(str, self.psi))}]"

    @classmethod
    def parse(cls, text: str) -> "HodgeKey":
        g, k, exps = text.split(maxsplit=2)
        exps = exps.strip()
        if not (exps.startswith("[") and exps.endswith("]")):
            raise ValueError(f"malformed exponent list {exps!r}")
        inner = exps[1:-1].strip()
        psi = [int(x) for x in inner.split(",")] if inner else []
        key = canonical_key(int(g), int(k), psi)
        if not isinstance(key, HodgeKey):
            raise ValueError(f"{text!r} is not a valid Hodge integral ({key.value})")
        return key

    def sort_key(self) -> tuple:
        return (self.dimension, self.genus, self.lambda_index, self.psi)


def canonical_key(genus: int, lambda_index: int, exponents: Iterable[int]) -> HodgeKey | Degenerate:
    exps = tuple(sorted((int(x) for x in exponents), reverse=True))
    if genus < 0 or (exps and exps[-1] < 0):
        raise ValueError("genus and psi exponents must be non-negative")
    m = len(exps)
    if 2 * genus - 2 + m <= 0:
        return Degenerate.UNSTABLE
    if not 0 <= lambda_index <= genus:
        return Degenerate.ZERO
    if lambda_index + sum(exps) != 3 * genus - 3 + m:
        return Degenerate.ZERO
    return HodgeKey(genus, lambda_index, exps)


class LinearExpr:
    """Affine combination constant + sum_k c_k [key_k] over unknown integrals."""

    __slots__ = ("constant", "terms")

    def __init__(self, constant: Fraction | int = 0, terms: dict[HodgeKey, Fraction] | None = None):
        self.constant = Fraction(constant)
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def symbol(cls, key: HodgeKey) -> "LinearExpr":
        return cls(0, {key: Fraction(1)})

    @property
    def is_constant(self) -> bool:
        return not self.terms

    def __add__(self, other: "LinearExpr | Fraction | int") -> "LinearExpr":
        if not isinstance(other, LinearExpr):
            return LinearExpr(self.constant + other, self.terms)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return LinearExpr(self.constant + other.constant, terms)

    __radd__ = __add__

    def __neg__(self) -> "LinearExpr":
        return self * -1

    def __sub__(self, other: "LinearExpr | Fraction | int") -> "LinearExpr":
        return self + (-other)

    def __mul__(self, other: "LinearExpr | Fraction | int") -> "LinearExpr":
        if isinstance(other, LinearExpr):
            if self.terms and other.terms:
                raise BookkeepingError("product of two expressions with unknowns")
            if other.terms:
                self, other = other, self
            other = other.constant
        return LinearExpr(self.constant * other, {k: v * other for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearExpr):
            if isinstance(other, (int, Fraction)):
                return not self.terms and self.constant == other
            return NotImplemented
        return self.constant == other.constant and self.terms == other.terms

    def __repr__(self) -> str:
        parts = [format_rational(self.constant)]
        parts += [f"{format_rational(v)}*<{k}>" for k, v in self.terms.items()]
        return f"LinearExpr({' + '.join(parts)})"


class CacheFormatError(ValueError):
    pass


class BookkeepingError(RuntimeError):
    """An integral showed up where the dimension count says it cannot."""


class HodgeTable:
    """Solved integrals, optionally mirrored to a text cache file.

    Each line of the cache reads ``g k [e1,e2,...] = num/den``.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self.values: dict[HodgeKey, Fraction] = {}
        # constant vertex contributions, only valid because stored values are final
        self.vertex_cache: dict[VertexTriple, Fraction] = {}
        if self.path is not None and self.path.exists():
            self.load(self.path)

    def __contains__(self, key: object) -> bool:
        return key in self.values

    def __getitem__(self, key: HodgeKey) -> Fraction:
        return self.values[key]

    def __len__(self) -> int:
        return len(self.values)

    def get(self, key: HodgeKey, default=None):
        return self.values.get(key, default)

    def store(self, key: HodgeKey, value: Fraction) -> None:
        old = self.values.get(key)
        if old is not None and old != value:
            raise ValueError(f"conflicting values for {key}: {old} vs {value}")
        self.values[key] = Fraction(value)

    def load(self, path: str | os.PathLike) -> None:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    lhs, rhs = line.split("=")
                    key, value = HodgeKey.parse(lhs.strip()), parse_rational(rhs)
                    self.store(key, value)
                except ValueError as exc:
                    raise CacheFormatError(f"{path}:{lineno}: bad cache record {line.strip()!r} ({exc})") from None

    @staticmethod
    def format_record(key: HodgeKey, value: Fraction) -> str:
        return f"{key} = {format_rational(value)}"

    def append(self, keys: Iterable[HodgeKey]) -> None:
        if self.path is None:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            for key in sorted(keys, key=HodgeKey.sort_key):
                fh.write(self.format_record(key, self.values[key]) + "\n")

    def write(self, path: str | os.PathLike | None = None, keys: Iterable[HodgeKey] | None = None) -> None:
        path = Path(path) if path is not None else self.path
        if path is None:
            raise ValueError("no cache path to write to")
        keys = sorted(self.values if keys is None else keys, key=HodgeKey.sort_key)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            for key in keys:
                fh.write(self.format_record(key, self.values[key]) + "\n")
        os.replace(tmp, path)


class KeyResolver:
    """Maps an integral to a LinearExpr: symbolic if it is a current unknown,
    otherwise its value, computing lower-dimensional values on demand."""

    def __init__(
        self,
        table: HodgeTable,
        target_dim: int | None = None,
        unknowns: Iterable[HodgeKey] = (),
        compute: Callable[[HodgeKey], Fraction] | None = None,
    ):
        self.table = table
        self.target_dim = target_dim
        self.unknowns = frozenset(unknowns)
        self.compute = compute
        # D-bullet coefficients; valid while the unknown set is fixed
        self.bullet_memo: dict[tuple, LinearExpr] = {}

    def __call__(self, key: HodgeKey) -> LinearExpr:
        if self.target_dim is not None:
            if key.dimension > self.target_dim:
                raise BookkeepingError(f"{key} exceeds the target dimension {self.target_dim}")
            if key.dimension == self.target_dim:
                if key in self.unknowns:
                    return LinearExpr.symbol(key)
                if key in self.table:
                    return LinearExpr(self.table[key])
                raise BookkeepingError(f"{key} is at the target dimension but neither known nor an unknown")
        if key in self.table:
            return LinearExpr(self.table[key])
        if self.compute is None:
            raise KeyError(f"no value for {key}")
        return LinearExpr(self.compute(key))

    def cacheable(self, dimension: int) -> bool:
        return self.target_dim is not None and dimension < self.target_dim


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def vertex_monomials(genus: int, nu: tuple[int, ...], e: tuple[int, ...]) -> dict[HodgeKey, Fraction]:
    """Expand int Lambda_g^v(1) prod_j (1-psi_j)^{e_j} / prod_i (1 - nu_i psi_i).

    Returns the coefficient of each canonical integral; the monomial
    lambda_k prod psi_i^{l_i} prod psi_j^{lt_j} carries
    (-1)^{k + sum lt_j} prod C(e_j, lt_j) prod nu_i^{l_i}.
    """
    dim = 3 * genus - 3 + len(nu) + len(e)
    out: dict[HodgeKey, Fraction] = {}
    for k in range(genus + 1):
        for lt in product(*(range(x + 1) for x in e)):
            rest = dim - k - sum(lt)
            if rest < 0:
                continue
            base = (-1) ** (k + sum(lt))
            for x, l in zip(e, lt):
                base *= comb(x, l)
            for ls in _compositions(rest, len(nu)):
                c = base
                for x, l in zip(nu, ls):
                    c *= x**l
                key = HodgeKey(genus, k, tuple(sorted(ls + lt, reverse=True)))
                out[key] = out.get(key, 0) + c
    return {k: Fraction(v) for k, v in out.items() if v}


def _unstable_vertex(genus: int, nu: Partition, e: ExponentTuple) -> Fraction | None:
    if genus != 0:
        return None
    if len(nu) == 1 and not e:
        a = nu[0]
        return Fraction(a) ** (a - 2) / factorial(a)
    if len(nu) == 2 and not e:
        a, b = nu
        return Fraction(a**a * b**b, aut_order(nu) * factorial(a) * factorial(b) * (a + b))
    if len(nu) == 1 and len(e) == 1:
        a, e1 = nu[0], e[0]
        return Fraction(a**a, factorial(a)) * sum(Fraction(comb(e1, k), a ** (1 + k)) for k in range(e1 + 1))
    return None


def d_vertex(triple: VertexTriple, resolve: KeyResolver) -> LinearExpr:
    """Contribution D_{g, nu, e} of one vertex of the fixed-locus graph."""
    genus, nu, e = triple
    if not nu:
        raise ValueError("a vertex needs at least one edge")
    closed = _unstable_vertex(genus, nu, e)
    if closed is not None:
        return LinearExpr(closed)
    dim = 3 * genus - 3 + len(nu) + len(e)
    cacheable = resolve.cacheable(dim)
    if cacheable and triple in resolve.table.vertex_cache:
        return LinearExpr(resolve.table.vertex_cache[triple])
    # marked points are labeled, so only permutations of equal e entries are divided out
    prefactor = Fraction(1, aut_order(e) * aut_order(nu))
    for x in nu:
        prefactor *= Fraction(x**x, factorial(x))
    total = LinearExpr()
    for key, coeff in vertex_monomials(genus, tuple(nu), tuple(e)).items():
        total += coeff * resolve(key)
    total = total * prefactor
    if cacheable:
        resolve.table.vertex_cache[triple] = total.constant
    return total


def d_bullet(nu: Iterable[int], e: Iterable[int], chi0: int, resolve: KeyResolver) -> LinearExpr:
    """Coefficient D^._{chi0, nu, e} of exp(D).

    Uses p_a d/dp_a exp(D) = exp(D) p_a dD/dp_a with a the largest part, so
    each term peels off the vertex holding one copy of a.  Equivalent to
    summing :func:`d_bullet_by_configs` but shares every sub-multiset.
    """
    nu, e = Partition(nu), ExponentTuple(e)
    if chi0 % 2 or chi0 > 2 * len(nu):
        return LinearExpr()
    return _bullet(tuple(nu), tuple(e), chi0, resolve)


def _bullet(nu: tuple[int, ...], e: tuple[int, ...], chi: int, resolve: KeyResolver) -> LinearExpr:
    if not nu:
        return LinearExpr(1 if not e and chi == 0 else 0)
    if chi > 2 * len(nu):
        return LinearExpr()
    memo = resolve.bullet_memo
    got = memo.get((nu, e, chi))
    if got is not None:
        return got
    a = nu[0]
    m_a = nu.count(a)
    total = LinearExpr()
    for chosen, nu_rest in sub_multisets(nu[1:]):
        block = Partition((a,) + chosen)
        share = Fraction(block.count(a), m_a)
        # the remaining len(nu_rest) vertices have chi <= 2 each
        max_genus = (2 * len(nu_rest) - chi + 2) // 2
        for e_block, e_rest in sub_multisets(e):
            for g in range(max_genus + 1):
                rest = _bullet(nu_rest, e_rest, chi - (2 - 2 * g), resolve)
                if rest == 0:
                    continue
                vertex = d_vertex(VertexTriple(g, block, ExponentTuple(e_block)), resolve)
                total += vertex * rest * share
    memo[(nu, e, chi)] = total
    return total


def d_bullet_by_configs(nu: Iterable[int], e: Iterable[int], chi0: int, resolve: KeyResolver) -> LinearExpr:
    """Direct sum over vertex configurations with weight 1/prod m_k!."""
    total = LinearExpr()
    for config, weight in enumerate_vertex_configs(nu, e, chi0):
        term = LinearExpr(weight)
        for triple in config:
            value = d_vertex(triple, resolve)
            if value == 0:
                term = LinearExpr()
                break
            term = term * value
        total = total + term
    return total


def keys_of_dimension(dimension: int) -> list[HodgeKey]:
    """Every stable one-lambda integral of the given dimension, in canonical order."""
    out = []
    for genus in range(dimension // 3 + 2):
        m = dimension - 3 * genus + 3
        if m < 1 or 2 * genus - 2 + m <= 0:
            continue
        for k in range(genus + 1):
            total = dimension - k
            for parts in _partitions(total, total):
                if len(parts) <= m:
                    out.append(HodgeKey(genus, k, parts + (0,) * (m - len(parts))))
    return sorted(out, key=HodgeKey.sort_key)
