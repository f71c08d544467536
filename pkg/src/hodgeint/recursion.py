"""Linear relations among top-dimensional integrals from the mu = (d) localization identity.

For a group (g, e) with e = (k_1, ..., k_n), every degree d >= minimal_degree
gives one equation

    sum_{nu |- d} sum_{g_inf} z_nu (-1)^r H_{chi_inf}((d), nu)/r! D^._{chi0, nu, e} = 0,

where chi0 = (2 - 2g) - (2 - 2 g_inf) + 2 l(nu) and r = -chi_inf + 1 + l(nu).
The only terms of dimension 3g - 2 + n come from a single vertex carrying
genus g, one edge and all of e, i.e. integrals over M_{g, n+1} with a free
exponent on the extra point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable

from .hodge import HodgeKey, KeyResolver, LinearExpr, d_bullet
from .hurwitz import hurwitz_weight
from .partitions import ExponentTuple, aut_order, enumerate_partitions, z_factor

__all__ = [
    "UnknownGroup",
    "RelationRow",
    "DegreeWindowError",
    "build_group",
    "group_of",
    "minimal_degree",
    "build_relation",
]


class DegreeWindowError(ValueError):
    def __init__(self, genus: int, e: tuple[int, ...], d: int):
        self.minimal = minimal_degree(genus, e)
        super().__init__(
            f"degree d={d} is outside the valid window for g={genus}, e={list(e)}; minimal legal d is {self.minimal}"
        )


@dataclass(frozen=True)
class UnknownGroup:
    """Integrals over M_{g, n+1} solved together.

    ``keys`` holds every integral the relations can contain at the top
    dimension (exponents a_j <= e_j on the constrained points, any exponent
    on the free point).  ``unknowns`` are the ones this group determines:
    those whose largest exponent sits on the free point and whose remaining
    exponents are exactly e.  The rest belong to groups with smaller |e|.
    """

    genus: int
    e: ExponentTuple
    keys: tuple[HodgeKey, ...]
    unknowns: tuple[HodgeKey, ...]

    @property
    def target_dim(self) -> int:
        return 3 * self.genus - 2 + len(self.e)

    @property
    def dependencies(self) -> tuple[HodgeKey, ...]:
        own = set(self.unknowns)
        return tuple(k for k in self.keys if k not in own)


@dataclass(frozen=True)
class RelationRow:
    """sum_i coefficients[i] * unknowns[i] + constant = 0."""

    d: int
    unknowns: tuple[HodgeKey, ...]
    coefficients: tuple[Fraction, ...]
    constant: Fraction

    def evaluate(self, values: Iterable[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.coefficients, values)), self.constant)


def group_of(key: HodgeKey) -> tuple[int, ExponentTuple]:
    """The group that solves ``key``: its largest exponent goes on the free point."""
    return key.genus, ExponentTuple(key.psi[1:])


def build_group(genus: int, e: Iterable[int]) -> UnknownGroup:
    e = ExponentTuple(e)
    n = len(e)
    if 2 * genus - 2 + n + 1 <= 0:
        raise ValueError(f"M_{{{genus},{n + 1}}} is unstable")
    top = 3 * genus - 2 + n
    keys = set()
    for k in range(genus + 1):
        for a in product(*(range(x + 1) for x in e)):
            a0 = top - k - sum(a)
            if a0 >= 0:
                keys.add(HodgeKey(genus, k, tuple(sorted((a0,) + a, reverse=True))))
    # unknowns listed with the highest lambda index first
    order = lambda key: (-key.lambda_index, key.psi)
    keys = tuple(sorted(keys, key=order))
    unknowns = tuple(key for key in keys if group_of(key) == (genus, e))
    return UnknownGroup(genus, e, keys, unknowns)


def minimal_degree(genus: int, e: Iterable[int]) -> int:
    """Smallest d with d > |e| + chi - 1, where chi = 2 - 2g (and d >= 1)."""
    return max(1, sum(e) + 2 - 2 * genus)


def build_relation(group: UnknownGroup, d: int, resolve: KeyResolver) -> RelationRow:
    """One relation of degree d, scaled by |Aut e| (labeled marked points).

    ``resolve`` must treat exactly ``group.unknowns`` as symbolic at the
    target dimension and already know every other key of the group.
    """
    genus, e = group.genus, group.e
    if d < minimal_degree(genus, e):
        raise DegreeWindowError(genus, tuple(e), d)
    chi = 2 - 2 * genus
    total = LinearExpr()
    for nu in enumerate_partitions(d):
        l = len(nu)
        # chi0 <= 2 l(nu) is equivalent to g_inf <= g
        for g_inf in range(genus + 1):
            chi_inf = 2 - 2 * g_inf
            chi0 = chi - chi_inf + 2 * l
            weight = hurwitz_weight(d, nu, g_inf)
            if not weight:
                continue
            r = -chi_inf + 1 + l
            total += (-1) ** r * z_factor(nu) * weight * d_bullet(nu, e, chi0, resolve)
    total = total * aut_order(e)
    stray = set(total.terms) - set(group.unknowns)
    if stray:
        raise RuntimeError(f"relation contains keys outside the group: {sorted(map(str, stray))}")
    return RelationRow(
        d=d,
        unknowns=group.unknowns,
        coefficients=tuple(total.terms.get(k, Fraction(0)) for k in group.unknowns),
        constant=total.constant,
    )
