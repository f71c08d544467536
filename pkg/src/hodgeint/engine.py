"""Top-level driver: solves groups of unknowns by escalating the degree d.

Values are memoized in a :class:`HodgeTable` and, when a cache path is
given, appended to the cache file as each group is solved.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable

from .exact import bernoulli
from .characters import burnside_double_hurwitz
from .hodge import (
    Degenerate,
    HodgeKey,
    HodgeTable,
    KeyResolver,
    canonical_key,
    keys_of_dimension,
)
from .hurwitz import hurwitz_weight, transposition_count
from .partitions import enumerate_partitions
from .recursion import (
    RelationRow,
    build_group,
    build_relation,
    group_of,
    minimal_degree,
)
from .reference import WORKED_VALUES
from .solver import LinearSystem

__all__ = [
    "CACHE_ENV",
    "Engine",
    "EscalationError",
    "UnstableIntegralError",
    "Check",
    "VerifyReport",
    "oracle_lambda_g",
    "oracle_genus0",
    "oracle_lambda_gm1_onepoint",
]

CACHE_ENV = "HODGEINT_CACHE"

log = logging.getLogger(__name__)


class EscalationError(RuntimeError):
    """No degree up to the ceiling produced a full-rank system."""

    def __init__(self, genus: int, e: tuple[int, ...], ceiling: int, rank: int, needed: int):
        self.genus, self.e, self.ceiling = genus, e, ceiling
        super().__init__(
            f"g={genus}, e={list(e)}: rank {rank} of {needed} after trying every d up to {ceiling}"
        )


class UnstableIntegralError(ValueError):
    pass


def multinomial(total: int, parts: Iterable[int]) -> int:
    parts = list(parts)
    if sum(parts) != total:
        return 0
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def oracle_genus0(exponents: Iterable[int]) -> Fraction:
    """<tau_k1 ... tau_kn>_0 = (n-3)! / prod k_i!."""
    exps = list(exponents)
    return Fraction(multinomial(len(exps) - 3, exps))


def oracle_lambda_g(genus: int, exponents: Iterable[int]) -> Fraction:
    """Integrals of lambda_g against psi classes, g >= 1."""
    exps = list(exponents)
    if genus < 1:
        raise ValueError("the lambda_g formula needs g >= 1")
    return multinomial(2 * genus - 3 + len(exps), exps) * _b(genus)


def _b(genus: int) -> Fraction:
    """Integral of psi^{2g-2} lambda_g over M_{g,1}."""
    return Fraction(2 ** (2 * genus - 1) - 1, 2 ** (2 * genus - 1)) * abs(bernoulli(2 * genus)) / factorial(2 * genus)


def oracle_lambda_gm1_onepoint(genus: int) -> Fraction:
    """Integral of psi^{2g-1} lambda_{g-1} over M_{g,1}, g >= 1."""
    if genus < 1:
        raise ValueError("the one-point lambda_{g-1} formula needs g >= 1")
    harmonic = sum(Fraction(1, i) for i in range(1, 2 * genus))
    total = _b(genus) * harmonic
    cross = Fraction(0)
    for g1 in range(1, genus):
        g2 = genus - g1
        cross += Fraction(factorial(2 * g1 - 1) * factorial(2 * g2 - 1), factorial(2 * genus - 1)) * _b(g1) * _b(g2)
    return total - cross / 2


@dataclass(frozen=True)
class Check:
    label: str
    expected: Fraction
    actual: Fraction

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


class Engine:
    def __init__(self, cache_path: str | os.PathLike | None = None, ceiling_margin: int = 32):
        self.table = HodgeTable(cache_path)
        self.ceiling_margin = ceiling_margin
        # (genus, e) -> degrees used, for diagnostics
        self.solve_log: dict[tuple[int, tuple[int, ...]], list[int]] = {}

    @classmethod
    def from_environment(cls, cache_path: str | os.PathLike | None = None) -> "Engine":
        return cls(cache_path if cache_path is not None else os.environ.get(CACHE_ENV) or None)

    # -- public API

    def compute(self, genus: int, lambda_index: int, exponents: Iterable[int]) -> Fraction:
        key = canonical_key(genus, lambda_index, exponents)
        if key is Degenerate.ZERO:
            return Fraction(0)
        if key is Degenerate.UNSTABLE:
            raise UnstableIntegralError(
                f"M_{{{genus},{len(list(exponents))}}} is unstable; the integral is undefined"
            )
        return self.value(key)

    def value(self, key: HodgeKey) -> Fraction:
        got = self.table.get(key)
        if got is not None:
            return got
        genus, e = group_of(key)
        self._solve_group(genus, e)
        return self.table[key]

    def relation(self, genus: int, e: Iterable[int], d: int) -> RelationRow:
        group = build_group(genus, e)
        if d >= minimal_degree(genus, group.e):
            for dep in group.dependencies:
                self.value(dep)
        return build_relation(group, d, self._resolver(group))

    def all_keys(self, max_dim: int) -> list[HodgeKey]:
        return [k for dim in range(1, max_dim + 1) for k in keys_of_dimension(dim)]

    # -- solving

    def _resolver(self, group) -> KeyResolver:
        return KeyResolver(self.table, group.target_dim, group.unknowns, compute=self.value)

    def _solve_group(self, genus: int, e: tuple[int, ...]) -> None:
        group = build_group(genus, e)
        for dep in group.dependencies:
            self.value(dep)
        resolve = self._resolver(group)
        system = LinearSystem(len(group.unknowns))
        d_min = minimal_degree(genus, group.e)
        ceiling = d_min + len(group.unknowns) + self.ceiling_margin
        used = []
        for d in range(d_min, ceiling + 1):
            row = build_relation(group, d, resolve)
            system.add_row(row.coefficients, row.constant, tag=d)
            used.append(d)
            if system.full_rank:
                break
        else:
            raise EscalationError(genus, tuple(group.e), ceiling, system.rank, len(group.unknowns))
        solution = system.solve()
        bad = [r for r in system.residuals(solution) if r]
        if bad:
            raise ArithmeticError(f"g={genus}, e={list(group.e)}: nonzero residual {bad[0]}")
        for key, v in zip(group.unknowns, solution):
            self.table.store(key, v)
        self.table.append(group.unknowns)
        self.solve_log[(genus, tuple(group.e))] = used
        log.debug("solved g=%d e=%s with d=%s", genus, list(group.e), used)

    # -- verification

    def verify(
        self,
        dims: int | None = None,
        genus0_max_n: int | None = None,
        lambda_g_max_dim: int | None = None,
        lambda_gm1_max_genus: int | None = None,
        hurwitz_max_d: int | None = None,
    ) -> VerifyReport:
        report = VerifyReport()
        add = report.checks.append
        if dims is not None:
            for key in self.all_keys(dims):
                expected = WORKED_VALUES.get(key)
                if expected is None:
                    expected = self._oracle(key)
                if expected is not None:
                    add(Check(f"dims {key}", expected, self.value(key)))
        if genus0_max_n is not None:
            for n in range(3, genus0_max_n + 1):
                for key in keys_of_dimension(n - 3):
                    if key.genus == 0:
                        add(Check(f"genus0 {key}", oracle_genus0(key.psi), self.value(key)))
        if lambda_g_max_dim is not None:
            for key in self.all_keys(lambda_g_max_dim):
                if key.genus >= 1 and key.lambda_index == key.genus:
                    add(Check(f"lambda_g {key}", oracle_lambda_g(key.genus, key.psi), self.value(key)))
        if lambda_gm1_max_genus is not None:
            for g in range(1, lambda_gm1_max_genus + 1):
                add(Check(
                    f"lambda_gm1 g={g}",
                    oracle_lambda_gm1_onepoint(g),
                    self.compute(g, g - 1, [2 * g - 1]),
                ))
        if hurwitz_max_d is not None:
            for d in range(1, hurwitz_max_d + 1):
                for nu in enumerate_partitions(d):
                    for g_inf in range(3):
                        r = transposition_count(nu, g_inf)
                        if r < 0:
                            continue
                        add(Check(
                            f"hurwitz d={d} nu={nu} g={g_inf}",
                            burnside_double_hurwitz((d,), nu, r) / factorial(r),
                            hurwitz_weight(d, nu, g_inf),
                        ))
        return report

    @staticmethod
    def _oracle(key: HodgeKey) -> Fraction | None:
        if key.genus == 0:
            return oracle_genus0(key.psi)
        if key.lambda_index == key.genus:
            return oracle_lambda_g(key.genus, key.psi)
        if key.n_points == 1 and key.lambda_index == key.genus - 1:
            return oracle_lambda_gm1_onepoint(key.genus)
        return None
