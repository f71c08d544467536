"""Exact Gaussian elimination over the rationals, one row at a time."""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence

__all__ = [
    "AddResult",
    "LinearSystem",
    "InconsistentSystemError",
    "RankDeficientError",
]


class AddResult(enum.Enum):
    RANK_INCREASED = "rank_increased"
    REDUNDANT = "redundant"


class InconsistentSystemError(ArithmeticError):
    def __init__(self, tag, constant: Fraction):
        self.tag = tag
        super().__init__(f"relation {tag!r} reduces to 0 = {-constant}; the system is inconsistent")


class RankDeficientError(ArithmeticError):
    pass


class LinearSystem:
    """Equations sum_j a_j x_j + c = 0 kept in reduced row echelon form.

    Pivots are the first nonzero entry of each reduced row; with exact
    arithmetic no pivoting strategy is needed.
    """

    def __init__(self, unknown_count: int):
        if unknown_count <= 0:
            raise ValueError("a system needs at least one unknown")
        self.unknown_count = unknown_count
        self.rows: list[tuple[tuple[Fraction, ...], Fraction]] = []  # as submitted
        self._pivots: dict[int, list[Fraction]] = {}  # column -> [a_0..a_{n-1}, c], a_col == 1

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def full_rank(self) -> bool:
        return self.rank == self.unknown_count

    def add_row(self, coefficients: Sequence[Fraction], constant: Fraction, tag=None) -> AddResult:
        if len(coefficients) != self.unknown_count:
            raise ValueError(f"expected {self.unknown_count} coefficients, got {len(coefficients)}")
        row = [Fraction(a) for a in coefficients] + [Fraction(constant)]
        self.rows.append((tuple(row[:-1]), row[-1]))
        for col, prow in self._pivots.items():
            factor = row[col]
            if factor:
                row = [a - factor * b for a, b in zip(row, prow)]
        pivot = next((j for j in range(self.unknown_count) if row[j]), None)
        if pivot is None:
            if row[-1]:
                raise InconsistentSystemError(tag, row[-1])
            return AddResult.REDUNDANT
        inv = 1 / row[pivot]
        row = [a * inv for a in row]
        for prow_col, prow in list(self._pivots.items()):
            factor = prow[pivot]
            if factor:
                self._pivots[prow_col] = [a - factor * b for a, b in zip(prow, row)]
        self._pivots[pivot] = row
        return AddResult.RANK_INCREASED

    def solve(self) -> list[Fraction]:
        if not self.full_rank:
            raise RankDeficientError(
                f"need more relations: rank {self.rank} < {self.unknown_count} unknowns"
            )
        # reduced form: x_j + c_j = 0
        return [-self._pivots[j][-1] for j in range(self.unknown_count)]

    def residuals(self, solution: Sequence[Fraction]) -> list[Fraction]:
        return [sum((a * x for a, x in zip(coeffs, solution)), c) for coeffs, c in self.rows]
