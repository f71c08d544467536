"""Known values of every one-lambda Hodge integral of dimension 1 to 4."""
from __future__ import annotations

from fractions import Fraction as F

from .hodge import HodgeKey

__all__ = ["WORKED_VALUES"]


def _k(g: int, lam: int, *psi: int) -> HodgeKey:
    return HodgeKey(g, lam, tuple(sorted(psi, reverse=True)))


WORKED_VALUES: dict[HodgeKey, F] = {
    # dimension 1
    _k(0, 0, 1, 0, 0, 0): F(1),
    _k(1, 1, 0): F(1, 24),
    _k(1, 0, 1): F(1, 24),
    # dimension 2
    _k(0, 0, 2, 0, 0, 0, 0): F(1),
    _k(0, 0, 1, 1, 0, 0, 0): F(2),
    _k(1, 1, 1, 0): F(1, 24),
    _k(1, 0, 2, 0): F(1, 24),
    _k(1, 0, 1, 1): F(1, 24),
    # dimension 3
    _k(0, 0, 3, 0, 0, 0, 0, 0): F(1),
    _k(0, 0, 2, 1, 0, 0, 0, 0): F(3),
    _k(0, 0, 1, 1, 1, 0, 0, 0): F(6),
    _k(1, 1, 2, 0, 0): F(1, 24),
    _k(1, 0, 3, 0, 0): F(1, 24),
    _k(1, 1, 1, 1, 0): F(1, 12),
    _k(1, 0, 2, 1, 0): F(1, 12),
    _k(1, 0, 1, 1, 1): F(1, 12),
    # dimension 4
    _k(0, 0, 4, 0, 0, 0, 0, 0, 0): F(1),
    _k(0, 0, 3, 1, 0, 0, 0, 0, 0): F(4),
    _k(0, 0, 2, 2, 0, 0, 0, 0, 0): F(6),
    _k(0, 0, 2, 1, 1, 0, 0, 0, 0): F(12),
    _k(0, 0, 1, 1, 1, 1, 0, 0, 0): F(24),
    _k(1, 1, 3, 0, 0, 0): F(1, 24),
    _k(1, 0, 4, 0, 0, 0): F(1, 24),
    _k(1, 1, 2, 1, 0, 0): F(1, 8),
    _k(1, 0, 3, 1, 0, 0): F(1, 8),
    _k(1, 1, 1, 1, 1, 0): F(1, 4),
    _k(1, 0, 2, 1, 1, 0): F(1, 4),
    _k(1, 0, 2, 2, 0, 0): F(1, 6),
    _k(1, 0, 1, 1, 1, 1): F(1, 4),
    _k(2, 2, 2): F(7, 5760),
    _k(2, 1, 3): F(1, 480),
    _k(2, 0, 4): F(1, 1152),
}
