"""Exact Hodge integrals with at most one lambda class, via localization relations."""
from __future__ import annotations

from .engine import CACHE_ENV, Engine, EscalationError, UnstableIntegralError
from .exact import Rational, format_rational, parse_rational
from .hodge import HodgeKey, HodgeTable, canonical_key
from .recursion import RelationRow, build_group, build_relation, minimal_degree

__all__ = [
    "CACHE_ENV",
    "Engine",
    "EscalationError",
    "UnstableIntegralError",
    "Rational",
    "format_rational",
    "parse_rational",
    "HodgeKey",
    "HodgeTable",
    "canonical_key",
    "RelationRow",
    "build_group",
    "build_relation",
    "minimal_degree",
]

__version__ = "0.1.0"
