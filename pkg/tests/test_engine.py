from __future__ import annotations

from fractions import Fraction as F
from functools import lru_cache
from itertools import combinations

import pytest

from hodgeint.engine import (
    Engine,
    EscalationError,
    UnstableIntegralError,
    oracle_genus0,
    oracle_lambda_g,
    oracle_lambda_gm1_onepoint,
)
from hodgeint.hodge import HodgeKey, keys_of_dimension


@pytest.fixture(scope="module")
def engine():
    return Engine()


def _dfact(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@lru_cache(maxsize=None)
def dvv(genus: int, psi: tuple[int, ...]) -> F:
    """Pure psi intersection numbers from the DVV form of the Virasoro constraints."""
    n = len(psi)
    if genus < 0 or 2 * genus - 2 + n <= 0 or sum(psi) != 3 * genus - 3 + n or min(psi) < 0:
        return F(0)
    if (genus, psi) == (0, (0, 0, 0)):
        return F(1)
    if (genus, psi) == (1, (1,)):
        return F(1, 24)
    k, rest = psi[0], psi[1:]
    total = F(0)
    for j, kj in enumerate(rest):
        others = rest[:j] + rest[j + 1:]
        total += F(_dfact(2 * k + 2 * kj - 1), _dfact(2 * kj - 1)) * dvv(genus, _sorted((k + kj - 1,) + others))
    for r in range(k - 1):
        s = k - 2 - r
        c = F(_dfact(2 * r + 1) * _dfact(2 * s + 1), 2)
        total += c * dvv(genus - 1, _sorted((r, s) + rest))
        idx = range(len(rest))
        for size in range(len(rest) + 1):
            for chosen in combinations(idx, size):
                a = tuple(rest[i] for i in chosen)
                b = tuple(rest[i] for i in idx if i not in chosen)
                for g1 in range(genus + 1):
                    total += c * dvv(g1, _sorted((r,) + a)) * dvv(genus - g1, _sorted((s,) + b))
    return total / _dfact(2 * k + 1)


def _sorted(t):
    return tuple(sorted(t, reverse=True))


def test_dvv_sanity():
    assert dvv(2, (4,)) == F(1, 1152)
    assert dvv(0, (1, 1, 1, 0, 0, 0)) == 6


@pytest.mark.parametrize("dim", range(1, 7))
def test_pure_psi_matches_dvv(engine, dim):
    for key in keys_of_dimension(dim):
        if key.lambda_index == 0:
            assert engine.value(key) == dvv(key.genus, key.psi), key


@pytest.mark.parametrize("dim", range(1, 7))
def test_string_and_dilaton(engine, dim):
    for key in keys_of_dimension(dim):
        g, k, psi = key
        if psi[-1] == 0 and 2 * g - 2 + len(psi) - 1 > 0:
            rest = psi[:-1]
            expected = sum(
                (engine.compute(g, k, rest[:i] + (rest[i] - 1,) + rest[i + 1:]) for i in range(len(rest)) if rest[i]),
                F(0),
            )
            assert engine.value(key) == expected, key
        if 1 in psi and 2 * g - 2 + len(psi) - 1 > 0:
            i = psi.index(1)
            rest = psi[:i] + psi[i + 1:]
            assert engine.value(key) == (2 * g - 2 + len(rest)) * engine.compute(g, k, rest), key


def test_oracles():
    assert oracle_lambda_g(2, [2]) == F(7, 5760)
    assert oracle_lambda_g(1, [0]) == F(1, 24)
    # lambda_1 psi_1 has degree 2 on a 1-dimensional space
    assert oracle_lambda_g(1, [1]) == 0
    assert oracle_lambda_g(1, [1, 0]) == F(1, 24)
    assert oracle_genus0([1, 0, 0, 0]) == 1
    assert oracle_genus0([1, 1, 1, 0, 0, 0]) == 6
    assert oracle_genus0([2, 1, 1, 0, 0, 0, 0]) == 12
    assert oracle_lambda_gm1_onepoint(1) == F(1, 24)
    assert oracle_lambda_gm1_onepoint(2) == F(1, 480)
    with pytest.raises(ValueError):
        oracle_lambda_g(0, [0, 0, 0])


@pytest.mark.parametrize("args, value", [
    ((1, 1, [0]), F(1, 24)),
    ((1, 0, [1, 1, 1, 1]), F(1, 4)),
    ((0, 0, [2, 1, 1, 0, 0, 0, 0]), F(12)),
    ((0, 0, [0, 0, 1, 0]), F(1)),
])
def test_compute(engine, args, value):
    assert engine.compute(*args) == value


@pytest.mark.parametrize("args", [(0, 0, [3, 0, 0]), (1, 2, [0]), (2, 0, [1]), (1, 1, [1])])
def test_dimension_violation_is_zero(engine, args):
    assert engine.compute(*args) == 0


def test_unstable(engine):
    with pytest.raises(UnstableIntegralError):
        engine.compute(0, 0, [0, 0])
    with pytest.raises(UnstableIntegralError):
        engine.compute(1, 0, [])


def test_lambda_gm1_genus_three(engine):
    assert engine.compute(3, 2, [5]) == oracle_lambda_gm1_onepoint(3) == F(41, 580608)


def test_escalation_ceiling():
    with pytest.raises(EscalationError):
        Engine(ceiling_margin=-2).compute(1, 1, [0])


def test_cache_written_and_reused(tmp_path):
    path = tmp_path / "c.txt"
    first = Engine(path)
    assert first.compute(2, 2, [2]) == F(7, 5760)
    lines = path.read_text().splitlines()
    assert "2 2 [2] = 7/5760" in lines
    assert len(lines) == len(first.table)
    second = Engine(path)
    assert HodgeKey(2, 2, (2,)) in second.table
    assert second.compute(2, 2, [2]) == F(7, 5760)
    assert not second.solve_log


def test_table_output_deterministic(tmp_path):
    outs = []
    for name in ("a", "b"):
        e = Engine()
        keys = e.all_keys(5)
        for key in reversed(keys):
            e.value(key)
        e.table.write(tmp_path / name, keys)
        outs.append((tmp_path / name).read_bytes())
    assert outs[0] == outs[1]


def test_verify_reports(engine):
    report = engine.verify(dims=4)
    assert len(report.checks) == 32 and report.ok
    assert engine.verify(genus0_max_n=7).ok
    assert engine.verify(lambda_g_max_dim=5).ok
    assert engine.verify(lambda_gm1_max_genus=3).ok
    assert engine.verify(hurwitz_max_d=5).ok
