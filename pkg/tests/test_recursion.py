from __future__ import annotations

from fractions import Fraction as F

import pytest

from hodgeint.engine import Engine
from hodgeint.hodge import HodgeKey, keys_of_dimension
from hodgeint.recursion import (
    DegreeWindowError,
    build_group,
    group_of,
    minimal_degree,
)


def K(g, k, *psi):
    return HodgeKey(g, k, tuple(sorted(psi, reverse=True)))


def test_groups():
    assert build_group(0, (0, 0, 0)).unknowns == (K(0, 0, 1, 0, 0, 0),)
    assert build_group(1, ()).unknowns == (K(1, 1, 0), K(1, 0, 1))
    assert build_group(2, ()).unknowns == (K(2, 2, 2), K(2, 1, 3), K(2, 0, 4))
    g = build_group(1, (1, 0))
    assert g.unknowns == (K(1, 1, 1, 1, 0), K(1, 0, 2, 1, 0))
    assert g.target_dim == 3
    # the remaining keys belong to groups with smaller |e|
    assert all(sum(group_of(k)[1]) < 1 for k in g.dependencies)
    with pytest.raises(ValueError):
        build_group(0, (0,))


def test_every_key_has_exactly_one_group():
    for dim in range(1, 7):
        for key in keys_of_dimension(dim):
            owners = set()
            # any group that could contain the key drops one exponent onto the free point
            for i in range(key.n_points):
                rest = key.psi[:i] + key.psi[i + 1:]
                if key in build_group(key.genus, rest).unknowns:
                    owners.add(rest)
            assert owners == {group_of(key)[1]}, key


def test_minimal_degree():
    assert minimal_degree(0, (0, 0, 0)) == 2
    assert minimal_degree(0, (1, 1, 1, 0, 0, 0)) == 5
    assert minimal_degree(1, ()) == 1
    assert minimal_degree(2, ()) == 1


def test_window_violation():
    with pytest.raises(DegreeWindowError) as info:
        Engine().relation(1, (1, 1), 1)
    assert info.value.minimal == 2


def test_rows_are_stable_under_table_growth():
    engine = Engine()
    before = engine.relation(1, (1, 0), 3)
    for key in engine.all_keys(5):
        engine.value(key)
    assert engine.relation(1, (1, 0), 3) == before


@pytest.mark.parametrize("genus, e", [(0, (1, 1, 0, 0, 0)), (1, (1, 0)), (1, (2, 0, 0)), (2, ()), (2, (1,)), (3, ())])
def test_extra_degrees_are_consistent(genus, e):
    # the system is overdetermined: rows beyond those used must vanish too
    engine = Engine()
    group = build_group(genus, e)
    values = [engine.value(k) for k in group.unknowns]
    d0 = minimal_degree(genus, e)
    for d in range(d0, d0 + len(group.unknowns) + 3):
        assert engine.relation(genus, e, d).evaluate(values) == 0, d
