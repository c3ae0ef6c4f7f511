import json
from itertools import combinations
from math import gcd

import pytest

from sigmatame.config import ContractError
from sigmatame.intmat import det, matvec
from sigmatame.lattice import (
    GroupTooLarge,
    LatticeAction,
    check_decomposition,
    cycle_shift,
    fixed_sublattice,
    is_pure,
    norm_matrix,
    orbit_characters,
    perm_matrix,
    permutation_orbits,
    trace_complement,
)

SWAP = LatticeAction(2, (perm_matrix([2, 1]),))
TRIVIAL2 = LatticeAction(2, ())


def rays(s):
    return sorted(r.coords for r in s)


def test_fixed_sublattice_examples():
    assert fixed_sublattice(TRIVIAL2) == ((1, 0), (0, 1))
    assert fixed_sublattice(SWAP) == ((1, 1),)
    h0 = LatticeAction(4, (cycle_shift(4, 2),))
    assert fixed_sublattice(h0) == ((1, 0, 1, 0), (0, 1, 0, 1))


def test_trace_complement_examples():
    dec = trace_complement(SWAP)
    assert norm_matrix(SWAP) == [[1, 1], [1, 1]]
    assert dec.q1 == ((1, -1),) and dec.index == 2
    dec = trace_complement(TRIVIAL2)
    assert dec.q1 == () and dec.index == 1
    dec = trace_complement(LatticeAction(4, (cycle_shift(4, 2),)))
    assert dec.q1 == ((1, 0, -1, 0), (0, 1, 0, -1)) and dec.index == 4


def test_orbit_characters_examples():
    assert rays(orbit_characters(SWAP, (1, 0))) == [(0, 1), (1, 0)]
    assert rays(orbit_characters(SWAP, (1, 1))) == [(1, 1)]
    shift = LatticeAction(4, (cycle_shift(4),))
    assert rays(orbit_characters(shift, (1, 0, 0, 0))) == sorted(
        tuple(int(i == j) for i in range(4)) for j in range(4)
    )


def test_orbit_characters_commute_with_canonicalization():
    shift = LatticeAction(3, (cycle_shift(3),))
    assert orbit_characters(shift, (2, 0, 4)) == orbit_characters(shift, (1, 0, 2))


def _subgroups_of_cycle(n):
    # subgroups of Z/n are <shift^k> for k | n
    return [k for k in range(1, n + 1) if n % k == 0]


@pytest.mark.parametrize("n", range(2, 9))
def test_single_cycle_actions_all_subgroups(n):
    for k in _subgroups_of_cycle(n):
        gens = (cycle_shift(n, k),) if k < n else ()
        action = LatticeAction(n, gens)
        assert action.order == n // k
        dec = trace_complement(action)
        assert check_decomposition(action, dec)
        orbits = permutation_orbits(action)
        assert len(dec.q0) == len(orbits) == k
        # every element fixes Q0, the norm kills Q1
        for g in action.elements:
            for v in dec.q0:
                assert tuple(matvec(g, v)) == v
        N = norm_matrix(action)
        for v in dec.q1:
            assert all(x == 0 for x in matvec(N, v))
        d = abs(det([list(v) for v in dec.q0 + dec.q1]))
        assert d == dec.index and d > 0
        assert is_pure(dec.q0)


@pytest.mark.parametrize("n", range(2, 6))
def test_permutation_actions_orbit_count(n):
    # every pair of transpositions / cycles on rank <= 5
    from itertools import permutations

    perms = list(permutations(range(1, n + 1)))
    for a, b in combinations(perms[:12], 2):
        action = LatticeAction(n, (perm_matrix(list(a)), perm_matrix(list(b))))
        dec = trace_complement(action)
        assert len(dec.q0) == len(permutation_orbits(action))
        assert check_decomposition(action, dec)


def test_q0_is_pure():
    dec = trace_complement(LatticeAction(6, (cycle_shift(6, 3),)))
    k = len(dec.q0)
    g = 0
    for cols in combinations(range(6), k):
        g = gcd(g, det([[v[c] for c in cols] for v in dec.q0]))
    assert g == 1


def test_non_permutation_action():
    # rotation by 90 degrees: no fixed vectors, Q1 is everything
    rot = LatticeAction(2, (((0, -1), (1, 0)),))
    assert rot.order == 4
    dec = trace_complement(rot)
    assert dec.q0 == () and len(dec.q1) == 2 and dec.index == 1


def test_group_cap():
    with pytest.raises(GroupTooLarge):
        LatticeAction(8, (cycle_shift(8), perm_matrix([2, 1, 3, 4, 5, 6, 7, 8])), cap=100)
    assert issubclass(GroupTooLarge, ContractError)


def test_rejects_non_invertible_generator():
    with pytest.raises(ValueError):
        LatticeAction(2, (((2, 0), (0, 1)),))


def test_action_json(tmp_path):
    p = tmp_path / "a.json"
    p.write_text(json.dumps({"rank": 3, "perm_generators": [[2, 3, 1]]}))
    a = LatticeAction.load(p)
    assert a.order == 3
    b = LatticeAction.from_json(a.to_json())
    assert b.elements == a.elements
    with pytest.raises(ValueError):
        LatticeAction.from_json({"rank": 2, "perm_generators": [[1, 1]]})
    with pytest.raises(ValueError):
        LatticeAction.from_json({"generators": []})
