import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigmatame.bounds import (
    CONJECTURAL,
    THEOREM,
    bounds_table,
    bredon_bound,
    centralizer_fp_bound,
    conjecture_bound,
    conv_inclusion_certificate,
)
from sigmatame.charsphere import INFINITE, Ray, SigmaSet, sigma_restrict, tame_degree

# (n, s, c, floor(n/s), floor(n/(s c))), computed by hand
TABLE = [
    (4, 2, 1, 2, 2),
    (5, 2, 1, 2, 2),
    (2, 4, 1, 0, 0),
    (6, 2, 3, 3, 1),
    (6, 2, 2, 3, 1),
    (1, 1, 1, 1, 1),
    (7, 3, 2, 2, 1),
    (12, 5, 2, 2, 1),
    (30, 7, 3, 4, 1),
    (100, 9, 4, 11, 2),
    (9, 9, 1, 1, 1),
    (8, 3, 3, 2, 0),
    # (n, s) = (pm, pm/d) from the prime-characteristic family: the bound is d
    (2, 2, 1, 1, 1),
    (4, 4, 1, 1, 1),
    (4, 2, 2, 2, 1),
    (6, 6, 1, 1, 1),
    (6, 3, 1, 2, 2),
    (6, 2, 1, 3, 3),
    (9, 3, 1, 3, 3),
    (8, 2, 1, 4, 4),
]


def test_table_has_twenty_rows():
    assert len(TABLE) == 20


@pytest.mark.parametrize("n,s,c,d,m", TABLE)
def test_bound_table(n, s, c, d, m):
    assert centralizer_fp_bound(n, s) == d
    assert bredon_bound(n, s) == d
    assert conjecture_bound(n, s, c) == m
    rep = bounds_table(n, s, c)
    assert rep["bredon_fp"] == {"value": d, "formula": "floor(n/s)", "flag": THEOREM}
    assert rep["bredon_fp_conjectural"]["flag"] == CONJECTURAL
    assert rep["bredon_fp_conjectural"]["value"] == m


def test_examples():
    assert centralizer_fp_bound(4, 2) == 2
    assert centralizer_fp_bound(5, 2) == 2
    assert centralizer_fp_bound(2, 4) == 0
    assert bredon_bound(6, 2) == 3
    assert conjecture_bound(6, 2, 3) == 1
    assert conjecture_bound(6, 2, 2) == 1
    assert "bredon_fp_conjectural" not in bounds_table(6, 2)


@pytest.mark.parametrize("args", [(0, 1), (1, 0), (-3, 2), (True, 2)])
def test_rejects_non_positive(args):
    with pytest.raises(ValueError):
        centralizer_fp_bound(*args)


@given(st.integers(1, 500), st.integers(1, 50), st.integers(1, 10))
def test_floor_identities(n, s, c):
    assert centralizer_fp_bound(n, 1) == n
    d = bredon_bound(n, s)
    assert d <= n
    assert d * s <= n < (d + 1) * s
    assert conjecture_bound(n, s, c) <= d


E2 = SigmaSet.from_vectors(2, [(1, 0), (0, 1)])
UNIT4 = SigmaSet.from_vectors(4, [[int(i == j) for i in range(4)] for j in range(4)] + [[-1] * 4])


def test_conv_examples():
    cert = conv_inclusion_certificate(SigmaSet.from_vectors(2, [(1, 1)]), E2, 2)
    assert cert.ok and cert.witnesses[0][1].is_valid()
    cert = conv_inclusion_certificate(SigmaSet.from_vectors(2, [(-1, 0)]), E2, 2)
    assert not cert.ok and cert.counterexample == Ray((-1, 0))
    with pytest.raises(ValueError):
        conv_inclusion_certificate(SigmaSet.from_vectors(3, [(1, 0, 0)]), E2, 2)


def test_conv_restricted_family_set():
    # restriction of the rank-4 set to the orbit sums of <shift^2>, pulled back into rank 4
    sub = SigmaSet.from_vectors(4, [(1, 0, 1, 0), (0, 1, 0, 1), (-1, -1, -1, -1)])
    cert = conv_inclusion_certificate(sub, UNIT4, 2, n=4)
    assert cert.ok and len(cert.witnesses) == 3
    assert cert.premise_holds and cert.conclusion_holds
    assert sigma_restrict(UNIT4, [(1, 0, 1, 0), (0, 1, 0, 1)]) == SigmaSet.from_vectors(
        2, [(1, 0), (0, 1), (-1, -1)]
    )


def test_subset_always_included():
    rng = random.Random(3)
    for _ in range(100):
        vecs = [tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(5)]
        vecs = [v for v in vecs if any(v)]
        if not vecs:
            continue
        s = SigmaSet.from_vectors(3, vecs)
        sub = SigmaSet(3, frozenset(rng.sample(sorted(s.rays), rng.randint(1, len(s)))))
        for t in (1, 2, 3):
            assert conv_inclusion_certificate(sub, s, t).ok


def test_derived_bound_consistency_randomized():
    rng = random.Random(11)
    checked = 0
    while checked < 150:
        rank = rng.randint(2, 3)
        vecs = [tuple(rng.randint(-2, 2) for _ in range(rank)) for _ in range(rng.randint(2, 5))]
        vecs = [v for v in vecs if any(v)]
        if not vecs:
            continue
        s = SigmaSet.from_vectors(rank, vecs)
        # candidate rays: sums of at most c rays of s
        c = rng.randint(1, 3)
        rays = sorted(s.rays)
        cand = []
        for _ in range(rng.randint(1, 4)):
            pick = [rng.choice(rays) for _ in range(rng.randint(1, c))]
            v = [sum(r.coords[i] * rng.randint(1, 3) for r in pick) for i in range(rank)]
            if any(v):
                cand.append(v)
        if not cand:
            continue
        sub = SigmaSet.from_vectors(rank, cand)
        cert = conv_inclusion_certificate(sub, s, c)
        if not cert.ok:
            continue
        d = tame_degree(s).degree
        dsub = tame_degree(sub).degree
        if d is INFINITE:
            assert dsub is INFINITE
        else:
            assert dsub is INFINITE or dsub >= d // c
        checked += 1
