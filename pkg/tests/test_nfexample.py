import pytest

from sigmatame.charsphere import SigmaSet, check_certificate, tame_degree
from sigmatame.config import CapExceeded, ContractError
from sigmatame.funcfield import build_prime_char, sigma_complement_funcfield
from sigmatame.numfield import NfIdeal, factor_rational_prime, nf_make
from sigmatame.nfexample import (
    CITATION,
    build_default,
    build_instance,
    centralizer_report_numfield,
    default_p,
    parse_subgroup,
    select_prime,
    sigma_complement_numfield,
    subgroup_closure,
)

GAUSS = nf_make((1, 0, 1))
SQRT2 = nf_make((-2, 0, 1))
SQRTM5 = nf_make((5, 0, 1))
TRIANGLE = SigmaSet.from_vectors(2, [(1, 0), (0, 1), (-1, -1)])


def test_select_prime_examples():
    assert select_prime(GAUSS) == (5, 2)
    assert select_prime(SQRT2) == (7, 3)
    assert select_prime(SQRTM5) == (3, 1)
    assert select_prime(GAUSS, start=6) == (13, 5)
    with pytest.raises(CapExceeded):
        select_prime(GAUSS, start=6, cap=12)


def test_default_p():
    assert default_p(GAUSS, 5) == 3
    assert default_p(SQRT2, 7) == 3
    assert default_p(SQRTM5, 3) == 7


def test_gauss_instance():
    inst = build_instance(GAUSS, 5, 2, 3)
    i = GAUSS.zeta
    assert inst.r == 1 and inst.rank == 2
    assert NfIdeal.generated_by(GAUSS, [inst.alpha]) == inst.I.ideal
    assert inst.I.ideal.contains(i - 2)
    # (5, i - 2) = (2 - i) up to a unit: the conjugate of the (2 + i) example
    assert inst.I.ideal == NfIdeal.generated_by(GAUSS, [2 - i])
    assert inst.alpha.norm() == 5


def test_sqrt2_instance():
    inst = build_instance(SQRT2, 7, 3, 5)
    assert inst.r == 1 and abs(inst.alpha.norm()) == 7
    assert {inst.I.ideal, inst.conjugates[1]} == {
        NfIdeal.generated_by(SQRT2, [3 + SQRT2.zeta]),
        NfIdeal.generated_by(SQRT2, [3 - SQRT2.zeta]),
    }


def test_sqrtm5_instance():
    inst = build_instance(SQRTM5, 3, 1, 7)
    z = SQRTM5.zeta
    assert inst.r == 2 and inst.alpha.norm() == 9
    assert inst.I.ideal == NfIdeal.generated_by(SQRTM5, [3, z - 1])
    assert NfIdeal.generated_by(SQRTM5, [inst.alpha]) == inst.I.ideal ** 2
    assert inst.I.ideal ** 2 == NfIdeal.generated_by(SQRTM5, [2 + z]) or inst.I.ideal ** 2 == NfIdeal.generated_by(
        SQRTM5, [2 - z]
    )


@pytest.mark.parametrize("K,q,k,p", [(GAUSS, 5, 2, 3), (SQRT2, 7, 3, 5), (SQRTM5, 3, 1, 7)])
def test_valuation_identities(K, q, k, p):
    inst = build_instance(K, q, k, p)
    res = sigma_complement_numfield(inst)
    n = inst.rank
    for h, ch in enumerate(res.characters[:n]):
        assert ch.raw == tuple(inst.r * int(x == h) for x in range(n))
    for J, ch, s0 in zip(inst.p_primes, res.characters[n:], res.s0):
        assert ch.raw == (-s0,) * n and s0 == J.e
    assert res.sigma == TRIANGLE
    assert res.verdict.degree == 2 and res.verdict.witness.size == 3
    assert check_certificate(res.sigma, res.certificate)


def test_sqrtm5_raw_characters():
    res = sigma_complement_numfield(build_instance(SQRTM5, 3, 1, 7))
    raws = [c.raw for c in res.characters]
    assert raws[:2] == [(2, 0), (0, 2)]
    assert raws[2:] == [(-1, -1), (-1, -1)]


def test_ramified_p_changes_only_s0():
    res = sigma_complement_numfield(build_instance(GAUSS, 5, 2, 2))
    assert res.s0 == (2,) and res.sigma == TRIANGLE


def test_build_instance_contracts():
    with pytest.raises(ContractError):
        build_instance(GAUSS, 5, 1, 3)  # 1 is not a root
    with pytest.raises(ContractError):
        build_instance(GAUSS, 2, 1, 3)  # ramified q
    with pytest.raises(ContractError):
        build_instance(GAUSS, 5, 2, 5)  # p == q
    with pytest.raises(ContractError):
        build_default(GAUSS, q=7)  # 7 inert in Q(i)


def test_every_instance_splits_completely():
    for K in (GAUSS, SQRT2, SQRTM5, nf_make((1, 1, 1, 1, 1))):
        q, k = select_prime(K)
        primes = factor_rational_prime(K, q)
        assert len(primes) == K.degree and all(P.e == P.f == 1 for P in primes)


def test_centralizer_examples():
    inst = build_instance(GAUSS, 5, 2, 3)
    rep = centralizer_report_numfield(inst, parse_subgroup(GAUSS, "all"))
    assert rep.d == 1 and rep.q0 == ((1, 1),)
    assert sorted(r.coords for r in rep.restricted.rays) == [(-1,), (1,)]
    assert rep.upper_witness.size == 2
    rep = centralizer_report_numfield(inst, parse_subgroup(GAUSS, "id"))
    assert rep.d == 2 and rep.restricted == TRIANGLE and rep.upper_witness.size == 3
    assert all(CITATION in v for v in rep.verdicts())


@pytest.mark.parametrize("poly", [(1, 0, 0, 0, 1), (1, 0, -10, 0, 1), (1, 1, 1, 1, 1)])
def test_quartic_index_two_subgroups(poly):
    K = nf_make(poly)
    inst = build_default(K)
    res = sigma_complement_numfield(inst)
    assert len(res.sigma) == 5 and res.verdict.degree == 4
    for g in range(1, 4):
        sub = subgroup_closure(K, [g])
        if len(sub) != 2:
            continue
        rep = centralizer_report_numfield(inst, sub, res)
        assert rep.d == 2 and rep.restricted == TRIANGLE
        assert rep.restricted_verdict.degree == 2 and rep.upper_witness.size == 3


def test_cross_family_consistency():
    for n, (p, m) in [(2, (2, 1)), (4, (2, 2))]:
        ff = sigma_complement_funcfield(build_prime_char(p, m))
        K = GAUSS if n == 2 else nf_make((1, 0, 0, 0, 1))
        nf = sigma_complement_numfield(build_default(K)).sigma
        assert ff == nf
        assert tame_degree(ff).degree == tame_degree(nf).degree == n


def test_parse_subgroup():
    K = nf_make((1, 0, 0, 0, 1))
    assert parse_subgroup(K, None) == [0] and parse_subgroup(K, "") == [0] and parse_subgroup(K, "id") == [0]
    assert parse_subgroup(K, "all") == [0, 1, 2, 3]
    assert parse_subgroup(K, "1,2") == [0, 1, 2, 3]
    assert len(parse_subgroup(K, "1")) == 2
    with pytest.raises(ContractError):
        parse_subgroup(K, "x")
    with pytest.raises(ContractError):
        parse_subgroup(K, "9")
    inst = build_default(K)
    with pytest.raises(ContractError):
        centralizer_report_numfield(inst, [0, 1, 2])


def test_instance_json_is_plain():
    import json

    d = build_instance(SQRTM5, 3, 1, 7).to_json()
    assert json.loads(json.dumps(d)) == d
    assert d["class_number"] == 2 and d["alpha_norm"] == "9"
