"""Acceptance criteria, one test each, with exact checks and wall-clock limits.

Each test prints a single PASS/FAIL line (visible even under output capture).
"""

import random
import time
from contextlib import contextmanager

from oracles import oracle_min_vanishing, reduced_form_count
from sigmatame.bounds import bredon_bound, centralizer_fp_bound, conjecture_bound
from sigmatame.charsphere import SigmaSet, check_certificate, positive_combination_feasible, tame_certificate, tame_degree
from sigmatame.funcfield import build_prime_char, centralizer_report_funcfield, sigma_complement_funcfield
from sigmatame.intmat import det, matvec
from sigmatame.lattice import LatticeAction, cycle_shift, norm_matrix, permutation_orbits, trace_complement
from sigmatame.nfexample import build_instance, sigma_complement_numfield
from sigmatame.numfield import NfIdeal, class_number, factor_rational_prime, nf_make, principal_generator

PAIRS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)]


@contextmanager
def criterion(capsys, name: str, limit_ms: int | None):
    start = time.perf_counter_ns()
    ok = False
    detail = ""
    try:
        yield
        elapsed = (time.perf_counter_ns() - start) // 1_000_000
        detail = f"{elapsed} ms" + ("" if limit_ms is None else f" (limit {limit_ms} ms)")
        ok = limit_ms is None or elapsed < limit_ms
        if not ok:
            raise AssertionError(f"{name}: {elapsed} ms exceeds {limit_ms} ms")
    except AssertionError as exc:
        detail = detail or str(exc)
        raise
    finally:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


def test_sequence_lemma(capsys):
    with criterion(capsys, "sequence a_1..a_pm distinct, a_m = 1, a_pm = 0", 1000):
        for p, m in PAIRS:
            inst = build_prime_char(p, m)
            seq = inst.sequence
            assert len(seq) == p * m and len(set(seq)) == p * m
            assert seq[m - 1] == inst.field.one()
            assert seq[p * m - 1].is_zero()


def test_prime_char_tame_degree(capsys):
    with criterion(capsys, "prime-char sigma set has pm+1 rays, tame degree pm", 5000):
        for p, m in PAIRS:
            s = sigma_complement_funcfield(build_prime_char(p, m))
            assert len(s) == p * m + 1
            v = tame_degree(s)
            assert v.degree == p * m
            assert v.witness.size == p * m + 1 and v.witness.is_valid()
            cert = tame_certificate(s, p * m)
            assert cert is not None and check_certificate(s, cert)


def test_prime_char_centralizer(capsys):
    with criterion(capsys, "centralizer (p, m) = (2, 2), d in {1, 2}", 1000):
        inst = build_prime_char(2, 2)
        for d in (1, 2):
            rep = centralizer_report_funcfield(inst, d)
            assert len(rep.restricted) == d + 1
            assert rep.restricted_verdict.degree == d
            assert rep.upper_witness.size == d + 1 and rep.upper_witness.is_valid()


def test_number_field_family(capsys):
    with criterion(capsys, "number-field valuation identities and tame degree 2", 10000):
        for poly, q, p in [((1, 0, 1), 5, 3), ((-2, 0, 1), 7, 5), ((5, 0, 1), 3, 7)]:
            K = nf_make(poly)
            k = next(k for k in range(q) if sum(c * k**i for i, c in enumerate(poly)) % q == 0)
            inst = build_instance(K, q, k, p)
            res = sigma_complement_numfield(inst)
            n = inst.rank
            for h, ch in enumerate(res.characters[:n]):
                assert ch.raw == tuple(inst.r * int(x == h) for x in range(n))
            for ch, s0 in zip(res.characters[n:], res.s0):
                assert ch.raw == (-s0,) * n
            assert len(res.sigma) == 3 and res.verdict.degree == 2


def test_class_number_sqrt_minus_5(capsys):
    with criterion(capsys, "Q(sqrt -5) class number 2 and I^2 = alpha O_K", None):
        K = nf_make((5, 0, 1))
        h = class_number(K)
        assert h == 2 == reduced_form_count(-20)
        I = next(P for P in factor_rational_prime(K, 3) if P.ideal.contains(K.zeta - 1)).ideal
        assert principal_generator(I) is None
        alpha = principal_generator(I**2)
        assert alpha is not None and NfIdeal.generated_by(K, [alpha]) == I**2


def test_tameness_oracle_equivalence(capsys):
    with criterion(capsys, "500 random sets agree with the Fourier-Motzkin oracle", 30000):
        rng = random.Random(20261018)
        for _ in range(500):
            rank = rng.randint(1, 4)
            size = rng.randint(1, 6)
            vecs = []
            while len(vecs) < size:
                v = tuple(rng.randint(-2, 2) for _ in range(rank))
                if any(v):
                    vecs.append(v)
            s = SigmaSet.from_vectors(rank, vecs)
            smallest = oracle_min_vanishing([r.coords for r in s.rays])
            for m in range(1, len(s) + 1):
                w = positive_combination_feasible(s.rays, m)
                assert (w is not None) == (smallest is not None and smallest <= m), (s, m)
                if w is not None:
                    assert w.is_valid()


def test_lattice_decomposition(capsys):
    with criterion(capsys, "single-cycle actions on ranks 2-8, every subgroup", 5000):
        for n in range(2, 9):
            for k in range(1, n + 1):
                if n % k:
                    continue
                action = LatticeAction(n, (cycle_shift(n, k),) if k < n else ())
                dec = trace_complement(action)
                assert len(dec.q0) == len(permutation_orbits(action))
                N = norm_matrix(action)
                assert all(not any(matvec(N, v)) for v in dec.q1)
                d = abs(det([list(v) for v in dec.q0 + dec.q1]))
                assert d == dec.index and d > 0


BOUND_TABLE = [
    (4, 2, 1, 2, 2), (5, 2, 1, 2, 2), (2, 4, 1, 0, 0), (6, 2, 3, 3, 1), (6, 2, 2, 3, 1),
    (1, 1, 1, 1, 1), (7, 3, 2, 2, 1), (12, 5, 2, 2, 1), (30, 7, 3, 4, 1), (100, 9, 4, 11, 2),
    (9, 9, 1, 1, 1), (8, 3, 3, 2, 0), (2, 2, 1, 1, 1), (4, 4, 1, 1, 1), (4, 2, 2, 2, 1),
    (6, 6, 1, 1, 1), (6, 3, 1, 2, 2), (6, 2, 1, 3, 3), (9, 3, 1, 3, 3), (8, 2, 1, 4, 4),
]


def test_bound_table(capsys):
    with criterion(capsys, "bound calculators on 20 (n, s, c) triples", None):
        assert len(BOUND_TABLE) == 20
        for n, s, c, d, m in BOUND_TABLE:
            assert centralizer_fp_bound(n, s) == d
            assert bredon_bound(n, s) == d
            assert conjecture_bound(n, s, c) == m
        # (n, s) = (pm, pm/d) agrees with the centralizer reports
        for p, m in [(2, 2), (2, 3), (3, 2)]:
            inst = build_prime_char(p, m)
            for d in range(1, m + 1):
                if m % d == 0:
                    rep = centralizer_report_funcfield(inst, d)
                    assert centralizer_fp_bound(p * m, p * m // d) == rep.restricted_verdict.degree == d
