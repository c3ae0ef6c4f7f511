"""The prime-characteristic family over k(x1), k = F_{p^m}.

Q is free abelian on q_1..q_{pm}, q_i acting on A = k[x1, 1/(x1 + a_j)] as
multiplication by x1 + a_i, where a_1 = a and a_{i+1} = sigma(a_i) + a for a
normal element a of trace 1. The cyclic group H of order pm is generated by
mu, which is sigma on k and x1 -> x1 + a; on Q it shifts q_i -> q_{i+1}.

Characters in the complement of the Sigma invariant come from the places of
k(x1) trivial on k: the zeros of the x1 + a_j and the place at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .centralizer import CentralizerReport, centralizer_report
from .charsphere import SigmaSet
from .finitefield import FqElem, FqField, FqPoly, conjugates, fp_rank, fq_make, frobenius, trace
from .lattice import LatticeAction, cycle_shift

CITATION = "[Koch, Cor. C]"


class FamilyIdentityError(ArithmeticError):
    """The a_i sequence broke one of its defining properties."""


def find_normal_trace_one(k: FqField) -> FqElem:
    """Smallest element with F_p-independent conjugates, rescaled to trace 1."""
    for e in k.elements():
        if e.is_zero():
            continue
        if fp_rank([c.coeffs for c in conjugates(e)], k.p) == k.m:
            b = trace(e)
            # independent conjugates force a nonzero trace in F_p
            assert b.in_prime_field() and not b.is_zero()
            return e * pow(b.coeffs[0], -1, k.p)
    raise AssertionError("no normal element found")  # pragma: no cover


def mobius_sequence(k: FqField, a: FqElem) -> tuple[FqElem, ...]:
    """a_1 = a, a_{i+1} = sigma(a_i) + a for i < pm; checks the three facts it must satisfy."""
    n = k.p * k.m
    seq = [a]
    while len(seq) < n:
        seq.append(frobenius(seq[-1]) + a)
    if seq[k.m - 1] != k.one():
        raise FamilyIdentityError(f"a_m = {seq[k.m - 1]} != 1")
    if not seq[n - 1].is_zero():
        raise FamilyIdentityError(f"a_pm = {seq[n - 1]} != 0")
    if len(set(seq)) != n:
        raise FamilyIdentityError("the a_j are not pairwise distinct")
    return tuple(seq)


@dataclass(frozen=True)
class PrimeCharInstance:
    field: FqField
    a: FqElem
    sequence: tuple[FqElem, ...]

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def rank(self) -> int:
        return self.p * self.m

    @property
    def h_order(self) -> int:
        return self.p * self.m

    def basis_polys(self) -> list[FqPoly]:
        """Images x1 + a_j of the q_j in A."""
        return [FqPoly.x_plus(c) for c in self.sequence]

    def mu(self, f: FqPoly) -> FqPoly:
        """sigma on coefficients, then x1 -> x1 + a."""
        return f.map_coeffs(frobenius).shift(self.a)

    def mu_order(self) -> int:
        x1 = FqPoly(self.field, (self.field.zero(), self.field.one()))
        f = self.mu(x1)
        k = 1
        while f != x1:
            f = self.mu(f)
            k += 1
        # sigma^k must also be trivial on k
        g = self.field.gen()
        for _ in range(k):
            g = frobenius(g)
        if g != self.field.gen():
            raise FamilyIdentityError("mu^k fixes x1 but not the constants")
        return k

    def shift_action(self, step: int = 1) -> LatticeAction:
        return LatticeAction(self.rank, (cycle_shift(self.rank, step),))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "modulus": list(self.field.modulus),
            "a": list(self.a.coeffs),
            "sequence": [list(c.coeffs) for c in self.sequence],
            "rank": self.rank,
            "H_order": self.h_order,
        }


def build_prime_char(p: int, m: int) -> PrimeCharInstance:
    k = fq_make(p, m)
    a = find_normal_trace_one(k)
    inst = PrimeCharInstance(k, a, mobius_sequence(k, a))
    ys = inst.basis_polys()
    for i, y in enumerate(ys):
        if inst.mu(y) != ys[(i + 1) % len(ys)]:
            raise FamilyIdentityError(f"mu does not send x1 + a_{i + 1} to the next basis element")
    if inst.mu_order() != inst.h_order:
        raise FamilyIdentityError("mu does not have order pm")
    return inst


def invariant_product(inst: PrimeCharInstance) -> FqPoly:
    """prod_h h(x1) = prod_j (x1 + a_j): a nonzero element fixed by all of H."""
    out = FqPoly(inst.field, (inst.field.one(),))
    for y in inst.basis_polys():
        out = out * y
    return out


@dataclass(frozen=True)
class PlaceCharacter:
    place: str
    values: tuple[int, ...]

    def to_json(self) -> dict:
        return {"place": self.place, "values": list(self.values)}


def place_characters(inst: PrimeCharInstance) -> list[PlaceCharacter]:
    """chi_v(q_i) = v(x1 + a_i) for every place v where some x1 + a_i is not a unit."""
    ys = inst.basis_polys()
    out = []
    for j, c in enumerate(inst.sequence):
        pi = FqPoly.x_plus(c)
        out.append(PlaceCharacter(f"x1 = -a_{j + 1}", tuple(y.valuation_at(pi) for y in ys)))
    out.append(PlaceCharacter("infinity", tuple(y.degree_valuation() for y in ys)))
    return out


def sigma_complement_funcfield(inst: PrimeCharInstance) -> SigmaSet:
    chars = place_characters(inst)
    n = inst.rank
    for j, ch in enumerate(chars[:-1]):
        if ch.values != tuple(int(i == j) for i in range(n)):
            raise FamilyIdentityError(f"place {ch.place} has values {ch.values}")
    if chars[-1].values != (-1,) * n:
        raise FamilyIdentityError(f"place at infinity has values {chars[-1].values}")
    s = SigmaSet.from_vectors(n, [ch.values for ch in chars if any(ch.values)])
    if len(s) != n + 1:
        raise FamilyIdentityError(f"expected {n + 1} rays, found {len(s)}")
    return s


def centralizer_report_funcfield(inst: PrimeCharInstance, d: int) -> CentralizerReport:
    """H0 = <mu^d> for a divisor d of m; [H : H0] = d."""
    if d < 1 or inst.m % d:
        raise ValueError(f"d = {d} does not divide m = {inst.m}")
    h0 = inst.shift_action(d)
    return centralizer_report(sigma_complement_funcfield(inst), h0, CITATION)
