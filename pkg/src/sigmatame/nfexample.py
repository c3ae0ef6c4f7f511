"""The number-field family: metabelian groups built from a Galois field K.

For a prime q split completely in K with a root k of f mod q, the prime
I = (q, zeta - k) satisfies qO_K = prod_{t in H} I^t. With r the class number,
I^r = alpha O_K. The lattice Q is free on q_x (x in H), q_x acting on
A = O_K[alpha^t/p, p/alpha^t] as multiplication by alpha^x / p.

Characters outside the Sigma invariant come from the valuations at the primes
I^h and at the primes J over p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .centralizer import CentralizerReport, centralizer_report
from .charsphere import SigmaSet, TameCertificate, TameVerdict, ray_canonicalize, tame_certificate, tame_degree
from .config import CapExceeded, ContractError
from .finitefield import is_prime
from .lattice import LatticeAction, perm_matrix
from .numfield import (
    Automorphism,
    NfElem,
    NfIdeal,
    NumberField,
    PrimeIdeal,
    class_group,
    factor_rational_prime,
    ideal_valuation,
    prime_decomposition,
    principal_generator,
)

CITATION = "[Aberg]"


class ValuationIdentityError(ArithmeticError):
    pass


def _f_mod(K: NumberField, x: int, q: int) -> int:
    return sum(c * pow(x, i, q) for i, c in enumerate(K.poly)) % q


def select_prime(K: NumberField, start: int = 2, cap: int | None = None) -> tuple[int, int]:
    """Smallest prime q >= start with a root k of f mod q and q coprime to index and d_K."""
    cap = K.caps.prime_search if cap is None else cap
    q = max(start, 2)
    while q <= cap:
        if is_prime(q) and K.index % q and K.disc % q:
            for k in range(q):
                if _f_mod(K, k, q) == 0:
                    return q, k
        q += 1
    raise CapExceeded(f"no admissible prime q in [{start}, {cap}]")


def default_p(K: NumberField, q: int) -> int:
    p = 2
    while p == q or K.disc % p == 0 or not is_prime(p):
        p += 1
    return p


@dataclass(frozen=True)
class NumberFieldInstance:
    K: NumberField
    q: int
    k: int
    I: PrimeIdeal
    conjugates: tuple[NfIdeal, ...]  # I^t for t in H, in the order of K.automorphisms
    r: int
    alpha: NfElem
    p: int
    p_primes: tuple[PrimeIdeal, ...]

    @property
    def H(self) -> tuple[Automorphism, ...]:
        return self.K.automorphisms

    @property
    def rank(self) -> int:
        return len(self.H)

    def alpha_conj(self, x: int) -> NfElem:
        return self.H[x](self.alpha)

    def generator(self, x: int) -> NfElem:
        """Element by which q_x acts: alpha^x / p."""
        return self.alpha_conj(x) / self.p

    def to_json(self) -> dict:
        return {
            "field": self.K.to_json(),
            "automorphisms": [t.label() for t in self.H],
            "q": self.q,
            "k_q": self.k,
            "I": self.I.ideal.to_json(),
            "class_number": self.r,
            "alpha": [str(c) for c in self.alpha.coords],
            "alpha_str": str(self.alpha),
            "alpha_norm": str(self.alpha.norm()),
            "p": self.p,
            "p_factorization": [J.to_json() for J in self.p_primes],
            "rank": self.rank,
        }


def build_instance(K: NumberField, q: int, k: int, p: int | None = None) -> NumberFieldInstance:
    if not is_prime(q) or _f_mod(K, k, q):
        raise ContractError(f"{k} is not a root of f mod the prime {q}")
    if K.index % q == 0 or K.disc % q == 0:
        raise ContractError(f"q = {q} divides the index or d_K")
    p = default_p(K, q) if p is None else p
    if not is_prime(p) or p == q:
        raise ContractError(f"p = {p} must be a prime different from q = {q}")
    n = len(K.automorphisms)
    if n != K.degree:
        raise ContractError("K is not Galois")
    primes = factor_rational_prime(K, q)
    if len(primes) != n or any(P.e != 1 or P.f != 1 for P in primes):
        raise ContractError(f"q = {q} does not split completely")
    zk = K.zeta - k
    I = next((P for P in primes if P.ideal.contains(zk)), None)
    if I is None:
        raise ArithmeticError(f"no prime over {q} contains zeta - {k}")
    conj = tuple(t(I.ideal) for t in K.automorphisms)
    if len(set(conj)) != n or set(conj) != {P.ideal for P in primes}:
        raise ArithmeticError("the conjugates of I are not the n distinct primes over q")
    prod = NfIdeal.unit(K)
    for c in conj:
        prod = prod * c
    if prod != NfIdeal.generated_by(K, [q]):
        raise ArithmeticError("qO_K != product of the conjugates of I")
    r = class_group(K).order
    alpha = principal_generator(I.ideal**r)
    if alpha is None:
        raise ArithmeticError(f"I^{r} is not principal although the class number is {r}")
    if NfIdeal.generated_by(K, [alpha]) != I.ideal**r:
        raise ArithmeticError("alpha O_K != I^r")
    return NumberFieldInstance(K, q, k, I, conj, r, alpha, p, tuple(prime_decomposition(K, p)))


@dataclass(frozen=True)
class ValuationCharacter:
    place: str
    raw: tuple[int, ...]

    def to_json(self) -> dict:
        return {"place": self.place, "raw": list(self.raw), "ray": list(ray_canonicalize(self.raw).coords)}


def valuation_characters(inst: NumberFieldInstance) -> list[ValuationCharacter]:
    """chi_P(q_x) = v_P(alpha^x / p) for P in {I^h} and the primes over p."""
    gens = [inst.generator(x) for x in range(inst.rank)]
    out = []
    for h, Ih in enumerate(inst.conjugates):
        P = PrimeIdeal(Ih, inst.q, 1, 1)
        out.append(ValuationCharacter(f"I^h{h}", tuple(ideal_valuation(g, P) for g in gens)))
    for j, J in enumerate(inst.p_primes):
        out.append(ValuationCharacter(f"J{j + 1} | {inst.p}", tuple(ideal_valuation(g, J) for g in gens)))
    return out


@dataclass(frozen=True)
class NumberFieldSigma:
    instance: NumberFieldInstance
    characters: tuple[ValuationCharacter, ...]
    s0: tuple[int, ...]
    sigma: SigmaSet
    verdict: TameVerdict
    certificate: TameCertificate

    def to_json(self) -> dict:
        return {
            "instance": self.instance.to_json(),
            "characters": [c.to_json() for c in self.characters],
            "s0_per_J": list(self.s0),
            "sigma": self.sigma.to_json(),
            "tame_degree": self.verdict.to_json(),
            "tame_certificate": self.certificate.to_json(),
        }


def sigma_complement_numfield(inst: NumberFieldInstance) -> NumberFieldSigma:
    n = inst.rank
    chars = valuation_characters(inst)
    for h, ch in enumerate(chars[:n]):
        want = tuple(inst.r * int(x == h) for x in range(n))
        if ch.raw != want:
            raise ValuationIdentityError(f"v_(I^h{h})(alpha^x/p) = {ch.raw}, expected {want}")
    s0 = []
    for J, ch in zip(inst.p_primes, chars[n:]):
        if ch.raw != (-J.e,) * n:
            raise ValuationIdentityError(f"v_J(alpha^x/p) = {ch.raw}, expected constant {-J.e}")
        s0.append(J.e)
    s = SigmaSet.from_vectors(n, [c.raw for c in chars])
    if len(s) != n + 1:
        raise ValuationIdentityError(f"expected {n + 1} rays, found {len(s)}")
    verdict = tame_degree(s)
    cert = tame_certificate(s, n)
    if cert is None or verdict.degree != n:
        raise ValuationIdentityError(f"tame degree {verdict.degree} != {n}")
    return NumberFieldSigma(inst, tuple(chars), tuple(s0), s, verdict, cert)


def subgroup_closure(K: NumberField, gens: list[int]) -> list[int]:
    """Indices into K.automorphisms of the subgroup generated by ``gens``."""
    H = K.automorphisms
    for g in gens:
        if not 0 <= g < len(H):
            raise ContractError(f"automorphism index {g} out of range 0..{len(H) - 1}")
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = H.index(H[a] * H[g])
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(members)


def parse_subgroup(K: NumberField, word: str | None) -> list[int]:
    """'all' -> H; None, '' or 'id' -> trivial; otherwise comma-separated generator indices."""
    if word is None or word.strip() in ("", "id"):
        return [0]
    if word.strip() == "all":
        return list(range(len(K.automorphisms)))
    try:
        gens = [int(x) for x in word.split(",")]
    except ValueError as exc:
        raise ContractError(f"bad subgroup word {word!r}") from exc
    return subgroup_closure(K, gens)


def right_regular_action(K: NumberField, subgroup: list[int]) -> LatticeAction:
    """t1 in H0 acts on Q by q_x -> q_{x t1}."""
    H = K.automorphisms
    mats = []
    for t in subgroup:
        images = [H.index(H[x] * H[t]) + 1 for x in range(len(H))]
        mats.append(perm_matrix(images))
    return LatticeAction(len(H), tuple(mats))


def centralizer_report_numfield(inst: NumberFieldInstance, subgroup: list[int],
                                sigma: NumberFieldSigma | None = None) -> CentralizerReport:
    if sorted(subgroup) != subgroup_closure(inst.K, subgroup):
        raise ContractError(f"{subgroup} is not a subgroup of H")
    sigma = sigma_complement_numfield(inst) if sigma is None else sigma
    action = right_regular_action(inst.K, subgroup)
    return centralizer_report(sigma.sigma, action, CITATION)


def build_default(K: NumberField, p: int | None = None, q: int | None = None) -> NumberFieldInstance:
    if q is None:
        q, k = select_prime(K)
    else:
        roots = [k for k in range(q) if _f_mod(K, k, q) == 0] if is_prime(q) else []
        if not roots:
            raise ContractError(f"f has no root mod {q}")
        k = roots[0]
    return build_instance(K, q, k, p)


__all__ = [
    "CITATION",
    "NumberFieldInstance",
    "NumberFieldSigma",
    "ValuationCharacter",
    "ValuationIdentityError",
    "build_default",
    "build_instance",
    "centralizer_report_numfield",
    "default_p",
    "parse_subgroup",
    "right_regular_action",
    "select_prime",
    "sigma_complement_numfield",
    "subgroup_closure",
    "valuation_characters",
]
