"""Tameness evidence for the centralizer of a finite subgroup H0.

Both example families end the same way: H0 permutes the basis of Q, the
fixed sublattice Q0 is spanned by orbit sums, every character of the sigma
set is restricted to Q0, and we record

* the lower bound floor(n / |H0|) together with a certificate that the full
  set is n-tame (the hypothesis the bound needs), and
* a zero-sum witness of size d + 1 among the restricted rays.

The FP labels are annotations: they restate tameness facts through a proven
instance of the FP_m-Conjecture and are never derived here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import centralizer_fp_bound
from .charsphere import (
    SigmaSet,
    TameCertificate,
    TameVerdict,
    Witness,
    check_certificate,
    positive_combination_feasible,
    sigma_restrict,
    tame_certificate,
    tame_degree,
)
from .lattice import LatticeAction, fixed_sublattice, trace_complement, Decomposition


@dataclass(frozen=True)
class CentralizerReport:
    d: int
    h0_order: int
    n: int
    decomposition: Decomposition
    restricted: SigmaSet
    restricted_verdict: TameVerdict
    bound: int
    ambient_certificate: TameCertificate
    restricted_certificate: TameCertificate
    upper_witness: Witness
    citation: str

    @property
    def q0(self):
        return self.decomposition.q0

    def verdicts(self) -> list[str]:
        return [
            f"C_G(H0) is of type FP_{self.d} (A0 is {self.d}-tame over ZQ0; via FP_m-Conjecture instance {self.citation})",
            f"C_G(H0) is not of type FP_{self.d + 1} (zero-sum witness on {self.d + 1} restricted rays; "
            f"via FP_m-Conjecture instance {self.citation})",
        ]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "H0_order": self.h0_order,
            "n": self.n,
            "decomposition": self.decomposition.to_json(),
            "restricted_sigma": self.restricted.to_json(),
            "restricted_sigma_is_lower_bound_set": True,
            "restricted_tame_degree": self.restricted_verdict.to_json(),
            "lower_bound": {
                "value": self.bound,
                "formula": "floor(n / |H0|)",
                "flag": "THEOREM",
                "hypothesis_certificate": self.ambient_certificate.to_json(),
            },
            "restricted_certificate": self.restricted_certificate.to_json(),
            "upper_witness": self.upper_witness.to_json(),
            "upper_witness_basis": "sufficient evidence per restriction implication",
            "verdicts": self.verdicts(),
        }


class CentralizerError(ArithmeticError):
    pass


def centralizer_report(sigma: SigmaSet, h0: LatticeAction, citation: str) -> CentralizerReport:
    n = sigma.rank
    dec = trace_complement(h0, fixed_sublattice(h0))
    d = len(dec.q0)
    restricted = sigma_restrict(sigma, dec.q0)
    verdict = tame_degree(restricted)
    bound = centralizer_fp_bound(n, h0.order)
    if bound != d:
        raise CentralizerError(f"floor(n/|H0|) = {bound} but Q0 has rank {d}")
    amb = tame_certificate(sigma, n)
    if amb is None or not check_certificate(sigma, amb):
        raise CentralizerError(f"the ambient sigma set is not {n}-tame")
    cert = tame_certificate(restricted, d)
    if cert is None or not check_certificate(restricted, cert):
        raise CentralizerError(f"restricted set is not {d}-tame")
    wit = positive_combination_feasible(restricted.rays, d + 1)
    if wit is None or wit.size != d + 1 or not wit.is_valid():
        raise CentralizerError(f"no zero-sum witness of size {d + 1} among restricted rays")
    return CentralizerReport(d, h0.order, n, dec, restricted, verdict, bound, amb, cert, wit, citation)
