"""Floor bounds on finiteness degrees and conv_{<=t} inclusion certificates."""

from __future__ import annotations

from dataclasses import dataclass

from .charsphere import SigmaSet, Witness, Ray, cone_membership, tame_degree, INFINITE

THEOREM = "THEOREM"
CONJECTURAL = "CONJECTURAL"


def _positive(**kw):
    for k, v in kw.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"{k} must be a positive integer, got {v!r}")


def centralizer_fp_bound(n: int, h: int) -> int:
    """floor(n/|H|): FP degree of C_G(H) for metabelian G of type FP_n, finite Pruefer rank."""
    _positive(n=n, h=h)
    return n // h


def bredon_bound(n: int, s: int) -> int:
    """floor(n/s): Bredon-FP degree when s bounds the orders of finite subgroups."""
    _positive(n=n, s=s)
    return n // s


def conjecture_bound(n: int, s: int, c: int) -> int:
    """floor(n/(s c)) for soluble G with nilpotent N of class c. Conjectural."""
    _positive(n=n, s=s, c=c)
    return n // (s * c)


def bounds_table(n: int, s: int, c: int | None = None) -> dict:
    out = {
        "n": n,
        "s": s,
        "centralizer_fp": {"value": centralizer_fp_bound(n, s), "formula": "floor(n/|H|)", "flag": THEOREM},
        "bredon_fp": {"value": bredon_bound(n, s), "formula": "floor(n/s)", "flag": THEOREM},
    }
    if c is not None:
        out["c"] = c
        out["bredon_fp_conjectural"] = {
            "value": conjecture_bound(n, s, c),
            "formula": "floor(n/(s*c))",
            "flag": CONJECTURAL,
        }
    return out


@dataclass(frozen=True)
class InclusionCertificate:
    t: int
    witnesses: tuple[tuple[Ray, Witness], ...]
    counterexample: Ray | None
    premise_n: int | None = None
    premise_holds: bool | None = None
    conclusion_degree: int | None = None
    conclusion_holds: bool | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        out = {
            "t": self.t,
            "included": self.ok,
            "witnesses": [{"ray": list(r.coords), "witness": w.to_json()} for r, w in self.witnesses],
            "counterexample": None if self.counterexample is None else list(self.counterexample.coords),
        }
        if self.premise_n is not None:
            out["zero_avoidance"] = {
                "premise": f"0 not in conv_<={self.premise_n}(set)",
                "premise_holds": self.premise_holds,
                "conclusion": f"0 not in conv_<={self.conclusion_degree}(sub)",
                "conclusion_holds": self.conclusion_holds,
            }
        return out


def conv_inclusion_certificate(sub: SigmaSet, s: SigmaSet, t: int, n: int | None = None) -> InclusionCertificate:
    """Per-ray witnesses that ``sub`` lies in conv_{<=t}(s).

    Stops at the first ray without a witness. With ``n`` given, also checks
    directly whether 0 avoids conv_{<=n}(s) and conv_{<=floor(n/t)}(sub).
    """
    if sub.rank != s.rank:
        raise ValueError(f"rank mismatch: {sub.rank} != {s.rank}")
    if t < 1:
        raise ValueError("t must be at least 1")
    found = []
    bad = None
    for r in sub.rays:
        w = cone_membership(r, s, t)
        if w is None:
            bad = r
            break
        found.append((r, w))
    if n is None:
        return InclusionCertificate(t, tuple(found), bad)
    _positive(n=n)
    deg_s = tame_degree(s).degree
    deg_sub = tame_degree(sub).degree
    m = n // t
    premise = deg_s is INFINITE or deg_s >= n
    conclusion = m == 0 or deg_sub is INFINITE or deg_sub >= m
    return InclusionCertificate(t, tuple(found), bad, n, premise, m, conclusion)
