"""Class numbers, generators and valuation characters for the Galois number field family."""

import argparse

from sigmatame.nfexample import build_default, centralizer_report_numfield, sigma_complement_numfield, subgroup_closure
from sigmatame.numfield import nf_make, quadratic_poly

FIELDS = {
    "Q(i)": ((1, 0, 1), 3),
    "Q(sqrt 2)": ((-2, 0, 1), 5),
    "Q(sqrt -5)": ((5, 0, 1), 7),
    "Q(sqrt 10)": (quadratic_poly(10), None),
    "Q(sqrt -23)": (quadratic_poly(-23), None),
    "Q(zeta_8)": ((1, 0, 0, 0, 1), None),
    "Q(zeta_5)": ((1, 1, 1, 1, 1), None),
    "Q(sqrt 2, sqrt 3)": ((1, 0, -10, 0, 1), None),
    "cyclic cubic, d = 81": ((1, -3, 0, 1), None),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", help="run a single field by its label")
    args = ap.parse_args()
    for label, (poly, p) in FIELDS.items():
        if args.only and label != args.only:
            continue
        K = nf_make(poly)
        inst = build_default(K, p)
        res = sigma_complement_numfield(inst)
        print(f"{label}: d_K = {K.disc}, h = {inst.r}, q = {inst.q}, k = {inst.k}, p = {inst.p}")
        print(f"  alpha = {inst.alpha}, norm {inst.alpha.norm()}")
        print("  raw characters: " + "; ".join(f"{c.place} {list(c.raw)}" for c in res.characters))
        print(f"  {len(res.sigma)} rays, tame degree {res.verdict.degree}")
        seen = set()
        for g in range(len(K.automorphisms)):
            sub = tuple(subgroup_closure(K, [g]))
            if sub in seen:
                continue
            seen.add(sub)
            rep = centralizer_report_numfield(inst, list(sub), res)
            print(f"  H0 = {list(sub)}: d = {rep.d}, restricted tame degree {rep.restricted_verdict.degree}")


if __name__ == "__main__":
    main()
