"""Tame degrees and centralizer verdicts for the F_{p^m}(x1) family."""

import argparse

from sigmatame.finitefield import DESK_LIMIT, is_prime
from sigmatame.funcfield import build_prime_char, centralizer_report_funcfield, sigma_complement_funcfield
from sigmatame.charsphere import tame_degree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-pm", type=int, default=12, help="largest p*m to run")
    args = ap.parse_args()
    print("p  m  rays  tame  centralizer degrees by d")
    for p in range(2, args.max_pm + 1):
        if not is_prime(p):
            continue
        for m in range(1, args.max_pm // p + 1):
            if p**m > DESK_LIMIT:
                continue
            inst = build_prime_char(p, m)
            s = sigma_complement_funcfield(inst)
            deg = tame_degree(s).degree
            cents = []
            for d in range(1, m + 1):
                if m % d == 0:
                    rep = centralizer_report_funcfield(inst, d)
                    cents.append(f"d={d}:{rep.restricted_verdict.degree}")
            print(f"{p:<2} {m:<2} {len(s):<5} {deg:<5} {' '.join(cents)}")


if __name__ == "__main__":
    main()
