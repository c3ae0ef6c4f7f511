"""Compare the exact tameness solver with a Fourier-Motzkin brute force on random ray sets."""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from oracles import oracle_min_vanishing  # noqa: E402
from sigmatame.charsphere import INFINITE, SigmaSet, tame_degree  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-rank", type=int, default=4)
    ap.add_argument("--max-rays", type=int, default=6)
    ap.add_argument("--radius", type=int, default=2)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    histogram: dict = {}
    for i in range(args.count):
        rank = rng.randint(1, args.max_rank)
        size = rng.randint(1, args.max_rays)
        vecs = []
        while len(vecs) < size:
            v = [rng.randint(-args.radius, args.radius) for _ in range(rank)]
            if any(v):
                vecs.append(v)
        s = SigmaSet.from_vectors(rank, vecs)
        smallest = oracle_min_vanishing([r.coords for r in s.rays])
        deg = tame_degree(s).degree
        got = None if deg is INFINITE else deg + 1
        if got != smallest:
            print(f"disagreement at case {i}: {s.to_json()} solver {got} oracle {smallest}")
            sys.exit(1)
        key = "inf" if deg is INFINITE else deg
        histogram[key] = histogram.get(key, 0) + 1
    print(f"{args.count} sets agree; tame degree histogram:")
    for k in sorted(histogram, key=lambda x: (x == "inf", x if x != "inf" else 0)):
        print(f"  {k}: {histogram[k]}")


if __name__ == "__main__":
    main()
