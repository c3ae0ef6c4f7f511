"""Independent brute-force oracles used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd


def fm_feasible(ineqs: list[tuple[list[Fraction], Fraction]], nvars: int) -> bool:
    """Fourier-Motzkin: is there x with a . x >= b for every (a, b)?"""
    rows = [([Fraction(c) for c in a], Fraction(b)) for a, b in ineqs]
    for k in range(nvars):
        pos, neg, rest = [], [], []
        for a, b in rows:
            if a[k] > 0:
                pos.append((a, b))
            elif a[k] < 0:
                neg.append((a, b))
            else:
                rest.append((a, b))
        for ap, bp in pos:
            for an, bn in neg:
                s, t = -an[k], ap[k]
                rest.append(([s * x + t * y for x, y in zip(ap, an)], s * bp + t * bn))
        # drop exact duplicates to keep the blow-up in check
        seen = set()
        rows = []
        for a, b in rest:
            key = (tuple(a), b)
            if key not in seen:
                seen.add(key)
                rows.append((a, b))
    return all(b <= 0 for _, b in rows)


def zero_in_positive_hull(vectors) -> bool:
    """lambda_i >= 1 and sum lambda_i v_i = 0, decided by elimination.

    The equations are solved for pivot variables first; the bounds
    lambda_i >= 1 rewritten in the free variables go to Fourier-Motzkin.
    """
    k = len(vectors)
    n = len(vectors[0])
    rows = [[Fraction(v[c]) for v in vectors] for c in range(n)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, n) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(k) if c not in pivots]
    if not free:
        return False
    ineqs = []
    # lambda_pivot = -sum_free row[f] lambda_f >= 1
    for i in range(len(pivots)):
        ineqs.append(([-rows[i][f] for f in free], 1))
    for j in range(len(free)):
        ineqs.append(([int(j == t) for t in range(len(free))], 1))
    return fm_feasible(ineqs, len(free))


def oracle_min_vanishing(rays):
    """Size of the smallest subset with a strictly positive zero combination, or None."""
    rays = list(rays)
    for size in range(1, len(rays) + 1):
        for sub in combinations(rays, size):
            if zero_in_positive_hull(sub):
                return size
    return None


def oracle_tame_degree(rays):
    """Smallest vanishing subset size minus one, or None for infinite."""
    size = oracle_min_vanishing(rays)
    return None if size is None else size - 1


def reduced_form_count(d: int) -> int:
    """Number of reduced primitive positive definite forms of discriminant d < 0."""
    assert d < 0 and d % 4 in (0, 1)
    count = 0
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            if (b * b - d) % (4 * a):
                continue
            c = (b * b - d) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, abs(b)), c) == 1:
                count += 1
        a += 1
    return count


def fundamental_discriminants(lo: int, hi: int):
    for d in range(lo, hi + 1):
        if d in (0, 1):
            continue
        if d % 4 == 1 and _squarefree(d):
            yield d
        elif d % 4 == 0 and (d // 4) % 4 in (2, 3) and _squarefree(d // 4):
            yield d


def _squarefree(n: int) -> bool:
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True
