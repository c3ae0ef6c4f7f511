"""Exact phase-one simplex over the rationals (Bland's rule)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .intmat import primitive


def phase_one(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """A point of ``{x >= 0 : a x = b}`` or ``None`` if the set is empty."""
    rows = len(a)
    n = len(a[0]) if rows else 0
    # flip rows so that b >= 0, then append one artificial per row
    t = []
    for row, rhs in zip(a, b):
        sgn = -1 if rhs < 0 else 1
        t.append([Fraction(sgn * x) for x in row] + [Fraction(0)] * rows + [Fraction(sgn * rhs)])
    for i in range(rows):
        t[i][n + i] = Fraction(1)
    basis = [n + i for i in range(rows)]
    width = n + rows
    # minimise the sum of artificials; reduced costs of the starting tableau
    cost = [Fraction(0)] * (width + 1)
    for i in range(rows):
        for j in range(width + 1):
            cost[j] -= t[i][j]
    for i in range(rows):
        cost[n + i] += 1
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i in range(rows):
            if t[i][enter] > 0:
                ratio = t[i][width] / t[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # pragma: no cover - objective is bounded below by 0
            raise AssertionError("unbounded phase-one problem")
        piv = t[leave][enter]
        t[leave] = [x / piv for x in t[leave]]
        for i in range(rows):
            if i != leave and t[i][enter]:
                f = t[i][enter]
                t[i] = [x - f * y for x, y in zip(t[i], t[leave])]
        if cost[enter]:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, t[leave])]
        basis[leave] = enter
    if -cost[width] != 0:
        return None
    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = t[i][width]
    return x[:n]


def separating_functional(vectors: Sequence[Sequence[int]]) -> list[int] | None:
    """Integer functional f with ``f . v > 0`` for every v, or ``None``.

    Solves ``V f >= 1`` with ``f = f+ - f-`` and explicit surplus columns.
    """
    if not vectors:
        raise ValueError("need at least one vector")
    k = len(vectors)
    n = len(vectors[0])
    a = []
    for i, v in enumerate(vectors):
        surplus = [0] * k
        surplus[i] = -1
        a.append(list(v) + [-x for x in v] + surplus)
    x = phase_one(a, [1] * k)
    if x is None:
        return None
    f = [x[j] - x[n + j] for j in range(n)]
    f = primitive(f)
    assert all(sum(c * y for c, y in zip(f, v)) > 0 for v in vectors)
    return f
