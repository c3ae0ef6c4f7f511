"""Exact integer and rational matrix routines.

Matrices are lists of rows. Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vecmat(v: Sequence, a: Sequence[Sequence]) -> list:
    """Row vector times matrix."""
    n = len(a[0]) if a else 0
    return [sum(v[i] * a[i][j] for i in range(len(a))) for j in range(n)]


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def hnf_with_transform(rows: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, int]:
    """Row Hermite normal form.

    Returns ``(H, U, rank)`` with ``U @ rows == H``, ``U`` unimodular, the
    first ``rank`` rows of ``H`` in echelon form with positive pivots and the
    entries above each pivot reduced into ``[0, pivot)``; the remaining rows
    of ``H`` are zero.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[piv] = a[piv], a[r]
            u[r], u[piv] = u[piv], u[r]
            clean = True
            for i in range(r + 1, m):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return a, u, r


def hnf(rows: Sequence[Sequence[int]]) -> Matrix:
    """Nonzero rows of the row Hermite normal form of ``rows``."""
    if not rows:
        return []
    h, _, r = hnf_with_transform(rows)
    return h[:r]


def integer_kernel(a: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Hermite basis (as rows) of ``{v in Z^n : a v = 0}``.

    The returned lattice is saturated: ``Z^n / ker`` is torsion free.
    """
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return identity(n)
    _, u, r = hnf_with_transform(transpose(a))
    return hnf(u[r:])


def det(a: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_q(a: Sequence[Sequence]) -> Fraction:
    """Determinant of a rational matrix by Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in a]
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        out *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def rref(a: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    m = [[Fraction(x) for x in r] for r in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Sequence[Sequence]) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the rational right null space of ``a``."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    m, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One rational solution of ``a x = b`` or ``None`` when inconsistent.

    Free variables are set to zero.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = m[i][n]
    return x


def primitive(v: Sequence) -> list[int]:
    """Scale a nonzero rational vector by a positive factor to a primitive integer vector."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = content(ints)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return [x // g for x in ints]
