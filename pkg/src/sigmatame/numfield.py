"""Small Galois number fields: integral bases, ideals in Hermite form, class numbers.

A field is ``Q[x]/(f)`` for a monic irreducible integer polynomial ``f`` of
degree 2 to 4 whose roots all lie in the field. Elements carry rational
coordinates over a fixed integral basis; ideals carry a row Hermite basis of
integer coordinate vectors and a positive integer denominator.

Automorphisms compose on the right, matching exponent notation: for the
elements t, u of the Galois group ``x^(tu) = (x^t)^u``, and with row vectors
the matrix of ``tu`` is ``T @ U``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations, product
from math import factorial, gcd, isqrt, prod
from typing import Iterable, Sequence

from .charsphere import INFINITE
from .config import DEFAULT_CAPS, CapExceeded, Caps, ContractError
from .finitefield import fp_factor, is_prime
from .intmat import det, det_q, hnf, identity, rref, solve

Vec = tuple[Fraction, ...]


# -- rational polynomials --------------------------------------------------------

def _poly_mulmod(a: Sequence, b: Sequence, f: Sequence[int]) -> list[Fraction]:
    n = len(f) - 1
    out = [Fraction(0)] * (2 * n - 1 if n else 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    for k in range(len(out) - 1, n - 1, -1):
        c = out[k]
        if c:
            for i in range(n + 1):
                out[k - n + i] -= c * f[i]
    return out[:n] + [Fraction(0)] * (n - len(out[:n]))


def _mul_matrix_power(x: Sequence, f: Sequence[int]) -> list[list[Fraction]]:
    """Rows: coordinates of x * zeta^i in the power basis."""
    n = len(f) - 1
    rows = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        rows.append(_poly_mulmod(x, e, f))
    return rows


def charpoly(a: Sequence[Sequence]) -> list[Fraction]:
    """Characteristic polynomial (ascending, monic) by Faddeev-LeVerrier."""
    n = len(a)
    a = [[Fraction(x) for x in r] for r in a]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            am[i][i] += coeffs[n - k + 1]
        m = am
        tr = sum(sum(a[i][t] * m[t][i] for t in range(n)) for i in range(n))
        coeffs[n - k] = -tr / k
    return coeffs


def poly_disc(f: Sequence[int]) -> int:
    """Discriminant of a monic polynomial, via the trace form of Z[x]/(f)."""
    n = len(f) - 1
    tr = [_trace_power(k, f) for k in range(2 * n - 1)]
    return int(det_q([[tr[i + j] for j in range(n)] for i in range(n)]))


def _trace_power(k: int, f: Sequence[int]) -> Fraction:
    n = len(f) - 1
    x = [Fraction(0)] * n
    if k < n:
        x[k] = Fraction(1)
    else:
        x[0] = Fraction(1)
        z = [Fraction(0)] * n
        z[1 % n] = Fraction(1) if n > 1 else Fraction(-f[0])
        for _ in range(k):
            x = _poly_mulmod(x, z, f)
    mm = _mul_matrix_power(x, f)
    return sum(mm[i][i] for i in range(n))


def _squarefree_part(n: int) -> tuple[int, int]:
    """n = s * k^2 with s squarefree; returns (s, k)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, k = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            s *= p
        p += 1
    return sign * s * n, k


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _module_hnf(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], int]:
    """Hermite basis of the Z-span of rational rows and its common denominator."""
    rows = [[Fraction(x) for x in r] for r in rows]
    den = 1
    for r in rows:
        for x in r:
            den = _lcm(den, x.denominator)
    ints = [[int(x * den) for x in r] for r in rows]
    h = hnf(ints)
    return [[Fraction(x, den) for x in r] for r in h], den


def _in_span(rows: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    x = solve([list(c) for c in zip(*rows)], list(v))
    return x is not None and all(c.denominator == 1 for c in x)


def _is_integral_power(x: Sequence[Fraction], f: Sequence[int]) -> bool:
    return all(c.denominator == 1 for c in charpoly(_mul_matrix_power(x, f)))


def _ring_closure(basis: list[list[Fraction]], f: Sequence[int]) -> list[list[Fraction]]:
    while True:
        extra = []
        for a, b in product(basis, repeat=2):
            c = _poly_mulmod(a, b, f)
            if not _in_span(basis, c):
                extra.append(c)
        if not extra:
            return basis
        basis, _ = _module_hnf(basis + extra)


def _maximal_order(f: Sequence[int]) -> list[list[Fraction]]:
    """Integral basis in power coordinates by p-saturation.

    An order O is p-maximal iff no element of (1/p)O \\ O is integral, so
    scanning the p^n classes decides each step.
    """
    n = len(f) - 1
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d = abs(poly_disc(f))
    p = 2
    primes = []
    while p * p <= d:
        if d % (p * p) == 0 and is_prime(p):
            primes.append(p)
        p += 1
    for p in primes:
        while True:
            disc = abs(_trace_disc(basis, f))
            if disc % (p * p):
                break
            found = None
            for c in product(range(p), repeat=n):
                if not any(c):
                    continue
                x = [sum(Fraction(ci, p) * b[j] for ci, b in zip(c, basis)) for j in range(n)]
                if _is_integral_power(x, f):
                    found = x
                    break
            if found is None:
                break
            basis, _ = _module_hnf(basis + [found])
            basis = _ring_closure(basis, f)
    return basis


def _trace_disc(basis: Sequence[Sequence[Fraction]], f: Sequence[int]) -> Fraction:
    n = len(basis)
    tr = []
    for a in basis:
        row = []
        for b in basis:
            mm = _mul_matrix_power(_poly_mulmod(a, b, f), f)
            row.append(sum(mm[i][i] for i in range(n)))
        tr.append(row)
    return det_q(tr)


# -- the field ---------------------------------------------------------------

class NumberField:
    """Use :func:`nf_make` to construct."""

    def __init__(self, poly: tuple[int, ...], basis: list[list[Fraction]], caps: Caps):
        self.poly = poly
        self.degree = len(poly) - 1
        self.basis = tuple(tuple(r) for r in basis)
        self.caps = caps
        n = self.degree
        inv = _inverse(basis)
        self._binv = inv
        table = []
        for a in basis:
            row = []
            for b in basis:
                c = self._from_power(_poly_mulmod(a, b, poly))
                if any(x.denominator != 1 for x in c):
                    raise ArithmeticError("basis is not closed under multiplication")
                row.append(tuple(int(x) for x in c))
            table.append(row)
        self._table = table
        self.disc = int(_trace_disc(basis, poly))
        self.index = isqrt(poly_disc(poly) // self.disc)
        if self.index**2 * self.disc != poly_disc(poly):
            raise ArithmeticError("index^2 * d_K != disc(f)")
        self.zeta = NfElem(self, self._from_power([Fraction(int(i == 1)) for i in range(n)]))
        self.automorphisms: tuple[Automorphism, ...] = ()
        self.sqrt_d: NfElem | None = None
        self.d_squarefree: int | None = None

    # coordinates
    def _from_power(self, v: Sequence) -> Vec:
        n = self.degree
        return tuple(sum(Fraction(v[i]) * self._binv[i][j] for i in range(n)) for j in range(n))

    def _to_power(self, c: Sequence) -> list[Fraction]:
        n = self.degree
        return [sum(Fraction(c[i]) * self.basis[i][j] for i in range(n)) for j in range(n)]

    def elem(self, coords: Sequence) -> "NfElem":
        if len(coords) != self.degree:
            raise ValueError("wrong number of coordinates")
        return NfElem(self, tuple(Fraction(c) for c in coords))

    def from_power(self, coeffs: Sequence) -> "NfElem":
        """Element given by its coefficients on 1, zeta, zeta^2, ..."""
        c = list(coeffs) + [0] * (self.degree - len(coeffs))
        return NfElem(self, self._from_power(c))

    def __call__(self, x) -> "NfElem":
        if isinstance(x, NfElem):
            return x
        return self.from_power([x])

    def one(self) -> "NfElem":
        return self(1)

    def _mul(self, a: Vec, b: Vec) -> Vec:
        n = self.degree
        out = [Fraction(0)] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        t = self._table[i][j]
                        for k in range(n):
                            if t[k]:
                                out[k] += x * y * t[k]
        return tuple(out)

    def mul_matrix(self, a: Vec) -> list[list[Fraction]]:
        n = self.degree
        return [list(self._mul(a, tuple(Fraction(int(i == j)) for j in range(n)))) for i in range(n)]

    @cached_property
    def real_embeddings(self) -> int:
        """Number of real roots of f (Sturm-free: via the sign of d_K and the degree)."""
        # for Galois fields all embeddings are real or none are
        return self.degree if self._totally_real else 0

    @cached_property
    def _totally_real(self) -> bool:
        # trace form x -> Tr(x^2) is positive definite iff K is totally real
        n = self.degree
        g = [[self._trace(self._mul(_unit(n, i), _unit(n, j))) for j in range(n)] for i in range(n)]
        return all(det_q([r[:k] for r in g[:k]]) > 0 for k in range(1, n + 1))

    def _trace(self, a: Vec) -> Fraction:
        m = self.mul_matrix(a)
        return sum(m[i][i] for i in range(self.degree))

    @property
    def signature(self) -> tuple[int, int]:
        r1 = self.real_embeddings
        return r1, (self.degree - r1) // 2

    @property
    def identity(self) -> "Automorphism":
        return self.automorphisms[0]

    def __repr__(self) -> str:
        return f"NumberField(f={list(self.poly)}, d_K={self.disc})"

    def to_json(self) -> dict:
        return {
            "poly": list(self.poly),
            "degree": self.degree,
            "integral_basis": [[str(x) for x in r] for r in self.basis],
            "disc": self.disc,
            "index": self.index,
            "galois_group_order": len(self.automorphisms),
        }


def _unit(n: int, i: int) -> Vec:
    return tuple(Fraction(int(i == j)) for j in range(n))


def _inverse(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ArithmeticError("singular basis")
    return [r[n:] for r in red[:n]]


@dataclass(frozen=True)
class NfElem:
    K: NumberField = field(repr=False, compare=False, hash=False)
    coords: Vec

    def _c(self, other) -> "NfElem":
        if isinstance(other, NfElem):
            return other
        if isinstance(other, (int, Fraction)):
            return self.K(other)
        return NotImplemented

    def __add__(self, other):
        o = self._c(other)
        if o is NotImplemented:
            return o
        return NfElem(self.K, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return NfElem(self.K, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._c(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._c(other)
        if o is NotImplemented:
            return o
        return NfElem(self.K, self.K._mul(self.coords, o.coords))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.K.one()
        b = self
        while e:
            if e & 1:
                out = out * b
            b = b * b
            e >>= 1
        return out

    def inverse(self) -> "NfElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.K.degree
        m = self.K.mul_matrix(self.coords)
        # x * y = 1  <=>  y . M_x = e_one
        one = self.K.one().coords
        y = solve([list(c) for c in zip(*m)], list(one))
        return NfElem(self.K, tuple(y[:n]))

    def __truediv__(self, other):
        o = self._c(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.K(other) * self.inverse()

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in charpoly(self.K.mul_matrix(self.coords)))

    def norm(self) -> Fraction:
        return det_q(self.K.mul_matrix(self.coords))

    def trace(self) -> Fraction:
        return self.K._trace(self.coords)

    def power_coords(self) -> list[Fraction]:
        return self.K._to_power(self.coords)

    def __str__(self) -> str:
        return _power_str(self.power_coords())


def _power_str(c: Sequence[Fraction], var: str = "z") -> str:
    parts = []
    for i, x in enumerate(c):
        if not x:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        xs = str(x)
        if not mono:
            parts.append(xs)
        elif x == 1:
            parts.append(mono)
        elif x == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{xs}*{mono}")
    if not parts:
        return "0"
    return "+".join(parts).replace("+-", "-")


@dataclass(frozen=True)
class Automorphism:
    """Matrix of the automorphism on the integral basis, acting on row vectors."""

    K: NumberField = field(repr=False, compare=False, hash=False)
    matrix: tuple[tuple[int, ...], ...]
    image_of_zeta: Vec

    def __call__(self, x):
        if isinstance(x, NfIdeal):
            return x.apply(self)
        n = self.K.degree
        return NfElem(self.K, tuple(sum(x.coords[i] * self.matrix[i][j] for i in range(n)) for j in range(n)))

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        """Right composition: first self, then other."""
        n = self.K.degree
        m = tuple(tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n)) for j in range(n)) for i in range(n))
        return _find_automorphism(self.K, m)

    def label(self) -> str:
        return f"zeta -> {NfElem(self.K, self.image_of_zeta)}"


def _find_automorphism(K: NumberField, m) -> Automorphism:
    for a in K.automorphisms:
        if a.matrix == m:
            return a
    raise ArithmeticError("product of automorphisms not in the group")


def _roots_in_field(K: NumberField) -> list[Vec]:
    """Roots of f in K.

    Quadratic: closed form. Otherwise pick a prime p where f splits into
    distinct linear factors, lift those roots p-adically, and for every
    assignment zeta -> root interpolate a polynomial g with g(r_i) = r_pi(i).
    index * g has integer coefficients when g(zeta) is integral, so the
    symmetric residues reconstruct it once p^k is large enough; every
    candidate is checked exactly by f(g(zeta)) = 0.
    """
    f = K.poly
    n = K.degree
    if n == 2:
        other = K.from_power([-f[1], -1])
        return [K.zeta.coords, other.coords]
    disc = poly_disc(f)
    p = n + 1
    while True:
        if is_prime(p) and disc % p:
            rs = [r for r in range(p) if sum(c * r**i for i, c in enumerate(f)) % p == 0]
            if len(rs) == n:
                break
        p += 1
        if p > K.caps.prime_search:
            raise CapExceeded("no prime below the search cap splits f completely")
    # |power coordinate of a root| <= n B 2^(n-1) B^(n-1) F^(n-1) / |disc| with B a
    # Cauchy bound on the roots and F >= |f'(root)|; reconstruction is exact past it
    B = 1 + max(abs(c) for c in f[:-1])
    F = sum(i * abs(c) for i, c in enumerate(f)) * B ** (n - 1)
    bound = -(-n * B * 2 ** (n - 1) * B ** (n - 1) * F ** (n - 1) // abs(disc))
    need = 2 * K.index * bound + 1
    if need.bit_length() > K.caps.root_precision:
        raise CapExceeded(f"root reconstruction needs {need.bit_length()} bits, cap is {K.caps.root_precision}")
    mod = p
    while mod <= need:
        mod = mod * mod
        rs = [_hensel_step(f, r, mod) for r in rs]
    found: list[Vec] = []
    for perm in permutations(range(n)):
        g = _interpolate(rs, [rs[j] for j in perm], mod)
        c = []
        for x in g:
            y = x * K.index % mod
            if y > mod // 2:
                y -= mod
            c.append(Fraction(y, K.index))
        val = [Fraction(0)] * n
        for coef in reversed(f):
            val = _poly_mulmod(val, c, f)
            val[0] += coef
        if not any(val):
            found.append(K._from_power(c))
    if len(found) != n:
        raise ContractError(f"f has {len(found)} of its {n} roots in K; f is not Galois")
    return found


def _hensel_step(f: Sequence[int], r: int, mod: int) -> int:
    """One Newton step; doubles the precision of a simple root."""
    val = sum(c * pow(r, i, mod) for i, c in enumerate(f)) % mod
    der = sum(i * c * pow(r, i - 1, mod) for i, c in enumerate(f) if i) % mod
    return (r - val * pow(der, -1, mod)) % mod


def _interpolate(xs: Sequence[int], ys: Sequence[int], mod: int) -> list[int]:
    """Coefficients (ascending) of the Lagrange polynomial through (xs, ys) mod ``mod``."""
    n = len(xs)
    out = [0] * n
    for i in range(n):
        basis = [1]
        den = 1
        for j in range(n):
            if j != i:
                basis = [(a - xs[j] * b) % mod for a, b in zip([0] + basis, basis + [0])]
                den = den * (xs[i] - xs[j]) % mod
        scale = ys[i] * pow(den, -1, mod) % mod
        for k in range(n):
            out[k] = (out[k] + scale * basis[k]) % mod
    return out


def _make_automorphisms(K: NumberField) -> tuple[Automorphism, ...]:
    n = K.degree
    out = []
    for theta in _roots_in_field(K):
        th = K._to_power(theta)
        rows = []
        for b in K.basis:
            # evaluate the power-basis polynomial of b at theta
            acc = [Fraction(0)] * n
            pw = [Fraction(int(i == 0)) for i in range(n)]
            for coef in b:
                acc = [x + coef * y for x, y in zip(acc, pw)]
                pw = _poly_mulmod(pw, th, K.poly)
            img = K._from_power(acc)
            if any(x.denominator != 1 for x in img):
                raise ArithmeticError("automorphism does not preserve the integral basis")
            rows.append(tuple(int(x) for x in img))
        out.append(Automorphism(K, tuple(rows), theta))
    ident = tuple(tuple(r) for r in identity(n))
    out.sort(key=lambda a: (a.matrix != ident, K._to_power(a.image_of_zeta)))
    return tuple(out)


def quadratic_poly(d: int) -> tuple[int, ...]:
    """Minimal polynomial of the standard generator of the ring of integers of Q(sqrt d)."""
    s, k = _squarefree_part(d)
    if s == 1 or k != 1:
        raise ContractError(f"{d} must be squarefree and not 1")
    if s % 4 == 1:
        return (Fraction(1 - s, 4).numerator, -1, 1)
    return (-s, 0, 1)


def nf_make(f: Sequence[int], caps: Caps = DEFAULT_CAPS) -> NumberField:
    f = tuple(int(c) for c in f)
    n = len(f) - 1
    if n < 2 or n > 4:
        raise ContractError("supported degrees are 2, 3 and 4")
    if f[-1] != 1:
        raise ContractError("f must be monic")
    if poly_disc(f) == 0 or not _irreducible_q(f):
        raise ContractError(f"{list(f)} is not irreducible over Q")
    sqrt_d = None
    sq = None
    if n == 2:
        # zeta = (-b + sqrt(delta))/2 with delta = s k^2
        c, b = f[0], f[1]
        sq, k = _squarefree_part(b * b - 4 * c)
        if sq % 4 == 1:
            omega = [Fraction(k + b, 2 * k), Fraction(1, k)]
        else:
            omega = [Fraction(b, k), Fraction(2, k)]
        basis = [[Fraction(1), Fraction(0)], omega]
        sqrt_d = [Fraction(b, k), Fraction(2, k)]
    else:
        basis = _maximal_order(f)
    K = NumberField(f, basis, caps)
    if sqrt_d is not None:
        K.sqrt_d = K.from_power(sqrt_d)
        K.d_squarefree = sq
        expect = sq if sq % 4 == 1 else 4 * sq
        if K.disc != expect:
            raise ArithmeticError(f"closed-form discriminant {expect} != trace-form determinant {K.disc}")
    K.automorphisms = _make_automorphisms(K)
    return K


def _irreducible_q(f: Sequence[int]) -> bool:
    """Irreducibility over Q for degree <= 4: no rational root, no quadratic split.

    A split of a quartic into quadratics is found by a bounded search on the
    constant terms (divisors of f(0)) and the linear coefficient equations.
    """
    n = len(f) - 1
    c0 = f[0]
    # rational roots of a monic integer polynomial are integer divisors of c0
    if c0 == 0:
        return False
    for r in _divisors(abs(c0)):
        for s in (r, -r):
            if sum(c * s**i for i, c in enumerate(f)) == 0:
                return False
    if n < 4:
        return True
    # x^4 + a3 x^3 + a2 x^2 + a1 x + a0 = (x^2 + b x + c)(x^2 + d x + e)
    a0, a1, a2, a3 = f[0], f[1], f[2], f[3]
    for c in _divisors(abs(a0)):
        for c_ in (c, -c):
            e = a0 // c_
            # b + d = a3, c + e + b d = a2, b e + c d = a1
            # => b (e - c) = a1 - c a3  (d = a3 - b)
            if e != c_:
                num = a1 - c_ * a3
                if num % (e - c_):
                    continue
                bs = [num // (e - c_)]
            else:
                # b d = a2 - 2c, b + d = a3: b a root of t^2 - a3 t + (a2 - 2c)
                disc = a3 * a3 - 4 * (a2 - 2 * c_)
                if disc < 0 or isqrt(disc) ** 2 != disc or (a3 + isqrt(disc)) % 2:
                    continue
                bs = [(a3 + isqrt(disc)) // 2, (a3 - isqrt(disc)) // 2]
            for b in bs:
                d = a3 - b
                if c_ + e + b * d == a2 and b * e + c_ * d == a1:
                    return False
    return True


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- ideals ------------------------------------------------------------------

@dataclass(frozen=True)
class NfIdeal:
    """The fractional ideal (1/den) * (Z-span of the Hermite rows)."""

    K: NumberField = field(repr=False, compare=False, hash=False)
    rows: tuple[tuple[int, ...], ...]
    den: int = 1

    @classmethod
    def from_zspan(cls, K: NumberField, vectors: Iterable[Sequence]) -> "NfIdeal":
        vecs = [[Fraction(x) for x in v] for v in vectors]
        d = 1
        for v in vecs:
            for x in v:
                d = _lcm(d, x.denominator)
        ints = [[int(x * d) for x in v] for v in vecs]
        h = hnf(ints)
        if len(h) != K.degree:
            raise ValueError("generators do not span a full-rank module")
        g = d
        for r in h:
            for x in r:
                g = gcd(g, x)
        return cls(K, tuple(tuple(x // g for x in r) for r in h), d // g)

    @classmethod
    def generated_by(cls, K: NumberField, gens: Iterable) -> "NfIdeal":
        vecs = []
        n = K.degree
        for g in gens:
            g = K(g) if not isinstance(g, NfElem) else g
            for i in range(n):
                vecs.append(K._mul(g.coords, _unit(n, i)))
        return cls.from_zspan(K, vecs)

    @classmethod
    def unit(cls, K: NumberField) -> "NfIdeal":
        return cls.generated_by(K, [1])

    def basis_elems(self) -> list[NfElem]:
        return [NfElem(self.K, tuple(Fraction(x, self.den) for x in r)) for r in self.rows]

    def __mul__(self, other: "NfIdeal") -> "NfIdeal":
        vecs = []
        for a in self.basis_elems():
            for b in other.basis_elems():
                vecs.append(self.K._mul(a.coords, b.coords))
        return NfIdeal.from_zspan(self.K, vecs)

    def __pow__(self, e: int) -> "NfIdeal":
        if e < 0:
            return self.inverse() ** (-e)
        out = NfIdeal.unit(self.K)
        b = self
        while e:
            if e & 1:
                out = out * b
            b = b * b
            e >>= 1
        return out

    def scale(self, c) -> "NfIdeal":
        c = self.K(c) if not isinstance(c, NfElem) else c
        return NfIdeal.from_zspan(self.K, [self.K._mul(b.coords, c.coords) for b in self.basis_elems()])

    def norm(self) -> Fraction:
        return Fraction(abs(det([list(r) for r in self.rows])), self.den ** self.K.degree)

    def is_integral(self) -> bool:
        return self.den == 1

    def contains(self, x) -> bool:
        x = self.K(x) if not isinstance(x, NfElem) else x
        v = [c * self.den for c in x.coords]
        return _in_span([[Fraction(c) for c in r] for r in self.rows], v)

    def __le__(self, other: "NfIdeal") -> bool:
        return all(other.contains(b) for b in self.basis_elems())

    def apply(self, sigma: Automorphism) -> "NfIdeal":
        return NfIdeal.from_zspan(self.K, [sigma(b).coords for b in self.basis_elems()])

    def inverse(self) -> "NfIdeal":
        """(1/N(I)) * prod over nontrivial automorphisms of sigma(I); needs K Galois."""
        out = NfIdeal.unit(self.K)
        for s in self.K.automorphisms[1:]:
            out = out * self.apply(s)
        return out.scale(1 / self.norm())

    def to_json(self) -> dict:
        return {"hnf": [list(r) for r in self.rows], "den": self.den, "norm": str(self.norm())}

    def __str__(self) -> str:
        gens = ", ".join(str(b) for b in self.basis_elems())
        return f"<{gens}>"


@dataclass(frozen=True)
class PrimeIdeal:
    ideal: NfIdeal
    p: int
    e: int
    f: int

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "f": self.f, "ideal": self.ideal.to_json()}


def _kummer_dedekind(K: NumberField, theta: NfElem, q: int) -> list[PrimeIdeal]:
    g = charpoly(K.mul_matrix(theta.coords))
    g = [int(c) for c in g]
    out = []
    for h, e in fp_factor(tuple(c % q for c in g), q):
        val = K(0)
        for c in reversed(h):
            val = val * theta + c
        P = NfIdeal.generated_by(K, [q, val])
        out.append(PrimeIdeal(P, q, e, len(h) - 1))
    return out


def factor_rational_prime(K: NumberField, q: int) -> list[PrimeIdeal]:
    """Prime ideals over q from the factorization of f mod q."""
    if not is_prime(q):
        raise ContractError(f"{q} is not prime")
    if K.index % q == 0:
        raise ContractError(f"{q} divides the index [O_K : Z[zeta]] = {K.index}; pick another prime")
    return _kummer_dedekind(K, K.zeta, q)


def prime_decomposition(K: NumberField, q: int) -> list[PrimeIdeal]:
    """Like :func:`factor_rational_prime` but retries with small primitive elements."""
    if K.index % q:
        return factor_rational_prime(K, q)
    n = K.degree
    r = K.caps.primitive_box
    for c in product(range(-r, r + 1), repeat=n):
        theta = K.elem(c)
        g = charpoly(K.mul_matrix(theta.coords))
        if any(x.denominator != 1 for x in g):
            continue
        gi = [int(x) for x in g]
        d = poly_disc(gi)
        if d == 0:
            continue
        idx2 = d // K.disc
        if idx2 % q:
            return _kummer_dedekind(K, theta, q)
    raise CapExceeded(f"{q} divides the index of every primitive element tried")


def ideal_valuation(x, P: PrimeIdeal):
    """Exponent of P in x O_K (element) or in x (fractional ideal)."""
    K = P.ideal.K
    if isinstance(x, NfIdeal):
        I = x
    else:
        x = K(x) if not isinstance(x, NfElem) else x
        if x.is_zero():
            return INFINITE
        I = NfIdeal.generated_by(K, [x])
    num = NfIdeal.from_zspan(K, [[Fraction(c) for c in r] for r in I.rows])
    v = _int_valuation(num, P)
    if I.den != 1:
        v -= _int_valuation(NfIdeal.generated_by(K, [I.den]), P)
    return v


def _int_valuation(J: NfIdeal, P: PrimeIdeal) -> int:
    inv = P.ideal.inverse()
    v = 0
    while J <= P.ideal:
        J = J * inv
        v += 1
    return v


# -- principality -----------------------------------------------------------------

def _binary_form(b1: NfElem, b2: NfElem) -> tuple[int, int, int]:
    a = b1.norm()
    c = b2.norm()
    b = (b1 + b2).norm() - a - c
    assert a.denominator == b.denominator == c.denominator == 1
    return int(a), int(b), int(c)


def _imag_quadratic_generator(I: NfIdeal) -> NfElem | None:
    b1, b2 = I.basis_elems()
    a, b, c = _binary_form(b1, b2)
    N = int(I.norm())
    disc = 4 * a * c - b * b
    vmax = isqrt(4 * a * N // disc)
    for v in sorted(range(-vmax, vmax + 1), key=lambda t: (abs(t), t < 0)):
        dd = b * b * v * v - 4 * a * (c * v * v - N)
        if dd < 0:
            continue
        s = isqrt(dd)
        if s * s != dd:
            continue
        for num in sorted({-b * v + s, -b * v - s}):
            if num % (2 * a) == 0:
                u = num // (2 * a)
                return b1 * u + b2 * v
    return None


def fundamental_unit(K: NumberField) -> NfElem:
    """Fundamental unit > 1 of a real quadratic field.

    The continued fraction of sqrt(D) gives the fundamental unit of Z[sqrt D];
    when D = 1 mod 4 the unit of O_K may be its cube root (t + u sqrt D)/2.
    """
    if K.degree != 2 or K.d_squarefree is None or K.d_squarefree < 0:
        raise ContractError("fundamental units are only implemented for real quadratic fields")
    D = K.d_squarefree
    h, k = _pell(D)
    eps = K(h) + K.sqrt_d * k
    if D % 4 == 1:
        for t in _cube_root_candidates(2 * h):
            for s in (1, -1):
                if t**3 - 3 * s * t != 2 * h:
                    continue
                u2, r = divmod(t * t - 4 * s, D)
                u = isqrt(u2) if u2 >= 0 else -1
                if r or u <= 0 or u * u != u2:
                    continue
                eta = (K(t) + K.sqrt_d * u) / 2
                if eta**3 == eps:
                    return eta
    return eps


def _pell(D: int) -> tuple[int, int]:
    a0 = isqrt(D)
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - D * k * k not in (1, -1):
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return h, k


def _cube_root_candidates(x: int) -> list[int]:
    r = _icbrt(x)
    return [t for t in range(max(r - 2, 1), r + 3)]


def _icbrt(x: int) -> int:
    lo, hi = 0, 1 << ((x.bit_length() + 2) // 3 + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**3 <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _real_quadratic_generator(I: NfIdeal) -> NfElem | None:
    """Decisive search: some generator has |alpha| in [sqrt N, eps sqrt N).

    Then |x| <= sqrt(N) (eps + 1)/2 and |y| <= sqrt(N) (eps + 1)/(2 sqrt D)
    for alpha = x + y sqrt(D), with x, y in (1/2)Z.
    """
    K = I.K
    D = K.d_squarefree
    N = int(I.norm())
    eps = fundamental_unit(K)
    # eps = a + b sqrt(D); bound sqrt(D) above by isqrt(D) + 1
    a, b = _sqrt_d_coords(K, eps)
    e_up = a + b * (isqrt(D) + 1) + 1
    y2_bound = N * e_up * e_up / (4 * D)
    jmax = isqrt(int(4 * y2_bound))
    for j in sorted(range(-jmax, jmax + 1), key=lambda t: (abs(t), t < 0)):
        y = Fraction(j, 2)
        for sgn in (1, -1):
            x2 = D * y * y + sgn * N
            if x2 < 0:
                continue
            xn, xd = x2.numerator, x2.denominator
            rn, rd = isqrt(xn), isqrt(xd)
            if rn * rn != xn or rd * rd != xd:
                continue
            x = Fraction(rn, rd)
            for xs in sorted({x, -x}):
                alpha = K(xs) + K.sqrt_d * y
                if alpha.is_integral() and I.contains(alpha):
                    return alpha
    return None


def _sqrt_d_coords(K: NumberField, x: NfElem) -> tuple[Fraction, Fraction]:
    """x = a + b sqrt(D)."""
    one = K.one().coords
    s = K.sqrt_d.coords
    sol = solve([[one[i], s[i]] for i in range(2)], list(x.coords))
    return sol[0], sol[1]


def _box_generator(I: NfIdeal) -> NfElem | None:
    N = I.norm()
    basis = I.basis_elems()
    n = len(basis)
    for radius in range(1, I.K.caps.principal_box + 1):
        for c in product(range(-radius, radius + 1), repeat=n):
            if max(abs(x) for x in c) != radius:
                continue
            x = sum((b * ci for b, ci in zip(basis, c)), I.K(0))
            if abs(x.norm()) == N:
                return x
    raise CapExceeded(f"no generator found with coefficients up to {I.K.caps.principal_box}; undecided")


def principal_generator(I: NfIdeal) -> NfElem | None:
    """A generator of the integral ideal I, or None when I is provably not principal.

    Raises :class:`CapExceeded` if a bounded search ends undecided (fields of
    degree > 2 only).
    """
    if not I.is_integral():
        raise ContractError("principal_generator expects an integral ideal")
    K = I.K
    if K.degree == 2:
        if K.d_squarefree < 0:
            alpha = _imag_quadratic_generator(I)
        else:
            alpha = _real_quadratic_generator(I)
    else:
        alpha = _box_generator(I)
    if alpha is not None and NfIdeal.generated_by(K, [alpha]) != I:
        raise ArithmeticError("generator candidate does not generate the ideal")
    return alpha


def is_principal(I: NfIdeal) -> bool:
    return principal_generator(I) is not None


# -- class group -------------------------------------------------------------------

def minkowski_bound(K: NumberField) -> int:
    """An integer >= (4/pi)^r2 n!/n^n sqrt|d_K|, using pi > 157/50."""
    n = K.degree
    _, r2 = K.signature
    c = Fraction(200, 157) ** r2 * Fraction(factorial(n), n**n)
    sq = c * c * abs(K.disc)
    b = isqrt(sq.numerator // sq.denominator)
    while b * b < sq:
        b += 1
    return b


@dataclass(frozen=True)
class ClassGroup:
    order: int
    bound: int
    generators: tuple[PrimeIdeal, ...]
    representatives: tuple[NfIdeal, ...]

    def to_json(self) -> dict:
        return {
            "class_number": self.order,
            "minkowski_bound": self.bound,
            "generators": [g.to_json() for g in self.generators],
            "representatives": [r.to_json() for r in self.representatives],
        }


def class_group(K: NumberField) -> ClassGroup:
    """Enumerate the classes generated by the primes of norm up to the Minkowski bound."""
    bound = minkowski_bound(K)
    if K.degree > 2 and bound > K.caps.minkowski:
        raise CapExceeded(f"Minkowski bound {bound} exceeds the cap {K.caps.minkowski}")
    gens = []
    for ell in range(2, bound + 1):
        if not is_prime(ell):
            continue
        for P in prime_decomposition(K, ell):
            if ell**P.f <= bound:
                gens.append(P)
    reps = [NfIdeal.unit(K)]
    # conj[i] = I_i^{-1} scaled to an integral ideal
    conj = [NfIdeal.unit(K)]
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for P in gens:
                X = reps[i] * P.ideal
                for R in conj:
                    if is_principal(X * R):
                        break
                else:
                    reps.append(X)
                    conj.append(_integral_inverse(X))
                    nxt.append(len(reps) - 1)
        frontier = nxt
    return ClassGroup(len(reps), bound, tuple(gens), tuple(reps))


def _integral_inverse(I: NfIdeal) -> NfIdeal:
    """prod over nontrivial automorphisms of sigma(I), which is N(I) * I^{-1}."""
    out = NfIdeal.unit(I.K)
    for s in I.K.automorphisms[1:]:
        out = out * I.apply(s)
    return out


def class_number(K: NumberField) -> int:
    return class_group(K).order


def field_from_disc(d: int, caps: Caps = DEFAULT_CAPS) -> NumberField:
    return nf_make(quadratic_poly(d), caps)


def galois_orbit(I: NfIdeal) -> list[NfIdeal]:
    return [I.apply(s) for s in I.K.automorphisms]


def ideal_product(ideals: Iterable[NfIdeal], K: NumberField) -> NfIdeal:
    out = NfIdeal.unit(K)
    for I in ideals:
        out = out * I
    return out


__all__ = [
    "Automorphism",
    "ClassGroup",
    "NfElem",
    "NfIdeal",
    "NumberField",
    "PrimeIdeal",
    "charpoly",
    "class_group",
    "class_number",
    "factor_rational_prime",
    "field_from_disc",
    "fundamental_unit",
    "galois_orbit",
    "ideal_product",
    "ideal_valuation",
    "is_principal",
    "minkowski_bound",
    "nf_make",
    "poly_disc",
    "prime_decomposition",
    "principal_generator",
    "quadratic_poly",
]
