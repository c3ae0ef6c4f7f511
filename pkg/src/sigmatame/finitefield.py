"""Prime fields, the finite field F_{p^m} and polynomials over it.

Rationals are plain :class:`fractions.Fraction`; ``BigRat`` is an alias kept
for readability at call sites that carry character values.

Polynomials over F_p are tuples of ints in ascending degree with no trailing
zeros. Field elements keep their residue representative as a length-m tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

BigRat = Fraction

DESK_LIMIT = 3**6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_from(start: int) -> Iterator[int]:
    n = max(start, 2)
    while True:
        if is_prime(n):
            yield n
        n += 1


def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


# -- polynomials over F_p ---------------------------------------------------

def fp_add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def fp_sub(a, b, p):
    return fp_add(a, [(-x) % p for x in b], p)


def fp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] = (a[i + shift] - c * y) % p
        a = list(_trim(a))
    return _trim(q), _trim(a)


def fp_mod(a, b, p):
    return fp_divmod(a, b, p)[1]


def fp_eval(a, x, p):
    out = 0
    for c in reversed(a):
        out = (out * x + c) % p
    return out


def fp_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, fp_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple(x * inv % p for x in a)
    return a


def fp_powmod(base, e, mod, p):
    out: tuple[int, ...] = (1,)
    base = fp_mod(base, mod, p)
    while e:
        if e & 1:
            out = fp_mod(fp_mul(out, base, p), mod, p)
        base = fp_mod(fp_mul(base, base, p), mod, p)
        e >>= 1
    return out


def monic_polys(p: int, deg: int) -> Iterator[tuple[int, ...]]:
    """Monic polynomials of degree ``deg`` over F_p in numeric order.

    The order is that of the integer ``sum c_i p^i``, i.e. lexicographic on
    ``(c_{deg-1}, ..., c_0)``: x^2, x^2+1, x^2+2, x^2+x, ...
    """
    for idx in range(p**deg):
        coeffs = []
        for _ in range(deg):
            coeffs.append(idx % p)
            idx //= p
        yield tuple(coeffs) + (1,)


def fp_is_irreducible(f, p: int) -> bool:
    """Root scan plus trial division by every monic of degree <= deg/2."""
    f = _trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if any(fp_eval(f, x, p) == 0 for x in range(p)):
        return False
    for k in range(2, d // 2 + 1):
        for g in monic_polys(p, k):
            if not fp_mod(f, g, p):
                return False
    return True


def fp_factor(f, p: int) -> list[tuple[tuple[int, ...], int]]:
    """Factor a monic polynomial of small degree over F_p by trial division.

    Returns ``(irreducible monic factor, multiplicity)`` pairs ordered by
    degree, then numerically. Desk-scale only.
    """
    f = _trim(f)
    if not f or f[-1] % p != 1:
        raise ValueError("fp_factor expects a monic polynomial")
    out = []
    k = 1
    while len(f) - 1 >= 2 * k:
        # factors of lower degree are already divided out, so any g that
        # divides here is irreducible
        for g in monic_polys(p, k):
            e = 0
            while True:
                q, r = fp_divmod(f, g, p)
                if r:
                    break
                f = q
                e += 1
            if e:
                out.append((g, e))
        k += 1
    if len(f) > 1:
        out.append((f, 1))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1]))
    # merge in case the leftover repeats an earlier factor
    merged: dict[tuple[int, ...], int] = {}
    for g, e in out:
        merged[g] = merged.get(g, 0) + e
    return sorted(merged.items(), key=lambda t: (len(t[0]), t[0][::-1]))


# -- F_{p^m} -----------------------------------------------------------------

@dataclass(frozen=True)
class FqField:
    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.m

    def __call__(self, coeffs) -> "FqElem":
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        c = [x % self.p for x in coeffs]
        c = list(fp_mod(tuple(c), self.modulus, self.p))
        return FqElem(self, tuple(c + [0] * (self.m - len(c))))

    def zero(self) -> "FqElem":
        return self(0)

    def one(self) -> "FqElem":
        return self(1)

    def gen(self) -> "FqElem":
        """Class of x, a root of the modulus."""
        return self((0, 1))

    def elements(self) -> Iterator["FqElem"]:
        """All elements in numeric order of ``sum c_i p^i``."""
        for idx in range(self.order):
            yield self.from_index(idx)

    def from_index(self, idx: int) -> "FqElem":
        c = []
        for _ in range(self.m):
            c.append(idx % self.p)
            idx //= self.p
        return FqElem(self, tuple(c))

    def __repr__(self) -> str:
        return f"F_{self.p}^{self.m}[{poly_str(self.modulus)}]"


@dataclass(frozen=True)
class FqElem:
    field: FqField = field(repr=False)
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> "FqElem":
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        return f(fp_mod(fp_mul(_trim(self.coeffs), _trim(other.coeffs), f.p), f.modulus, f.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "FqElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def index(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coeffs))

    def __lt__(self, other: "FqElem") -> bool:
        return self.index() < other.index()

    def __str__(self) -> str:
        return poly_str(_trim(self.coeffs), var="w")


def poly_str(c: Sequence, var: str = "x") -> str:
    c = list(c)
    if not any(c):
        return "0"
    terms = []
    for i in range(len(c) - 1, -1, -1):
        a = c[i]
        if not a:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(a))
        elif a == 1:
            terms.append(mono)
        else:
            terms.append(f"{a}*{mono}")
    return "+".join(terms)


def fq_make(p: int, m: int) -> FqField:
    """F_{p^m} with the numerically smallest monic irreducible modulus of degree m."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("degree must be at least 1")
    if p**m > DESK_LIMIT:
        raise ValueError(f"p^m = {p**m} exceeds the desk-scale limit {DESK_LIMIT}")
    for f in monic_polys(p, m):
        if fp_is_irreducible(f, p):
            return FqField(p, m, f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def frobenius(e: FqElem) -> FqElem:
    return e ** e.field.p


def trace(e: FqElem) -> FqElem:
    out = e.field.zero()
    x = e
    for _ in range(e.field.m):
        out = out + x
        x = frobenius(x)
    return out


def conjugates(e: FqElem) -> list[FqElem]:
    out = [e]
    for _ in range(e.field.m - 1):
        out.append(frobenius(out[-1]))
    return out


def fp_rank(vectors: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p."""
    rows = [list(v) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


# -- polynomials over F_q ----------------------------------------------------

@dataclass(frozen=True)
class FqPoly:
    """Polynomial over F_q, coefficients in ascending degree."""

    field: FqField = field(repr=False)
    coeffs: tuple[FqElem, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1].is_zero():
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x_plus(cls, c: FqElem) -> "FqPoly":
        return cls(c.field, (c, c.field.one()))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "FqPoly") -> "FqPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return FqPoly(self.field, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "FqPoly":
        return FqPoly(self.field, tuple(-x for x in self.coeffs))

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        return self + (-other)

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        if self.is_zero() or other.is_zero():
            return FqPoly(self.field, ())
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return FqPoly(self.field, tuple(out))

    def divmod(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        inv = other.coeffs[-1].inverse()
        q = [self.field.zero()] * max(len(a) - len(other.coeffs) + 1, 0)
        while len(a) >= len(other.coeffs) and a:
            shift = len(a) - len(other.coeffs)
            c = a[-1] * inv
            q[shift] = c
            for i, y in enumerate(other.coeffs):
                a[i + shift] = a[i + shift] - c * y
            while a and a[-1].is_zero():
                a.pop()
        return FqPoly(self.field, tuple(q)), FqPoly(self.field, tuple(a))

    def __call__(self, x: FqElem) -> FqElem:
        out = self.field.zero()
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def valuation_at(self, pi: "FqPoly") -> int:
        """Multiplicity of the irreducible ``pi`` in ``self``."""
        if self.is_zero():
            raise ValueError("valuation of the zero polynomial is infinite")
        v = 0
        f = self
        while True:
            q, r = f.divmod(pi)
            if not r.is_zero():
                return v
            f = q
            v += 1

    def degree_valuation(self) -> int:
        """Valuation at the place at infinity: minus the degree."""
        if self.is_zero():
            raise ValueError("valuation of the zero polynomial is infinite")
        return -self.degree

    def map_coeffs(self, fn) -> "FqPoly":
        return FqPoly(self.field, tuple(fn(c) for c in self.coeffs))

    def shift(self, a: FqElem) -> "FqPoly":
        """Substitute x -> x + a."""
        out = FqPoly(self.field, ())
        lin = FqPoly.x_plus(a)
        for c in reversed(self.coeffs):
            out = out * lin + FqPoly(self.field, (c,))
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("x1" if i == 1 else f"x1^{i}")
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)
