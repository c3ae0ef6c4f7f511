"""Rays on the character sphere, tameness degrees and positive-cone witnesses.

A character of a free abelian group of rank n is an integer row vector; its
class is the ray it spans, so characters are stored primitive. Two rays are
equal only if their coordinates are equal: ``[chi]`` and ``[-chi]`` differ.

All decisions are exact. A finite set of rays is m-tame when no subset of at
most m of them has a strictly positive combination equal to zero. Repeated
classes need no special treatment since a class absorbs positive scaling.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exactlp import separating_functional
from .intmat import content, nullspace, primitive, rank, solve, transpose


class Degree(enum.Enum):
    INFINITE = "infinite"

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = Degree.INFINITE


@dataclass(frozen=True, order=True)
class Ray:
    coords: tuple[int, ...]

    def __post_init__(self):
        if not any(self.coords):
            raise ValueError("the zero character has no class")
        if content(self.coords) != 1:
            raise ValueError(f"{self.coords} is not primitive; use ray_canonicalize")

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def ray_canonicalize(v: Iterable) -> Ray:
    """Primitive integer representative of the positive ray through ``v``."""
    v = list(v)
    if not any(v):
        raise ValueError("the zero vector does not define a ray")
    return Ray(tuple(primitive(v)))


@dataclass(frozen=True)
class SigmaSet:
    rank: int
    rays: tuple[Ray, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        rays = tuple(sorted(set(self.rays)))
        for r in rays:
            if r.rank != self.rank:
                raise ValueError(f"ray {r} does not have rank {self.rank}")
        object.__setattr__(self, "rays", rays)

    @classmethod
    def from_vectors(cls, rank: int, vectors: Iterable[Iterable[int]]) -> "SigmaSet":
        return cls(rank, tuple(ray_canonicalize(v) for v in vectors))

    def __len__(self) -> int:
        return len(self.rays)

    def __iter__(self):
        return iter(self.rays)

    def __contains__(self, ray) -> bool:
        return ray in self.rays

    def to_json(self) -> dict:
        return {"rank": self.rank, "rays": [list(r.coords) for r in self.rays]}

    @classmethod
    def from_json(cls, data: dict) -> "SigmaSet":
        try:
            rank_ = data["rank"]
            rays = data["rays"]
        except (KeyError, TypeError) as exc:
            raise ValueError("sigma set JSON needs 'rank' and 'rays'") from exc
        if not isinstance(rank_, int) or isinstance(rank_, bool):
            raise ValueError("'rank' must be an integer")
        vecs = []
        for v in rays:
            if not isinstance(v, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in v):
                raise ValueError(f"ray {v!r} is not a list of integers")
            if len(v) != rank_:
                raise ValueError(f"ray {v!r} does not have length {rank_}")
            vecs.append(v)
        return cls.from_vectors(rank_, vecs)

    @classmethod
    def load(cls, path) -> "SigmaSet":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


@dataclass(frozen=True)
class Witness:
    """Positive rational coefficients on distinct rays.

    With ``target`` unset the combination sums to zero; otherwise it sums to
    ``multiple * target`` with ``multiple > 0``.
    """

    terms: tuple[tuple[Ray, Fraction], ...]
    target: Ray | None = None
    multiple: Fraction = Fraction(0)

    @property
    def rays(self) -> tuple[Ray, ...]:
        return tuple(r for r, _ in self.terms)

    @property
    def size(self) -> int:
        return len(self.terms)

    def total(self) -> list[Fraction]:
        n = self.terms[0][0].rank
        out = [Fraction(0)] * n
        for r, c in self.terms:
            for i, x in enumerate(r.coords):
                out[i] += c * x
        return out

    def is_valid(self) -> bool:
        if not self.terms or any(c <= 0 for _, c in self.terms):
            return False
        if len(set(self.rays)) != len(self.terms):
            return False
        tot = self.total()
        if self.target is None:
            return all(x == 0 for x in tot)
        return self.multiple > 0 and tot == [self.multiple * x for x in self.target.coords]

    def to_json(self) -> dict:
        out = {"terms": [{"ray": list(r.coords), "coeff": str(c)} for r, c in self.terms]}
        if self.target is not None:
            out["target"] = list(self.target.coords)
            out["multiple"] = str(self.multiple)
        return out

    def __str__(self) -> str:
        lhs = " + ".join(f"{c}*{r}" for r, c in self.terms)
        if self.target is None:
            return f"{lhs} = 0"
        return f"{lhs} = {self.multiple}*{self.target}"


@dataclass(frozen=True)
class TameVerdict:
    degree: int | Degree
    witness: Witness | None = None

    def __post_init__(self):
        if self.degree is INFINITE:
            if self.witness is not None:
                raise ValueError("an infinite tame degree carries no witness")
        elif self.witness is None or self.witness.size != self.degree + 1:
            raise ValueError("a finite tame degree needs a witness of size degree + 1")

    def is_tame(self, m: int) -> bool:
        return self.degree is INFINITE or m <= self.degree

    def to_json(self) -> dict:
        return {
            "degree": "infinite" if self.degree is INFINITE else self.degree,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def _columns(rays: Sequence[Ray]) -> list[list[int]]:
    return transpose([list(r.coords) for r in rays])


def _circuit(rays: Sequence[Ray]) -> list[int] | None:
    """Positive integer kernel vector of a subset with one-dimensional kernel."""
    ker = nullspace(_columns(rays), ncols=len(rays))
    if len(ker) != 1:
        return None
    v = ker[0]
    if all(x > 0 for x in v):
        return primitive(v)
    if all(x < 0 for x in v):
        return primitive([-x for x in v])
    return None


def positive_combination_feasible(rays: Iterable[Ray], m: int) -> Witness | None:
    """Zero-sum witness on at most ``m`` distinct rays, or ``None``.

    Subsets are scanned by size, then lexicographically. The first feasible
    subset at the smallest feasible size is a minimal positive dependence,
    whose kernel is one-dimensional and spanned by a strictly positive vector,
    so exact elimination plus a sign check decides each candidate. A minimal
    dependence has at most rank + 1 members.
    """
    if m < 1:
        raise ValueError("size limit must be at least 1")
    rays = sorted(set(rays))
    if not rays:
        return None
    limit = min(m, len(rays), rays[0].rank + 1)
    for k in range(2, limit + 1):
        for sub in combinations(rays, k):
            lam = _circuit(sub)
            if lam is not None:
                return Witness(tuple((r, Fraction(c)) for r, c in zip(sub, lam)))
    return None


def tame_degree(s: SigmaSet) -> TameVerdict:
    """Largest m for which ``s`` is m-tame, with a witness one size up."""
    w = positive_combination_feasible(s.rays, len(s.rays))
    if w is None:
        return TameVerdict(INFINITE)
    return TameVerdict(w.size - 1, w)


def cone_membership(target: Ray, s: SigmaSet | Iterable[Ray], t: int) -> Witness | None:
    """Positive combination of at most ``t`` rays equal to a positive multiple of ``target``.

    By Caratheodory a smallest such combination uses linearly independent
    rays, so each candidate subset has at most one solution.
    """
    if t < 1:
        raise ValueError("size limit must be at least 1")
    rays = sorted(set(s.rays if isinstance(s, SigmaSet) else s))
    for k in range(1, min(t, len(rays), target.rank) + 1):
        for sub in combinations(rays, k):
            cols = _columns(sub)
            if rank(cols) < k:
                continue
            lam = solve(cols, list(target.coords))
            if lam is None or any(x <= 0 for x in lam):
                continue
            ints = primitive(lam)
            mult = Fraction(ints[0]) / lam[0]
            return Witness(tuple((r, Fraction(c)) for r, c in zip(sub, ints)), target, mult)
    return None


def sigma_restrict(s: SigmaSet, basis: Sequence[Sequence[int]]) -> SigmaSet:
    """Restrict every character to the sublattice spanned by ``basis``.

    ``basis`` lists the sublattice basis vectors (the columns of the basis
    matrix). Characters vanishing on the sublattice are dropped.
    """
    basis = [list(b) for b in basis]
    for b in basis:
        if len(b) != s.rank:
            raise ValueError("basis vectors must live in the ambient lattice")
    if rank(basis) != len(basis):
        raise ValueError("basis vectors are linearly dependent")
    vecs = []
    for r in s.rays:
        v = [sum(x * y for x, y in zip(r.coords, b)) for b in basis]
        if any(v):
            vecs.append(v)
    return SigmaSet.from_vectors(len(basis), vecs)


def open_halfspace(rays: Sequence[Ray]) -> list[int] | None:
    """Functional strictly positive on every ray, or ``None``."""
    return separating_functional([list(r.coords) for r in rays])


@dataclass(frozen=True)
class TameCertificate:
    """Cover of all m-subsets by open half-spaces.

    Each entry is a set of rays together with a functional that is strictly
    positive on all of them; every subset of ``size`` rays sits inside some
    entry, so no such subset positively combines to zero.
    """

    m: int
    size: int
    cover: tuple[tuple[tuple[Ray, ...], tuple[int, ...]], ...]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "subset_size": self.size,
            "cover": [{"rays": [list(r.coords) for r in rays], "functional": list(f)} for rays, f in self.cover],
        }


def tame_certificate(s: SigmaSet, m: int) -> TameCertificate | None:
    """Half-space cover proving m-tameness, or ``None`` if ``s`` is not m-tame.

    Greedy: the first uncovered subset is grown ray by ray while it stays in
    an open half-space.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    rays = list(s.rays)
    k = min(m, len(rays))
    cover: list[tuple[tuple[Ray, ...], tuple[int, ...]]] = []
    if k == 0:
        return TameCertificate(m, 0, ())
    for sub in combinations(rays, k):
        if any(set(sub) <= set(t) for t, _ in cover):
            continue
        f = open_halfspace(sub)
        if f is None:
            return None
        grown = list(sub)
        for r in rays:
            if r in grown:
                continue
            g = open_halfspace(grown + [r])
            if g is not None:
                grown.append(r)
                f = g
        cover.append((tuple(sorted(grown)), tuple(f)))
    return TameCertificate(m, k, tuple(cover))


def check_certificate(s: SigmaSet, cert: TameCertificate) -> bool:
    """Re-verify a certificate with plain integer arithmetic."""
    for rays, f in cert.cover:
        for r in rays:
            if r not in s or sum(a * b for a, b in zip(f, r.coords)) <= 0:
                return False
    k = min(cert.m, len(s.rays))
    if cert.size != k:
        return False
    for sub in combinations(s.rays, k):
        if not any(set(sub) <= set(rays) for rays, _ in cert.cover):
            return False
    return True
