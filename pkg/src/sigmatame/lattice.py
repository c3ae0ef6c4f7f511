"""Finite groups acting on Z^n: fixed sublattice, norm-kernel complement, orbits.

Group elements are integer matrices acting on column vectors. A character is
a row vector and ``h`` sends it to ``chi . h^{-1}``; over the whole group the
orbit is ``{chi . M : M in H}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .charsphere import Ray, ray_canonicalize
from .config import ContractError
from .intmat import det, hnf, identity, integer_kernel, matmul, matvec, rank

GROUP_ORDER_CAP = 10_000

IntMatrix = tuple[tuple[int, ...], ...]


class GroupTooLarge(ContractError):
    pass


def _freeze(m) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in m)


def perm_matrix(images: list[int]) -> IntMatrix:
    """Matrix sending e_i to e_{images[i]} (1-based images)."""
    n = len(images)
    if sorted(images) != list(range(1, n + 1)):
        raise ValueError(f"{images} is not a permutation of 1..{n}")
    m = [[0] * n for _ in range(n)]
    for i, j in enumerate(images):
        m[j - 1][i] = 1
    return _freeze(m)


def cycle_shift(n: int, k: int = 1) -> IntMatrix:
    """e_i -> e_{i+k mod n}."""
    return perm_matrix([((i + k) % n) + 1 for i in range(n)])


@dataclass(frozen=True)
class LatticeAction:
    rank: int
    generators: tuple[IntMatrix, ...]
    cap: int = GROUP_ORDER_CAP
    elements: tuple[IntMatrix, ...] = field(init=False, repr=False)

    def __post_init__(self):
        gens = tuple(_freeze(g) for g in self.generators)
        for g in gens:
            if len(g) != self.rank or any(len(r) != self.rank for r in g):
                raise ValueError(f"generator is not {self.rank}x{self.rank}")
            if abs(det(g)) != 1:
                raise ValueError("generator is not invertible over the integers")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "elements", _closure(self.rank, gens, self.cap))

    @property
    def order(self) -> int:
        return len(self.elements)

    @classmethod
    def from_json(cls, data: dict, cap: int = GROUP_ORDER_CAP) -> "LatticeAction":
        if not isinstance(data, dict) or "rank" not in data:
            raise ValueError("action JSON needs 'rank'")
        n = data["rank"]
        if not isinstance(n, int) or n < 1:
            raise ValueError("'rank' must be a positive integer")
        gens = [_freeze(g) for g in data.get("generators", [])]
        gens += [perm_matrix(list(p)) for p in data.get("perm_generators", [])]
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator does not have rank {n}")
        return cls(n, tuple(gens), cap)

    @classmethod
    def load(cls, path, cap: int = GROUP_ORDER_CAP) -> "LatticeAction":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh), cap)

    def to_json(self) -> dict:
        return {"rank": self.rank, "generators": [[list(r) for r in g] for g in self.generators]}


def _closure(n: int, gens: tuple[IntMatrix, ...], cap: int) -> tuple[IntMatrix, ...]:
    one = _freeze(identity(n))
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = _freeze(matmul(g, a))
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
                    if len(seen) > cap:
                        raise GroupTooLarge(f"group order exceeds the cap {cap}")
        frontier = nxt
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Decomposition:
    """Q0 (fixed) and Q1 (norm kernel) bases, listed as vectors."""

    q0: tuple[tuple[int, ...], ...]
    q1: tuple[tuple[int, ...], ...]
    index: int

    def to_json(self) -> dict:
        return {"Q0": [list(v) for v in self.q0], "Q1": [list(v) for v in self.q1], "index": self.index}


def fixed_sublattice(action: LatticeAction) -> tuple[tuple[int, ...], ...]:
    """Hermite basis of ``{v : M v = v for every generator M}``."""
    n = action.rank
    rows = []
    for g in action.generators:
        for i in range(n):
            rows.append([g[i][j] - int(i == j) for j in range(n)])
    return tuple(tuple(v) for v in integer_kernel(rows, ncols=n))


def norm_matrix(action: LatticeAction) -> list[list[int]]:
    """Sum of all group elements."""
    n = action.rank
    out = [[0] * n for _ in range(n)]
    for g in action.elements:
        for i in range(n):
            for j in range(n):
                out[i][j] += g[i][j]
    return out


class DecompositionError(ArithmeticError):
    pass


def trace_complement(action: LatticeAction, q0=None) -> Decomposition:
    """Take Q1 = ker(sum of group elements) and certify Q0 + Q1 has finite index."""
    if q0 is None:
        q0 = fixed_sublattice(action)
    n = action.rank
    nm = norm_matrix(action)
    q1 = tuple(tuple(v) for v in integer_kernel(nm, ncols=n))
    if len(q0) + len(q1) != n:
        raise DecompositionError(f"rank(Q0) + rank(Q1) = {len(q0)} + {len(q1)} != {n}")
    basis = [list(v) for v in q0] + [list(v) for v in q1]
    idx = abs(det(basis)) if basis else 1
    if idx == 0:
        raise DecompositionError("Q0 and Q1 intersect nontrivially")
    dec = Decomposition(tuple(q0), q1, idx)
    if not check_decomposition(action, dec):
        raise DecompositionError("decomposition failed re-verification")
    return dec


def check_decomposition(action: LatticeAction, dec: Decomposition) -> bool:
    for g in action.generators:
        for v in dec.q0:
            if tuple(matvec(g, v)) != tuple(v):
                return False
    nm = norm_matrix(action)
    for v in dec.q1:
        if any(matvec(nm, v)):
            return False
    basis = [list(v) for v in dec.q0] + [list(v) for v in dec.q1]
    if len(basis) != action.rank:
        return False
    return dec.index == abs(det(basis)) != 0


def is_pure(basis) -> bool:
    """True when Z^n / span(basis) is torsion free (unit elementary divisors)."""
    if not basis:
        return True
    # compare with the saturation: vectors killed by every functional killing the basis
    sat = integer_kernel(integer_kernel(basis), ncols=len(basis[0]))
    return hnf(sat) == hnf(basis)


def orbit_characters(action: LatticeAction, chi: Ray | tuple[int, ...]) -> frozenset[Ray]:
    coords = chi.coords if isinstance(chi, Ray) else tuple(chi)
    if len(coords) != action.rank:
        raise ValueError("character rank does not match the action")
    out = set()
    for g in action.elements:
        out.add(ray_canonicalize([sum(coords[i] * g[i][j] for i in range(action.rank)) for j in range(action.rank)]))
    return frozenset(out)


def permutation_orbits(action: LatticeAction) -> list[list[int]] | None:
    """Orbits on basis indices if every element is a permutation matrix."""
    n = action.rank
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in action.generators:
        for j in range(n):
            col = [g[i][j] for i in range(n)]
            if sorted(col) != [0] * (n - 1) + [1]:
                return None
            i = col.index(1)
            parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def subgroup_action(action: LatticeAction, gens) -> LatticeAction:
    return LatticeAction(action.rank, tuple(gens), action.cap)


def rank_of(basis) -> int:
    return rank([list(v) for v in basis]) if basis else 0

