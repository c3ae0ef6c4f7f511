"""Search caps and the two failure kinds the CLI distinguishes."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    # coefficient radius for generator searches over an ideal's Hermite basis
    principal_box: int = 6
    # p-adic precision (bits) for recovering the roots of f inside K
    root_precision: int = 4096
    # Minkowski bound allowed for class groups of fields of degree > 2
    minkowski: int = 50
    prime_search: int = 10**6
    group_order: int = 10_000
    # largest |coefficient| tried when looking for an alternative primitive element
    primitive_box: int = 2


DEFAULT_CAPS = Caps()


class CapExceeded(RuntimeError):
    """A bounded search ended without a decision."""


class ContractError(ValueError):
    """Input outside the documented preconditions."""
