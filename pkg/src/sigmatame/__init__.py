"""Exact computation of Sigma-invariant complements, tameness degrees and their witnesses."""

from .charsphere import INFINITE, Ray, SigmaSet, Witness, positive_combination_feasible, tame_degree
from .config import CapExceeded, Caps, ContractError

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "CapExceeded",
    "Caps",
    "ContractError",
    "Ray",
    "SigmaSet",
    "Witness",
    "positive_combination_feasible",
    "tame_degree",
]
