"""Exact structure constants for combinatorial Hopf algebras on endofunctions,
permutations, cycles and parking functions, with brute-force polynomial oracles."""

from .element import Element, Tensor2, tensor
from .hopf import check_hopf_axioms, get_algebra, registered
from .scalar import Q, QPoly

__all__ = [
    "Element",
    "Tensor2",
    "tensor",
    "QPoly",
    "Q",
    "get_algebra",
    "registered",
    "check_hopf_axioms",
]

__version__ = "0.1.0"
