"""Exact constructions: fields, graphs, Hadamard matrices and permutation groups."""

from __future__ import annotations

from .field import FiniteField, make_field
from .graph import Graph
from .groups import PermutationGroup
from .hadamard import IncidenceDesign, SignMatrix
from .perm import Permutation

__all__ = [
    "FiniteField",
    "Graph",
    "IncidenceDesign",
    "Permutation",
    "PermutationGroup",
    "SignMatrix",
    "make_field",
]
