"""Partitions, standard Young tableaux and the RSK correspondence."""

from .partition import Partition, conjugate
from .permutation import Permutation, reverse, inverse, complement, compose
from .tableau import Tableau, TableauPair, TableauReport, row_insert, validate_tableau
from .rsk import rsk, inverse_rsk, shape, shape_of, longest_increasing_subsequence

__all__ = [
    "Partition",
    "conjugate",
    "Permutation",
    "reverse",
    "inverse",
    "complement",
    "compose",
    "Tableau",
    "TableauPair",
    "TableauReport",
    "row_insert",
    "validate_tableau",
    "rsk",
    "inverse_rsk",
    "shape",
    "shape_of",
    "longest_increasing_subsequence",
]
