"""Extremal permutation pairs and their monotone-decomposition certificates."""

from .single import (
    T1Construction,
    ConstructionDecompositions,
    build_t1,
    construct_t1,
    expected_shapes,
    construction_decompositions,
    core_size,
    largest_odd_k,
    values_of,
)
from .general import (
    GeneralConstruction,
    build_general,
    block_parameter,
    construct_general_t,
    exact_lower_bound,
    relaxed_lower_bound,
)

__all__ = [
    "T1Construction",
    "ConstructionDecompositions",
    "build_t1",
    "construct_t1",
    "expected_shapes",
    "construction_decompositions",
    "core_size",
    "largest_odd_k",
    "values_of",
    "GeneralConstruction",
    "build_general",
    "block_parameter",
    "construct_general_t",
    "exact_lower_bound",
    "relaxed_lower_bound",
]
