"""Distances on permutations and diagrams, and block decompositions."""

from .diagrams import (
    delta,
    anatomy,
    DiagramPairAnatomy,
    check_prefix_inequalities,
    PrefixReport,
    prefix_deviation,
    row_column_exclusivity,
)
from .distance import (
    Side,
    inversions,
    inversions_naive,
    adjacent_distance,
    apply_adjacent,
    apply_transposition,
    swap_direction,
    lipschitz_ratio,
)
from .blocks import Block, BlockKind, decompose_blocks

__all__ = [
    "delta",
    "anatomy",
    "DiagramPairAnatomy",
    "check_prefix_inequalities",
    "PrefixReport",
    "prefix_deviation",
    "row_column_exclusivity",
    "Side",
    "inversions",
    "inversions_naive",
    "adjacent_distance",
    "apply_adjacent",
    "apply_transposition",
    "swap_direction",
    "lipschitz_ratio",
    "Block",
    "BlockKind",
    "decompose_blocks",
]
