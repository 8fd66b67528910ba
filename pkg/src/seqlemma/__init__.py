"""Sequence pairs, the N/Δ² bound, diagram reductions and the continuous optimum."""

from .sequences import (
    SequencePair,
    SequenceStats,
    BoundCheck,
    ExhaustiveLemmaReport,
    sequence_stats,
    lemma_bound,
    check_bound,
    tightness_ratio,
    tight_sequence,
    count_pairs,
    enumerate_pairs,
    minimize_ratio,
    check_lemma_exhaustive,
)
from .reductions import (
    BlockShape,
    ReductionTrace,
    reduce_pair,
    reduction_one,
    staircase,
    staircase_area,
)
from .optimum import (
    ContinuousOptimum,
    continuous_optimum,
    kkt_residuals,
    interior_products,
    perturb,
)

__all__ = [
    "SequencePair",
    "SequenceStats",
    "BoundCheck",
    "ExhaustiveLemmaReport",
    "sequence_stats",
    "lemma_bound",
    "check_bound",
    "tightness_ratio",
    "tight_sequence",
    "count_pairs",
    "enumerate_pairs",
    "minimize_ratio",
    "check_lemma_exhaustive",
    "BlockShape",
    "ReductionTrace",
    "reduce_pair",
    "reduction_one",
    "staircase",
    "staircase_area",
    "ContinuousOptimum",
    "continuous_optimum",
    "kkt_residuals",
    "interior_products",
    "perturb",
]
