"""Exhaustive and randomized searches for pairs with large Δ, and verification suites."""

from .results import SearchResult, SweepReport, SweepTrial, Witness, envelope
from .symmetry import canonicalize_pair, is_orbit_least, orbit
from .exhaustive import EXHAUSTIVE_MAX_N, estimate_pairs, exhaustive_t1, shape_table
from .walks import (
    general_transposition_sweep,
    random_walk_sweep,
    transposition_distance,
    trial_rng,
    walk_triangle_check,
)
from .verify import CheckResult, SimulationVerdict, SUITES, run_suite, verify_paper_example

__all__ = [
    "SearchResult",
    "SweepReport",
    "SweepTrial",
    "Witness",
    "envelope",
    "canonicalize_pair",
    "is_orbit_least",
    "orbit",
    "EXHAUSTIVE_MAX_N",
    "estimate_pairs",
    "exhaustive_t1",
    "shape_table",
    "general_transposition_sweep",
    "random_walk_sweep",
    "transposition_distance",
    "trial_rng",
    "walk_triangle_check",
    "CheckResult",
    "SimulationVerdict",
    "SUITES",
    "run_suite",
    "verify_paper_example",
]
