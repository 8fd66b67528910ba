"""Greene invariants: an RSK-free oracle for shapes, and witness certificates."""

from .flow import (
    max_union_increasing,
    GreeneProfile,
    greene_profile,
    greene_shape,
    decreasing_profile,
)
from .brute import brute_force_max_union, BRUTE_FORCE_MAX_N
from .witness import Decomposition, Direction, WitnessVerdict, verify_witness

__all__ = [
    "max_union_increasing",
    "GreeneProfile",
    "greene_profile",
    "greene_shape",
    "decreasing_profile",
    "brute_force_max_union",
    "BRUTE_FORCE_MAX_N",
    "Decomposition",
    "Direction",
    "WitnessVerdict",
    "verify_witness",
]
