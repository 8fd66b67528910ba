"""Monotone decompositions and the conjugate-witness certificate for λ(π)."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..core.exceptions import ValidationError
from ..core.logger import get_logger
from ..tableaux import Partition, Permutation, conjugate

logger = get_logger(__name__)


class Direction(Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


@dataclass(frozen=True)
class Decomposition:
    """Disjoint subsequences of π given by 1-based positions, each sorted by position."""
    pieces: Tuple[Tuple[int, ...], ...]
    direction: Direction

    @classmethod
    def from_positions(cls, pieces: Iterable[Iterable[int]], direction: Direction) -> "Decomposition":
        return cls(tuple(tuple(sorted(p)) for p in pieces if p), direction)

    @classmethod
    def from_values(cls, pi: Permutation, pieces: Iterable[Iterable[int]], direction: Direction) -> "Decomposition":
        """Build from value lists, the way decompositions are usually written down."""
        pos = pi.positions()
        position_pieces = []
        for piece in pieces:
            piece = list(piece)
            if any(not 1 <= v <= pi.n for v in piece):
                raise ValidationError(f"value outside 1..{pi.n}", invariant="cover", value=piece)
            position_pieces.append([pos[v] for v in piece])
        return cls.from_positions(position_pieces, direction)

    @property
    def sizes(self) -> Partition:
        return Partition.of(sorted((len(p) for p in self.pieces), reverse=True))

    def values(self, pi: Permutation) -> List[List[int]]:
        return [[pi[p] for p in piece] for piece in self.pieces]

    def to_dict(self) -> Dict:
        return {
            "direction": self.direction.value,
            "pieces": [list(p) for p in self.pieces],
            "sizes": self.sizes.to_list(),
        }


def _check_cover(pi: Permutation, dec: Decomposition) -> None:
    seen = sorted(p for piece in dec.pieces for p in piece)
    if seen != list(range(1, pi.n + 1)):
        raise ValidationError(
            f"{dec.direction.value} pieces do not partition positions 1..{pi.n}",
            invariant="cover",
        )


def _monotone(values: Sequence[int], direction: Direction) -> bool:
    pairs = zip(values, values[1:])
    if direction is Direction.INCREASING:
        return all(a < b for a, b in pairs)
    return all(a > b for a, b in pairs)


@dataclass
class WitnessVerdict:
    certified: bool
    shape: Optional[Partition] = None
    reasons: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "certified": self.certified,
            "shape": self.shape.to_list() if self.shape else None,
            "reasons": self.reasons,
        }


def verify_witness(pi: Permutation, inc: Decomposition, dec: Decomposition) -> WitnessVerdict:
    """
    Certify λ(π) from an increasing and a decreasing decomposition.

    If the increasing piece sizes λ and the decreasing piece sizes λ' are
    conjugate, then λ(π) = λ.

    Raises:
        ValidationError: a decomposition does not partition the positions
    """
    if inc.direction is not Direction.INCREASING or dec.direction is not Direction.DECREASING:
        raise ValidationError("expected one increasing and one decreasing decomposition", invariant="direction")
    _check_cover(pi, inc)
    _check_cover(pi, dec)

    reasons = []
    for dcmp in (inc, dec):
        for idx, values in enumerate(dcmp.values(pi), start=1):
            if not _monotone(values, dcmp.direction):
                reasons.append(f"{dcmp.direction.value} piece {idx} is not monotone: {values}")
    lam, lam_dual = inc.sizes, dec.sizes
    if conjugate(lam) != lam_dual:
        reasons.append(f"sizes {lam} and {lam_dual} are not conjugate")

    verdict = WitnessVerdict(certified=not reasons, shape=lam if not reasons else None, reasons=reasons)
    if reasons:
        logger.debug(f"witness rejected: {reasons}")
    return verdict
