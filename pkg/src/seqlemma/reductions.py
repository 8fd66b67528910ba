"""
From a diagram pair to a sequence pair.

Reduction 1 deletes rows and columns where the diagrams agree. Reduction 2
replaces each block by full rows of equal width inside its bounding box.
Reduction 3 flattens the top block to one row and the bottom block to one
column. The result is a staircase: block i sits to the right of every block
below it, so A(W) = Σ_{i<j} h_i·w_j.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..core.exceptions import DomainError
from ..core.logger import get_logger
from ..metrics import Block, BlockKind, anatomy, decompose_blocks
from ..tableaux import Partition, conjugate
from .sequences import SequencePair

logger = get_logger(__name__)


def _drop_equal_rows(lam: Partition, mu: Partition) -> Tuple[Partition, Partition]:
    rows = max(len(lam), len(mu))
    keep = [i for i in range(rows) if lam[i] != mu[i]]
    return Partition.of(lam[i] for i in keep), Partition.of(mu[i] for i in keep)


def reduction_one(lam: Partition, mu: Partition) -> Tuple[Partition, Partition]:
    """Delete equal rows and equal columns until none remain."""
    while True:
        lam2, mu2 = _drop_equal_rows(lam, mu)
        lam_c, mu_c = _drop_equal_rows(conjugate(lam2), conjugate(mu2))
        lam2, mu2 = conjugate(lam_c), conjugate(mu_c)
        if lam2 == lam and mu2 == mu:
            return lam, mu
        lam, mu = lam2, mu2


@dataclass
class BlockShape:
    """Height and width of a block in the rebuilt staircase."""
    kind: BlockKind
    area: int
    height: int
    width: int

    def to_dict(self) -> Dict:
        return {"kind": self.kind.value, "area": self.area, "height": self.height, "width": self.width}


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def reduction_two(blocks: List[Block]) -> List[BlockShape]:
    """Width min(box width, area), as many rows as needed, remainder in the last row."""
    shapes = []
    for block in blocks:
        width = min(block.box_width, block.area)
        shapes.append(BlockShape(block.kind, block.area, _ceil_div(block.area, width), width))
    return shapes


def reduction_three(shapes: List[BlockShape]) -> List[BlockShape]:
    """Top block becomes 1 × A, bottom block A × 1."""
    out = [BlockShape(s.kind, s.area, s.height, s.width) for s in shapes]
    out[0].height, out[0].width = 1, out[0].area
    out[-1].height, out[-1].width = out[-1].area, 1
    return out


def staircase(shapes: List[BlockShape]) -> Tuple[Partition, Partition]:
    """Rebuild λ, μ with block i right of all blocks below it."""
    lam_rows: List[int] = []
    mu_rows: List[int] = []
    offset = sum(s.width for s in shapes)
    for s in shapes:
        offset -= s.width
        remaining = s.area
        for _ in range(s.height):
            cells = min(s.width, remaining)
            remaining -= cells
            own, other = offset + cells, offset
            if s.kind is BlockKind.LAMBDA:
                lam_rows.append(own)
                mu_rows.append(other)
            else:
                lam_rows.append(other)
                mu_rows.append(own)
    return Partition.of(lam_rows), Partition.of(mu_rows)


def staircase_area(shapes: List[BlockShape]) -> int:
    """A(W) = Σ_{i<j} h_i·w_j."""
    total, below = 0, 0
    for s in reversed(shapes):
        total += s.height * below
        below += s.width
    return total


@dataclass
class ReductionTrace:
    """
    The three reductions applied to (λ, μ).

    ``area_w`` holds A(W) for the input and after each reduction;
    ``block_areas`` is unchanged by every step.
    """
    lam: Partition
    mu: Partition
    lam_reduced: Partition
    mu_reduced: Partition
    block_areas: List[int]
    area_w: List[int] = field(default_factory=list)
    shapes: List[BlockShape] = field(default_factory=list)
    sequences: Optional[SequencePair] = None

    @property
    def pair(self) -> Tuple[Partition, Partition]:
        return self.lam_reduced, self.mu_reduced

    def to_dict(self) -> Dict:
        return {
            "lambda": self.lam.to_list(),
            "mu": self.mu.to_list(),
            "lambda_reduced": self.lam_reduced.to_list(),
            "mu_reduced": self.mu_reduced.to_list(),
            "block_areas": self.block_areas,
            "area_w": self.area_w,
            "blocks": [s.to_dict() for s in self.shapes],
            "sequences": self.sequences.to_dict() if self.sequences else None,
        }


def reduce_pair(lam: Partition, mu: Partition, cap: Optional[int] = None) -> ReductionTrace:
    """
    Run Reductions 1–3 and read off a_i (heights) and b_i (widths).

    T is ``cap`` if given, otherwise max(3, max a_i·b_i).

    Raises:
        DomainError: λ = μ, or |λ| ≠ |μ|
    """
    if lam == mu:
        raise DomainError("nothing to reduce: the diagrams are equal")
    if lam.n != mu.n:
        raise DomainError(f"diagrams of different size: {lam.n} vs {mu.n}")

    lam1, mu1 = reduction_one(lam, mu)
    blocks = decompose_blocks(lam1, mu1)
    second = reduction_two(blocks)
    third = reduction_three(second)
    lam_r, mu_r = staircase(third)

    trace = ReductionTrace(
        lam=lam,
        mu=mu,
        lam_reduced=lam_r,
        mu_reduced=mu_r,
        block_areas=[b.area for b in blocks],
        area_w=[
            anatomy(lam, mu).intersection_area,
            anatomy(lam1, mu1).intersection_area,
            staircase_area(second),
            staircase_area(third),
        ],
        shapes=third,
    )
    heights = tuple(s.height for s in third)
    widths = tuple(s.width for s in third)
    T = cap if cap is not None else max(3, max(h * w for h, w in zip(heights, widths)))
    trace.sequences = SequencePair(a=heights, b=widths, T=T)
    logger.debug(f"reduced {lam} / {mu} to {lam_r} / {mu_r}, A(W) {trace.area_w}")
    return trace
