"""Block decomposition of the symmetric difference of two diagrams."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from ..tableaux import Partition
from ..tableaux.partition import Cell


class BlockKind(Enum):
    """Which diagram owns the surplus cells of a block."""
    LAMBDA = "lambda"
    MU = "mu"


@dataclass(frozen=True)
class Block:
    """
    A maximal run of λ-pre-blocks (or μ-pre-blocks).

    ``rows`` is the 1-based inclusive row interval from the first to the last
    surplus row; rows with λ_i = μ_i inside it carry no cells. The box is the
    exact bounding box of the block's cells.
    """
    rows: Tuple[int, int]
    kind: BlockKind
    cells: Tuple[Cell, ...]
    pre_blocks: int = 1

    @property
    def area(self) -> int:
        return len(self.cells)

    @property
    def box_height(self) -> int:
        return max(i for i, _ in self.cells) - min(i for i, _ in self.cells) + 1

    @property
    def box_width(self) -> int:
        return max(j for _, j in self.cells) - min(j for _, j in self.cells) + 1

    def to_dict(self) -> Dict:
        return {
            "rows": list(self.rows),
            "kind": self.kind.value,
            "area": self.area,
            "box": [self.box_height, self.box_width],
            "pre_blocks": self.pre_blocks,
        }


def decompose_blocks(lam: Partition, mu: Partition) -> List[Block]:
    """
    Split the symmetric difference into alternating λ-/μ-blocks.

    A maximal interval of λ-rows (λ_i > μ_i) is a λ-pre-block; consecutive
    λ-pre-blocks separated only by equal rows form one λ-block. Dually for μ.
    """
    rows = max(len(lam), len(mu))
    blocks: List[Block] = []
    kind = None
    start = end = 0
    cells: List[Cell] = []
    pre_blocks = 0
    prev_row_kind = None

    def close():
        if kind is not None:
            blocks.append(Block(rows=(start, end), kind=kind, cells=tuple(cells), pre_blocks=pre_blocks))

    for i in range(rows):
        diff = lam[i] - mu[i]
        if diff == 0:
            prev_row_kind = None
            continue
        row_kind = BlockKind.LAMBDA if diff > 0 else BlockKind.MU
        lo, hi = min(lam[i], mu[i]), max(lam[i], mu[i])
        row_cells = [(i + 1, j + 1) for j in range(lo, hi)]
        if row_kind is kind:
            if prev_row_kind is None:
                pre_blocks += 1
            cells.extend(row_cells)
            end = i + 1
        else:
            close()
            kind, start, end = row_kind, i + 1, i + 1
            cells = list(row_cells)
            pre_blocks = 1
        prev_row_kind = row_kind

    close()
    return blocks
