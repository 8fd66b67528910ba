"""Integer partitions and Young diagram helpers."""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from ..core.exceptions import ValidationError

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """
    Weakly decreasing positive parts (λ_1 ≥ λ_2 ≥ … > 0).

    The empty partition (of 0) is allowed. Missing parts read as 0, so
    ``lam[i]`` never raises for i past the last part.
    """
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValidationError(f"parts must be positive: {list(parts)}", invariant="positive-parts")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValidationError(f"parts not weakly decreasing: {list(parts)}", invariant="weakly-decreasing")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts, dropping trailing zeros."""
        return cls(tuple(p for p in parts if p != 0))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse whitespace-separated integers ("6 4 4 2 2")."""
        try:
            values = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError:
            raise ValidationError(f"not a list of integers: {text!r}", invariant="integer-parts")
        return cls.of(values)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """Part i (0-based); 0 past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def prefix_sums(self, length: int = None) -> List[int]:
        """Σ_{i≤j} λ_i for j = 1..length (default: number of parts)."""
        length = len(self.parts) if length is None else length
        sums, total = [], 0
        for i in range(length):
            total += self[i]
            sums.append(total)
        return sums

    def cells(self) -> List[Cell]:
        """All cells (i, j), 1-based, row by row."""
        return [(i + 1, j + 1) for i, p in enumerate(self.parts) for j in range(p)]

    def to_list(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def conjugate(lam: Partition) -> Partition:
    """Transpose of the diagram: λ'_j = #{i : λ_i ≥ j}."""
    if not lam.parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))
