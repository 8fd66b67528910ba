"""Permutations in one-line notation (1-based values and positions)."""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from ..core.exceptions import SizeMismatchError, ValidationError


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n}; ``values[i-1]`` is π_i."""
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n == 0:
            raise ValidationError("permutation must be non-empty", invariant="positive-size")
        if sorted(values) != list(range(1, n + 1)):
            raise ValidationError(
                f"not a permutation of 1..{n}: {list(values)}", invariant="bijection", value=list(values)
            )

    @classmethod
    def of(cls, values: Iterable[int]) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse whitespace-separated integers ("3 1 2")."""
        try:
            values = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError:
            raise ValidationError(f"not a list of integers: {text!r}", invariant="integer-values")
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        """π_i for 1-based position i."""
        return self.values[i - 1]

    def __iter__(self):
        return iter(self.values)

    def positions(self) -> List[int]:
        """pos[v] = position of value v (index 0 unused)."""
        pos = [0] * (self.n + 1)
        for i, v in enumerate(self.values, start=1):
            pos[v] = i
        return pos

    def to_list(self) -> List[int]:
        return list(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


def require_same_size(pi: Permutation, tau: Permutation) -> None:
    if pi.n != tau.n:
        raise SizeMismatchError(f"sizes differ: {pi.n} vs {tau.n}", invariant="same-size")


def reverse(pi: Permutation) -> Permutation:
    """π^R: the one-line notation read backwards."""
    return Permutation(pi.values[::-1])


def inverse(pi: Permutation) -> Permutation:
    """Group inverse π⁻¹."""
    return Permutation(tuple(pi.positions()[1:]))


def complement(pi: Permutation) -> Permutation:
    """Value complement π_i ↦ n+1−π_i."""
    n = pi.n
    return Permutation(tuple(n + 1 - v for v in pi.values))


def compose(sigma: Permutation, rho: Permutation) -> Permutation:
    """σ∘ρ, i.e. i ↦ σ(ρ(i))."""
    require_same_size(sigma, rho)
    return Permutation(tuple(sigma.values[v - 1] for v in rho.values))
