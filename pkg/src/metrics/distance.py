"""Adjacent-transposition (Kendall tau) distance on either side."""

from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from ..core.exceptions import DomainError, ValidationError
from ..tableaux import Permutation, compose, inverse, shape
from ..tableaux.permutation import require_same_size
from .diagrams import delta


class Side(Enum):
    """Which side an adjacent transposition multiplies on."""
    LEFT = "left"    # swap values i and i+1
    RIGHT = "right"  # swap positions i and i+1

    @classmethod
    def of(cls, side: Union["Side", str]) -> "Side":
        if isinstance(side, Side):
            return side
        try:
            return cls(str(side).lower())
        except ValueError:
            raise ValidationError(f"side must be 'left' or 'right', got {side!r}", invariant="side")


def _merge_count(values: List[int]) -> Tuple[List[int], int]:
    if len(values) <= 1:
        return values, 0
    mid = len(values) // 2
    left, a = _merge_count(values[:mid])
    right, b = _merge_count(values[mid:])
    merged, count = [], a + b
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            count += len(left) - i
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, count


def inversions(values: Sequence[int]) -> int:
    """Number of pairs i < j with values[i] > values[j] (merge sort count)."""
    return _merge_count(list(values))[1]


def inversions_naive(values: Sequence[int]) -> int:
    """O(n²) oracle for ``inversions``."""
    n = len(values)
    return sum(1 for i in range(n) for j in range(i + 1, n) if values[i] > values[j])


def adjacent_distance(pi: Permutation, tau: Permutation, side: Union[Side, str] = Side.LEFT) -> int:
    """
    Least number of adjacent transpositions turning π into τ.

    Left: inversions of τ∘π⁻¹. Right: inversions of π⁻¹∘τ.
    """
    require_same_size(pi, tau)
    if Side.of(side) is Side.LEFT:
        quotient = compose(tau, inverse(pi))
    else:
        quotient = compose(inverse(pi), tau)
    return inversions(quotient.values)


def _check_index(pi: Permutation, i: int) -> None:
    if not 1 <= i <= pi.n - 1:
        raise DomainError(f"adjacent index {i} outside 1..{pi.n - 1}")


def apply_adjacent(pi: Permutation, i: int, side: Union[Side, str] = Side.LEFT) -> Permutation:
    """(i,i+1)∘π on the left (swap values i, i+1) or π∘(i,i+1) on the right (swap positions)."""
    _check_index(pi, i)
    return apply_transposition(pi, i, i + 1, side)


def apply_transposition(pi: Permutation, i: int, j: int, side: Union[Side, str] = Side.LEFT) -> Permutation:
    """Arbitrary transposition (i j): values on the left, positions on the right."""
    if not (1 <= i <= pi.n and 1 <= j <= pi.n) or i == j:
        raise DomainError(f"transposition ({i} {j}) invalid for n={pi.n}")
    values = list(pi.values)
    if Side.of(side) is Side.LEFT:
        values = [j if v == i else i if v == j else v for v in values]
    else:
        values[i - 1], values[j - 1] = values[j - 1], values[i - 1]
    return Permutation(tuple(values))


def swap_direction(pi: Permutation, i: int, side: Union[Side, str] = Side.LEFT) -> str:
    """
    "s" if applying swap i puts the relevant pair into decreasing order,
    "r" if it puts it into increasing order.
    """
    _check_index(pi, i)
    if Side.of(side) is Side.LEFT:
        pos = pi.positions()
        increasing_now = pos[i] < pos[i + 1]
    else:
        increasing_now = pi[i] < pi[i + 1]
    return "s" if increasing_now else "r"


def lipschitz_ratio(pi: Permutation, tau: Permutation, side: Union[Side, str] = Side.LEFT) -> Fraction:
    """Δ(λ(π), λ(τ)) / d(π, τ) as an exact rational."""
    d = adjacent_distance(pi, tau, side)
    if d == 0:
        raise DomainError("π = τ: ratio undefined at distance 0")
    return Fraction(delta(shape(pi), shape(tau)), d)
