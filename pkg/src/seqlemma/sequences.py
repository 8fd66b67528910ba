"""Integer sequence pairs (a_i, b_i) under a product cap T, and the √(32·N·T·ln T) bound."""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from ..core.exceptions import DomainError, ResourceRefusal
from ..core.logger import get_logger

logger = get_logger(__name__)

Number = Union[int, Fraction, float]


@dataclass(frozen=True)
class SequencePair:
    """
    a, b of equal length k ≥ 2 with a_1 = b_k = 1 and a_i·b_i ≤ T, T ≥ 3.

    Usage:
        pair = SequencePair((1, 3), (3, 1), T=3)
        sequence_stats(pair).delta   # 6
    """
    a: Tuple[Number, ...]
    b: Tuple[Number, ...]
    T: Number

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        problems = self.problems()
        if problems:
            raise DomainError("invalid sequence pair: " + "; ".join(problems))

    def problems(self) -> List[str]:
        a, b, T = self.a, self.b, self.T
        problems = []
        if len(a) != len(b):
            problems.append(f"lengths differ ({len(a)} vs {len(b)})")
            return problems
        if len(a) < 2:
            problems.append("need k >= 2")
            return problems
        if T < 3:
            problems.append(f"T must be >= 3, got {T}")
        if any(x <= 0 for x in a + b):
            problems.append("entries must be positive")
        if a[0] != 1 or b[-1] != 1:
            problems.append("boundary conditions a_1 = b_k = 1 violated")
        if any(x * y > T for x, y in zip(a, b)):
            problems.append("some a_i * b_i exceeds T")
        return problems

    @property
    def k(self) -> int:
        return len(self.a)

    def to_dict(self) -> Dict:
        return {"a": _plain(self.a), "b": _plain(self.b), "T": _plain([self.T])[0]}


def _plain(values) -> list:
    return [int(v) if isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1) else float(v) for v in values]


@dataclass(frozen=True)
class SequenceStats:
    delta: Number
    n_total: Number

    @property
    def ratio(self) -> Number:
        """N / Δ²."""
        if isinstance(self.delta, float) or isinstance(self.n_total, float):
            return self.n_total / self.delta ** 2
        return Fraction(self.n_total, 1) / (self.delta ** 2)

    def to_dict(self) -> Dict:
        return {"delta": _plain([self.delta])[0], "N": _plain([self.n_total])[0], "ratio": float(self.ratio)}


def sequence_stats(pair: SequencePair) -> SequenceStats:
    """Δ = Σ a_i·b_i and N = Σ_{i≤j} a_i·b_j."""
    delta = sum(x * y for x, y in zip(pair.a, pair.b))
    n_total = 0
    prefix_a = 0
    for x, y in zip(pair.a, pair.b):
        prefix_a += x
        n_total += prefix_a * y
    return SequenceStats(delta=delta, n_total=n_total)


def lemma_bound(n_total: Real, T: Real) -> float:
    return math.sqrt(32 * n_total * T * math.log(T))


@dataclass
class BoundCheck:
    holds: bool
    bound: float
    slack: float
    stats: SequenceStats

    def to_dict(self) -> Dict:
        return {"holds": self.holds, "bound": self.bound, "slack": self.slack, **self.stats.to_dict()}


def check_bound(pair: SequencePair) -> BoundCheck:
    """Δ ≤ √(32·N·T·ln T), natural log; slack = bound − Δ."""
    stats = sequence_stats(pair)
    bound = lemma_bound(stats.n_total, pair.T)
    slack = bound - float(stats.delta)
    return BoundCheck(holds=slack >= 0, bound=bound, slack=slack, stats=stats)


def tightness_ratio(pair: SequencePair) -> float:
    """Δ² / (N·T·ln T)."""
    stats = sequence_stats(pair)
    return float(stats.delta) ** 2 / (float(stats.n_total) * pair.T * math.log(pair.T))


def tight_sequence(k: int) -> SequencePair:
    """a_i = 2^(i−1), b_i = 2^(k−i), T = 2^(k−1): every product sits at the cap."""
    if k < 3:
        raise DomainError(f"tight sequence needs k >= 3, got {k}")
    return SequencePair(
        a=tuple(2 ** i for i in range(k)),
        b=tuple(2 ** (k - 1 - i) for i in range(k)),
        T=2 ** (k - 1),
    )


def _capped_pairs(T: int) -> List[Tuple[int, int]]:
    return [(x, y) for x in range(1, T + 1) for y in range(1, T // x + 1)]


def count_pairs(k_max: int, T: int) -> int:
    """Number of pairs ``enumerate_pairs`` would yield."""
    inner = len(_capped_pairs(T))
    return sum(T * T * inner ** (k - 2) for k in range(2, k_max + 1))


def enumerate_pairs(k_max: int, T: int) -> Iterator[SequencePair]:
    """Every integer pair with 2 ≤ k ≤ k_max, entries ≤ T, a_1 = b_k = 1 and a_i·b_i ≤ T."""
    if T < 3:
        raise DomainError(f"T must be >= 3, got {T}")
    inner = _capped_pairs(T)
    firsts = [(1, y) for y in range(1, T + 1)]
    lasts = [(x, 1) for x in range(1, T + 1)]

    def extend(prefix: List[Tuple[int, int]], remaining: int) -> Iterator[List[Tuple[int, int]]]:
        if remaining == 0:
            yield prefix
            return
        for item in inner:
            yield from extend(prefix + [item], remaining - 1)

    for k in range(2, k_max + 1):
        for first in firsts:
            for middle in extend([first], k - 2):
                for last in lasts:
                    rows = middle + [last]
                    yield SequencePair(
                        a=tuple(x for x, _ in rows),
                        b=tuple(y for _, y in rows),
                        T=T,
                    )


def minimize_ratio(
    k_max: int,
    T: int,
    max_k: int = 4,
    max_T: int = 12,
) -> Tuple[SequencePair, SequenceStats]:
    """
    Exhaustive minimizer of N/Δ² over ``enumerate_pairs(k_max, T)``.

    Ties keep the first pair in enumeration order.

    Raises:
        ResourceRefusal: k_max > max_k or T > max_T
    """
    if k_max > max_k or T > max_T:
        raise ResourceRefusal(
            f"search limited to k_max <= {max_k}, T <= {max_T}",
            estimate=count_pairs(k_max, T),
        )
    if k_max < 2:
        raise DomainError(f"k_max must be >= 2, got {k_max}")
    best: Optional[Tuple[SequencePair, SequenceStats]] = None
    for pair in enumerate_pairs(k_max, T):
        stats = sequence_stats(pair)
        if best is None or stats.ratio < best[1].ratio:
            best = (pair, stats)
    logger.debug(f"minimum N/Δ² for k_max={k_max}, T={T}: {best[1].ratio} at {best[0]}")
    return best


@dataclass
class ExhaustiveLemmaReport:
    checked: int = 0
    violations: int = 0
    min_slack: float = math.inf
    worst: Optional[SequencePair] = None

    @property
    def holds(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> Dict:
        return {
            "checked": self.checked,
            "violations": self.violations,
            "min_slack": self.min_slack,
            "worst": self.worst.to_dict() if self.worst else None,
        }


def check_lemma_exhaustive(k_max: int, T_values: Sequence[int]) -> ExhaustiveLemmaReport:
    """Check the bound on every enumerable pair for each cap in ``T_values``."""
    report = ExhaustiveLemmaReport()
    for T in T_values:
        for pair in enumerate_pairs(k_max, T):
            result = check_bound(pair)
            report.checked += 1
            if not result.holds:
                report.violations += 1
            if result.slack < report.min_slack:
                report.min_slack = result.slack
                report.worst = pair
    logger.info(f"bound checked on {report.checked} pairs, {report.violations} violations")
    return report
