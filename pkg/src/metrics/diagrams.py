"""The Δ metric on diagrams, pair anatomy and prefix-sum inequalities."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Union

from ..core.exceptions import DomainError
from ..core.logger import get_logger
from ..tableaux import Partition
from ..tableaux.partition import Cell, conjugate

logger = get_logger(__name__)


def _rows(lam: Partition, mu: Partition) -> int:
    return max(len(lam), len(mu))


def delta(lam: Partition, mu: Partition) -> Union[int, Fraction]:
    """
    Δ(λ, μ) = ½ Σ |λ_i − μ_i|, missing parts read as 0.

    Integral when |λ| = |μ|; otherwise the half-integer is returned as a
    Fraction and a warning is logged (the metric contract needs equal n).
    """
    total = sum(abs(lam[i] - mu[i]) for i in range(_rows(lam, mu)))
    if lam.n != mu.n:
        logger.warning(f"delta on partitions of different size: {lam.n} vs {mu.n}")
        return Fraction(total, 2)
    return total // 2


@dataclass
class DiagramPairAnatomy:
    """Union, intersection W and symmetric difference of two diagrams."""
    union_shape: Partition
    intersection_shape: Partition
    sym_diff_cells: List[Cell]
    lambda_only: List[int]
    mu_only: List[int]

    @property
    def intersection_area(self) -> int:
        """A(W)."""
        return self.intersection_shape.n

    def to_dict(self) -> Dict:
        return {
            "union_shape": self.union_shape.to_list(),
            "intersection_shape": self.intersection_shape.to_list(),
            "intersection_area": self.intersection_area,
            "sym_diff_cells": [list(c) for c in self.sym_diff_cells],
            "lambda_only": self.lambda_only,
            "mu_only": self.mu_only,
        }


def anatomy(lam: Partition, mu: Partition) -> DiagramPairAnatomy:
    """Row-wise max/min of the two diagrams and the cells where they differ."""
    rows = _rows(lam, mu)
    union = [max(lam[i], mu[i]) for i in range(rows)]
    inter = [min(lam[i], mu[i]) for i in range(rows)]
    cells = [(i + 1, j + 1) for i in range(rows) for j in range(inter[i], union[i])]
    return DiagramPairAnatomy(
        union_shape=Partition.of(union),
        intersection_shape=Partition.of(inter),
        sym_diff_cells=cells,
        lambda_only=[max(lam[i] - mu[i], 0) for i in range(rows)],
        mu_only=[max(mu[i] - lam[i], 0) for i in range(rows)],
    )


def row_column_exclusivity(lam: Partition, mu: Partition) -> bool:
    """At most one symmetric-difference cell in every row and every column of the union."""
    if any(abs(lam[i] - mu[i]) > 1 for i in range(_rows(lam, mu))):
        return False
    lam_c, mu_c = conjugate(lam), conjugate(mu)
    return all(abs(lam_c[j] - mu_c[j]) <= 1 for j in range(_rows(lam_c, mu_c)))


@dataclass
class PrefixReport:
    """Outcome of checking Σμ_i − r ≤ Σλ_i ≤ Σμ_i + s for every prefix j."""
    r: int
    s: int
    holds: bool
    first_violation: Optional[int] = None
    lower_slack: List[int] = field(default_factory=list)
    upper_slack: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "r": self.r,
            "s": self.s,
            "holds": self.holds,
            "first_violation": self.first_violation,
        }


def check_prefix_inequalities(lam: Partition, mu: Partition, r: int, s: int) -> PrefixReport:
    """
    Verify the running-sum inequalities for every prefix.

    λ is the start shape and μ the end shape of a walk in which s steps
    put the swapped pair in decreasing order and r in increasing order.
    """
    if r < 0 or s < 0:
        raise DomainError("r and s must be non-negative")
    rows = _rows(lam, mu)
    lam_sums, mu_sums = lam.prefix_sums(rows), mu.prefix_sums(rows)
    report = PrefixReport(r=r, s=s, holds=True)
    for j in range(rows):
        lower = lam_sums[j] - (mu_sums[j] - r)
        upper = mu_sums[j] + s - lam_sums[j]
        report.lower_slack.append(lower)
        report.upper_slack.append(upper)
        if report.holds and (lower < 0 or upper < 0):
            report.holds = False
            report.first_violation = j + 1
    return report


def prefix_deviation(lam: Partition, mu: Partition) -> int:
    """max_j |Σ_{i≤j} λ_i − Σ_{i≤j} μ_i|."""
    rows = _rows(lam, mu)
    if rows == 0:
        return 0
    return max(abs(a - b) for a, b in zip(lam.prefix_sums(rows), mu.prefix_sums(rows)))
