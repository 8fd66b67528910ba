"""
Greene invariants by minimum-cost flow.

μ_j, the largest union of j disjoint increasing subsequences, is the
negated optimum of a min-cost flow pushing j units through the
comparability DAG of π. No RSK involved, so it can certify RSK shapes.
"""

from dataclasses import dataclass, field
from typing import Dict, List

import networkx as nx

from ..core.exceptions import DomainError
from ..core.logger import get_logger
from ..tableaux import Partition, Permutation, reverse

logger = get_logger(__name__)

SOURCE = "source"
SINK = "sink"


def _flow_network(pi: Permutation, j: int) -> nx.DiGraph:
    """Split node per position (capacity 1, weight −1) plus a zero-cost bypass."""
    g = nx.DiGraph()
    g.add_node(SOURCE, demand=-j)
    g.add_node(SINK, demand=j)
    g.add_edge(SOURCE, SINK, capacity=j, weight=0)
    values = pi.values
    n = len(values)
    for p in range(n):
        g.add_edge(("in", p), ("out", p), capacity=1, weight=-1)
        g.add_edge(SOURCE, ("in", p), capacity=1, weight=0)
        g.add_edge(("out", p), SINK, capacity=1, weight=0)
        for q in range(p + 1, n):
            if values[p] < values[q]:
                g.add_edge(("out", p), ("in", q), capacity=1, weight=0)
    return g


def max_union_increasing(pi: Permutation, j: int) -> int:
    """
    Largest cardinality of a union of j disjoint increasing subsequences.

    Args:
        pi: Permutation
        j: Number of subsequences, 1 ≤ j ≤ n

    Returns:
        μ_j
    """
    n = pi.n
    if not 1 <= j <= n:
        raise DomainError(f"j must lie in 1..{n}, got {j}")
    cost = nx.min_cost_flow_cost(_flow_network(pi, j))
    return -cost


@dataclass
class GreeneProfile:
    """
    μ_1 ≤ μ_2 ≤ … up to the first j with μ_j = n.

    Usage:
        profile = greene_profile(pi)
        profile.derived_shape   # equals shape(pi)
    """
    mu: List[int] = field(default_factory=list)

    @property
    def derived_shape(self) -> Partition:
        parts = [b - a for a, b in zip([0] + self.mu[:-1], self.mu)]
        return Partition.of(parts)

    def to_dict(self) -> Dict:
        return {"mu": self.mu, "shape": self.derived_shape.to_list()}


def greene_profile(pi: Permutation) -> GreeneProfile:
    profile = GreeneProfile()
    for j in range(1, pi.n + 1):
        mu_j = max_union_increasing(pi, j)
        profile.mu.append(mu_j)
        if mu_j == pi.n:
            break
    logger.debug(f"greene profile of {pi}: {profile.mu}")
    return profile


def greene_shape(pi: Permutation) -> Partition:
    """λ(π) from Greene invariants alone."""
    return greene_profile(pi).derived_shape


def decreasing_profile(pi: Permutation) -> GreeneProfile:
    """Unions of decreasing subsequences of π, read off the reversal."""
    return greene_profile(reverse(pi))
