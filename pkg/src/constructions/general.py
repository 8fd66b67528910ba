"""Extremal pairs at t adjacent transpositions: t stacked copies of the one-swap pattern."""

import math
from dataclasses import dataclass
from typing import Dict, Tuple

from ..core.exceptions import DomainError
from ..tableaux import Permutation
from .single import build_t1, core_size


@dataclass(frozen=True)
class GeneralConstruction:
    n: int
    t: int
    k: int
    pi: Permutation
    tau: Permutation

    @property
    def block_size(self) -> int:
        return core_size(self.k)

    @property
    def expected_delta(self) -> int:
        """Shapes of stacked blocks add row by row, so Δ adds too."""
        return self.t * (self.k + 1) // 2

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "t": self.t,
            "k": self.k,
            "block_size": self.block_size,
            "pi": self.pi.to_list(),
            "tau": self.tau.to_list(),
            "expected_delta": self.expected_delta,
            "lower_bound": exact_lower_bound(self.n, self.t),
        }


def _check_range(n: int, t: int) -> None:
    if t < 1 or 2 * t > n:
        raise DomainError(f"t must lie in [1, n/2], got n={n}, t={t}")


def block_parameter(n: int, t: int) -> int:
    """Largest odd k with (k+1)²/2 · t ≤ n."""
    _check_range(n, t)
    k = 1
    while core_size(k + 2) * t <= n:
        k += 2
    return k


def build_general(n: int, t: int) -> GeneralConstruction:
    k = block_parameter(n, t)
    base = build_t1(k)
    m = base.n0
    pi_values, tau_values = [], []
    for block in range(t):
        shift = block * m
        pi_values += [v + shift for v in base.pi.values]
        tau_values += [v + shift for v in base.tau.values]
    tail = list(range(m * t + 1, n + 1))
    return GeneralConstruction(
        n=n,
        t=t,
        k=k,
        pi=Permutation(tuple(pi_values + tail)),
        tau=Permutation(tuple(tau_values + tail)),
    )


def construct_general_t(n: int, t: int) -> Tuple[Permutation, Permutation]:
    c = build_general(n, t)
    return c.pi, c.tau


def exact_lower_bound(n: int, t: int) -> float:
    """(1 − √(t/2n)) · √(nt/2)."""
    return (1 - math.sqrt(t / (2 * n))) * math.sqrt(n * t / 2)


def relaxed_lower_bound(n: int, t: int) -> float:
    """√(nt/2) − t, what the odd-k stacking guarantees on every (n, t)."""
    return math.sqrt(n * t / 2) - t
