"""Result containers for exhaustive searches and random sweeps."""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..tableaux import Partition, Permutation


@dataclass(frozen=True)
class Witness:
    """A pair attaining the recorded Δ."""
    pi: Permutation
    tau: Permutation
    lam: Partition
    mu: Partition
    delta: int

    def key(self):
        return (self.pi.values, self.tau.values)

    def to_dict(self) -> Dict:
        return {
            "pi": self.pi.to_list(),
            "tau": self.tau.to_list(),
            "lambda": self.lam.to_list(),
            "mu": self.mu.to_list(),
            "delta": self.delta,
        }


@dataclass
class SearchResult:
    """
    Outcome of one search over pairs at distance t.

    ``bound`` is the theorem cap checked during the run (t·√(n/2));
    ``violations`` counts pairs that exceeded it.
    """
    n: int
    t: int
    side: str
    mode: str
    max_delta: int = 0
    witnesses: List[Witness] = field(default_factory=list)
    bound: float = 0.0
    seed: Optional[int] = None
    evaluated: int = 0
    violations: int = 0

    @property
    def within_bound(self) -> bool:
        return self.violations == 0 and self.max_delta <= self.bound + 1e-12

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "t": self.t,
            "side": self.side,
            "mode": self.mode,
            "max_delta": self.max_delta,
            "bound": self.bound,
            "seed": self.seed,
            "evaluated": self.evaluated,
            "violations": self.violations,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }

    def summary(self) -> str:
        """Short text summary."""
        return (
            f"{self.mode} search n={self.n} t={self.t} side={self.side}: "
            f"max Δ = {self.max_delta} (cap {self.bound:.3f}), "
            f"{len(self.witnesses)} witnesses, {self.evaluated:,} pairs, {self.violations} violations"
        )


def envelope(n: int, t: int) -> float:
    """√(n·t·ln max(t, 3)), the normalizer for sweep ratios."""
    return math.sqrt(n * t * math.log(max(t, 3)))


@dataclass
class SweepTrial:
    """One random walk: CSV row source."""
    trial: int
    n: int
    t: int
    realized_d: int
    delta: int
    ratio: float
    r: int = 0
    s: int = 0
    prefix_ok: bool = True
    areas_ok: bool = True
    products_ok: bool = True
    triangle_ok: bool = True
    prefix_deviation: int = 0

    CSV_COLUMNS = ("trial", "n", "t", "realized_d", "delta", "ratio")

    @property
    def lipschitz(self) -> Optional[float]:
        """Δ over the realized distance."""
        return self.delta / self.realized_d if self.realized_d else None

    @property
    def ok(self) -> bool:
        return self.prefix_ok and self.areas_ok and self.products_ok and self.triangle_ok

    def to_row(self) -> Dict:
        return {col: getattr(self, col) for col in self.CSV_COLUMNS}

    def to_dict(self) -> Dict:
        return {
            **self.to_row(),
            "r": self.r,
            "s": self.s,
            "lipschitz": self.lipschitz,
            "prefix_ok": self.prefix_ok,
            "areas_ok": self.areas_ok,
            "products_ok": self.products_ok,
            "triangle_ok": self.triangle_ok,
            "prefix_deviation": self.prefix_deviation,
        }


@dataclass
class SweepReport:
    """A sweep's SearchResult plus its per-trial records and failure counters."""
    result: SearchResult
    trials: List[SweepTrial] = field(default_factory=list)

    @property
    def failures(self) -> Dict[str, int]:
        return {
            "prefix": sum(not tr.prefix_ok for tr in self.trials),
            "areas": sum(not tr.areas_ok for tr in self.trials),
            "products": sum(not tr.products_ok for tr in self.trials),
            "triangle": sum(not tr.triangle_ok for tr in self.trials),
        }

    @property
    def max_ratio(self) -> float:
        return max((tr.ratio for tr in self.trials), default=0.0)

    @property
    def passed(self) -> bool:
        return self.result.within_bound and not any(self.failures.values())

    def to_dict(self) -> Dict:
        ratios = sorted(tr.ratio for tr in self.trials)
        return {
            **self.result.to_dict(),
            "failures": self.failures,
            "max_ratio": self.max_ratio,
            "median_ratio": ratios[len(ratios) // 2] if ratios else 0.0,
            "max_prefix_deviation": max((tr.prefix_deviation for tr in self.trials), default=0),
        }
