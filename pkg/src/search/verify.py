"""Named verification suites: each returns a list of CheckResult."""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from ..constructions import (
    build_general,
    build_t1,
    construction_decompositions,
    exact_lower_bound,
    largest_odd_k,
    relaxed_lower_bound,
)
from ..core.config import Config
from ..core.exceptions import DomainError
from ..core.logger import get_verify_logger
from ..greene import verify_witness
from ..metrics import Side, adjacent_distance, apply_adjacent, delta
from ..seqlemma import (
    check_lemma_exhaustive,
    continuous_optimum,
    interior_products,
    kkt_residuals,
    tight_sequence,
    tightness_ratio,
)
from ..tableaux import Partition, Permutation, conjugate, shape
from .exhaustive import exhaustive_t1
from .walks import random_walk_sweep

logger = get_verify_logger()

SIMULATION_PAIR = (13, 14, 10, 15, 6, 1, 18, 2, 16, 9, 11, 12, 3, 7, 17, 8, 4, 5)
SIMULATION_SWAP = 10
TIGHTNESS_FLOOR = 0.5


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: Dict = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SimulationVerdict:
    """
    The n=18 pair found by simulation, extremal on the right side.

    ``conjugate_shapes`` is an observation only.
    """
    pi: Permutation
    tau: Permutation
    lam: Partition
    mu: Partition
    delta: int
    right_distance: int
    conjugate_shapes: bool

    @property
    def passed(self) -> bool:
        return self.delta == 3 and self.right_distance == 1

    def to_dict(self) -> Dict:
        return {
            "pi": self.pi.to_list(),
            "tau": self.tau.to_list(),
            "lambda": self.lam.to_list(),
            "mu": self.mu.to_list(),
            "delta": self.delta,
            "right_distance": self.right_distance,
            "conjugate_shapes": self.conjugate_shapes,
            "passed": self.passed,
        }


def verify_paper_example() -> SimulationVerdict:
    pi = Permutation(SIMULATION_PAIR)
    tau = apply_adjacent(pi, SIMULATION_SWAP, Side.RIGHT)
    lam, mu = shape(pi), shape(tau)
    return SimulationVerdict(
        pi=pi,
        tau=tau,
        lam=lam,
        mu=mu,
        delta=delta(lam, mu),
        right_distance=adjacent_distance(pi, tau, Side.RIGHT),
        conjugate_shapes=conjugate(lam) == mu,
    )


def _suite_single_swap(config: Config) -> List[CheckResult]:
    """Exact maxima over S_2 .. S_8: within √(n/2) and at least the construction's Δ."""
    checks = []
    top = min(config.search.max_exhaustive_n, 8)
    for n in range(2, top + 1):
        attainable = (largest_odd_k(n) + 1) // 2
        for side in Side:
            result = exhaustive_t1(
                n,
                side,
                workers=config.search.workers,
                prune=config.search.prune_symmetry,
                max_n=config.search.max_exhaustive_n,
            )
            checks.append(CheckResult(
                name=f"thm2.2 n={n} {side.value}",
                passed=result.within_bound and result.max_delta >= attainable,
                detail={
                    "max_delta": result.max_delta,
                    "attainable": attainable,
                    "bound": result.bound,
                    "witnesses": len(result.witnesses),
                },
            ))
    return checks


def _suite_walks(config: Config) -> List[CheckResult]:
    checks = []
    for t in (1, 5, 10):
        report = random_walk_sweep(30, t, config.search.trials, seed=config.search.seed, workers=config.search.workers)
        checks.append(CheckResult(
            name=f"prop3.5 n=30 t={t}",
            passed=report.passed,
            detail={"max_delta": report.result.max_delta, "failures": report.failures, "max_ratio": report.max_ratio},
        ))
    return checks


def _suite_sequences(config: Config) -> List[CheckResult]:
    caps = range(3, min(config.sequences.max_T, 10) + 1)
    report = check_lemma_exhaustive(config.sequences.max_k, caps)
    checks = [CheckResult("lemma3.6 exhaustive", report.holds, report.to_dict())]
    ratios = {k: tightness_ratio(tight_sequence(k)) for k in range(3, 13)}
    checks.append(CheckResult(
        name="lemma3.6 tightness",
        passed=min(ratios.values()) >= TIGHTNESS_FLOOR,
        detail={"floor": TIGHTNESS_FLOOR, "ratios": ratios},
    ))
    return checks


def _suite_simulation(config: Config) -> List[CheckResult]:
    verdict = verify_paper_example()
    return [CheckResult("paper-example", verdict.passed, verdict.to_dict())]


def _suite_constructions(config: Config) -> List[CheckResult]:
    checks = []
    for k in range(1, 14, 2):
        c = build_t1(k)
        d = delta(shape(c.pi), shape(c.tau))
        passed = d == (k + 1) // 2 and adjacent_distance(c.pi, c.tau) == 1
        if k >= 3:
            decomps = construction_decompositions(k)
            passed = passed and verify_witness(c.pi, decomps.pi_increasing, decomps.pi_decreasing).certified
            passed = passed and verify_witness(c.tau, decomps.tau_increasing, decomps.tau_decreasing).certified
        checks.append(CheckResult(f"construction k={k}", passed, {"n0": c.n0, "delta": d}))
    for n, t in ((36, 2), (40, 2), (98, 2), (50, 1)):
        g = build_general(n, t)
        d = delta(shape(g.pi), shape(g.tau))
        floor = exact_lower_bound(n, t) if n == g.block_size * t else relaxed_lower_bound(n, t)
        checks.append(CheckResult(
            name=f"construction n={n} t={t}",
            passed=d == g.expected_delta and d >= floor and adjacent_distance(g.pi, g.tau) == t,
            detail={"delta": d, "floor": floor},
        ))
    return checks


def _suite_kkt(config: Config) -> List[CheckResult]:
    tol = config.sequences.residual_tolerance
    worst = 0.0
    worst_t = 0.0
    for k in range(1, 7):
        for ell1 in range(1, 4):
            for ell2 in range(1, 4):
                for c in (1.5, 2.0, 3.0):
                    opt = continuous_optimum(k, ell1, ell2, c)
                    worst = max(worst, float(max(kkt_residuals(opt))))
                    expected = c ** (k - 1) * (c - 1) ** 2 * ell1 * ell2
                    worst_t = max(worst_t, float(max(abs(interior_products(opt) - expected))) / expected)
    return [
        CheckResult("kkt residuals", worst <= tol, {"max_residual": worst, "tolerance": tol}),
        CheckResult("kkt cap", worst_t <= 1e-12, {"max_relative_error": worst_t}),
    ]


SUITES: Dict[str, Callable[[Config], List[CheckResult]]] = {
    "thm2.2": _suite_single_swap,
    "prop3.5": _suite_walks,
    "lemma3.6": _suite_sequences,
    "paper-example": _suite_simulation,
    "constructions": _suite_constructions,
    "kkt": _suite_kkt,
}


def run_suite(name: str, config: Optional[Config] = None) -> List[CheckResult]:
    """
    Run one suite, or every suite for ``all``.

    Raises:
        DomainError: unknown suite name
    """
    config = config or Config()
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")

    checks: List[CheckResult] = []
    for suite in names:
        results = SUITES[suite](config)
        failed = [c.name for c in results if not c.passed]
        if failed:
            logger.warning(f"suite {suite}: {len(failed)} failed ({', '.join(failed)})")
        else:
            logger.info(f"suite {suite}: {len(results)} checks passed")
        checks.extend(results)
    return checks
