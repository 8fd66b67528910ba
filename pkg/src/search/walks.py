"""
Random transposition walks.

Each trial draws a uniform start and t uniform swaps from its own
substream ``SeedSequence([seed, trial])``, so any trial can be replayed
alone and the pool size never changes the output.
"""

import math
from functools import partial
from multiprocessing import Pool
from typing import List, Sequence, Tuple, Union

import numpy as np

from ..core.exceptions import DomainError
from ..core.logger import get_search_logger
from ..metrics import (
    Side,
    adjacent_distance,
    apply_adjacent,
    apply_transposition,
    check_prefix_inequalities,
    decompose_blocks,
    delta,
    prefix_deviation,
    swap_direction,
)
from ..seqlemma import reduce_pair
from ..tableaux import Partition, Permutation, compose, inverse, shape
from .results import SearchResult, SweepReport, SweepTrial, Witness, envelope

logger = get_search_logger()

MAX_WITNESSES = 20


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def _random_permutation(rng: np.random.Generator, n: int) -> Permutation:
    return Permutation(tuple(int(v) + 1 for v in rng.permutation(n)))


def walk_triangle_check(shapes: Sequence[Partition]) -> bool:
    """Δ(σ_0, σ_t) ≤ Σ Δ(σ_i, σ_{i+1}) along a recorded walk."""
    if len(shapes) < 2:
        return True
    steps = sum(delta(a, b) for a, b in zip(shapes, shapes[1:]))
    return delta(shapes[0], shapes[-1]) <= steps


def transposition_distance(pi: Permutation, tau: Permutation, side: Union[Side, str] = Side.LEFT) -> int:
    """Fewest arbitrary transpositions from π to τ: n minus the cycles of the quotient."""
    if Side.of(side) is Side.LEFT:
        quotient = compose(tau, inverse(pi))
    else:
        quotient = compose(inverse(pi), tau)
    seen = [False] * (quotient.n + 1)
    cycles = 0
    for start in range(1, quotient.n + 1):
        if seen[start]:
            continue
        cycles += 1
        v = start
        while not seen[v]:
            seen[v] = True
            v = quotient[v]
    return quotient.n - cycles


def _adjacent_trial(trial: int, n: int, t: int, side: Side, seed: int) -> Tuple[SweepTrial, Witness]:
    rng = trial_rng(seed, trial)
    start = _random_permutation(rng, n)
    current = start
    shapes = [shape(start)]
    r = s = 0
    for _ in range(t):
        i = int(rng.integers(1, n))
        if swap_direction(current, i, side) == "s":
            s += 1
        else:
            r += 1
        current = apply_adjacent(current, i, side)
        shapes.append(shape(current))

    lam, mu = shapes[0], shapes[-1]
    d = delta(lam, mu)
    areas_ok = all(block.area <= t for block in decompose_blocks(lam, mu))
    products_ok = True
    if lam != mu:
        seq = reduce_pair(lam, mu).sequences
        products_ok = all(x * y <= 2 * t for x, y in zip(seq.a, seq.b))
    record = SweepTrial(
        trial=trial,
        n=n,
        t=t,
        realized_d=adjacent_distance(start, current, side),
        delta=d,
        ratio=d / envelope(n, t),
        r=r,
        s=s,
        prefix_ok=check_prefix_inequalities(lam, mu, r, s).holds,
        areas_ok=areas_ok,
        products_ok=products_ok,
        triangle_ok=walk_triangle_check(shapes),
        prefix_deviation=prefix_deviation(lam, mu),
    )
    return record, Witness(start, current, lam, mu, d)


def _general_trial(trial: int, n: int, t: int, side: Side, seed: int) -> Tuple[SweepTrial, Witness]:
    rng = trial_rng(seed, trial)
    start = _random_permutation(rng, n)
    current = start
    shapes = [shape(start)]
    for _ in range(t):
        i, j = (int(x) + 1 for x in rng.choice(n, size=2, replace=False))
        current = apply_transposition(current, i, j, side)
        shapes.append(shape(current))
    lam, mu = shapes[0], shapes[-1]
    d = delta(lam, mu)
    deviation = prefix_deviation(lam, mu)
    record = SweepTrial(
        trial=trial,
        n=n,
        t=t,
        realized_d=transposition_distance(start, current, side),
        delta=d,
        ratio=d / envelope(n, max(t, 1)),
        prefix_ok=deviation <= 2 * t,
        triangle_ok=walk_triangle_check(shapes),
        prefix_deviation=deviation,
    )
    return record, Witness(start, current, lam, mu, d)


def _run(trial_fn, mode: str, n: int, t: int, trials: int, side: Side, seed: int, workers: int, bound: float) -> SweepReport:
    work = partial(trial_fn, n=n, t=t, side=side, seed=seed)
    if workers > 1 and trials >= 2 * workers:
        with Pool(workers) as pool:
            outcomes = pool.map(work, range(trials), chunksize=max(1, trials // (4 * workers)))
    else:
        outcomes = [work(trial) for trial in range(trials)]

    result = SearchResult(n=n, t=t, side=side.value, mode=mode, seed=seed, bound=bound)
    report = SweepReport(result=result)
    for record, witness in outcomes:
        report.trials.append(record)
        result.evaluated += 1
        if record.delta > result.bound:
            result.violations += 1
        if record.delta > result.max_delta:
            result.max_delta = record.delta
            result.witnesses = []
        if record.delta == result.max_delta and len(result.witnesses) < MAX_WITNESSES:
            result.witnesses.append(witness)
    logger.info(f"{result.summary()}; failures {report.failures}")
    return report


def random_walk_sweep(
    n: int,
    t: int,
    trials: int,
    side: Union[Side, str] = Side.LEFT,
    seed: int = 0,
    workers: int = 1,
) -> SweepReport:
    """
    Random adjacent-swap walks of length t.

    Per trial: prefix inequalities with the observed (r, s) split, block
    areas ≤ t, reduced products a_i·b_i ≤ 2t and the triangle inequality
    along the walk. The result's bound is t·√(n/2).
    """
    if n < 2 or t < 1 or trials < 1:
        raise DomainError(f"need n >= 2, t >= 1, trials >= 1 (got {n}, {t}, {trials})")
    return _run(_adjacent_trial, "walk", n, t, trials, Side.of(side), seed, workers, t * math.sqrt(n / 2))


def general_transposition_sweep(
    n: int,
    t: int,
    trials: int,
    seed: int = 0,
    side: Union[Side, str] = Side.LEFT,
    workers: int = 1,
) -> SweepReport:
    """Walks of arbitrary transpositions; prefix sums may drift by at most 2 per step."""
    if n < 2 or t < 0 or trials < 1:
        raise DomainError(f"need n >= 2, t >= 0, trials >= 1 (got {n}, {t}, {trials})")
    # no theorem caps Δ per arbitrary transposition; n − 1 is the trivial maximum
    return _run(_general_trial, "general", n, t, trials, Side.of(side), seed, workers, float(n - 1))
