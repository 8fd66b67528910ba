"""Exhaustive search over S_n for pairs at one adjacent transposition."""

import math
from functools import partial
from itertools import permutations
from multiprocessing import Pool
from typing import Dict, List, Optional, Tuple, Union

from ..core.exceptions import DomainError, ResourceRefusal
from ..core.logger import get_search_logger
from ..metrics import Side, delta
from ..tableaux import Partition, Permutation, shape_of
from .results import SearchResult, Witness
from .symmetry import canonicalize_pair, is_orbit_least

logger = get_search_logger()

EXHAUSTIVE_MAX_N = 9

ShapeTable = Dict[Tuple[int, ...], Partition]


def _shapes_with_first(first: int, n: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Work item: shapes of every permutation starting with ``first``."""
    rest = [v for v in range(1, n + 1) if v != first]
    return [((first,) + tail, tuple(shape_of((first,) + tail).parts)) for tail in permutations(rest)]


def shape_table(n: int, workers: int = 1) -> ShapeTable:
    """
    λ(π) for every π in S_n, split by first value across a process pool.

    Results are merged in first-value order, so the table is the same for
    any worker count.
    """
    firsts = list(range(1, n + 1))
    if workers > 1 and n >= 6:
        with Pool(min(workers, n)) as pool:
            chunks = pool.map(partial(_shapes_with_first, n=n), firsts)
    else:
        chunks = [_shapes_with_first(first, n) for first in firsts]
    table: ShapeTable = {}
    for chunk in chunks:
        for values, parts in chunk:
            table[values] = Partition(parts)
    logger.debug(f"shape table for S_{n}: {len(table)} entries")
    return table


def estimate_pairs(n: int) -> int:
    """n!·(n−1) ordered pairs."""
    return math.factorial(n) * (n - 1)


def _swap(values: Tuple[int, ...], i: int, side: Side) -> Tuple[int, ...]:
    if side is Side.LEFT:
        return tuple(i + 1 if v == i else i if v == i + 1 else v for v in values)
    out = list(values)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def exhaustive_t1(
    n: int,
    side: Union[Side, str] = Side.LEFT,
    workers: int = 1,
    prune: bool = False,
    table: Optional[ShapeTable] = None,
    max_n: int = EXHAUSTIVE_MAX_N,
) -> SearchResult:
    """
    Exact max Δ over all π in S_n and all adjacent swaps on ``side``.

    Witnesses are the canonical representatives of every maximizing pair.
    With ``prune`` only π least under reverse/complement are expanded.

    Raises:
        ResourceRefusal: n > max_n
    """
    side = Side.of(side)
    if n > max_n:
        raise ResourceRefusal(f"exhaustive search limited to n <= {max_n}, got n={n}", estimate=estimate_pairs(n))
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")

    table = table if table is not None else shape_table(n, workers)
    bound = math.sqrt(n / 2)
    result = SearchResult(n=n, t=1, side=side.value, mode="exhaustive", bound=bound)
    best: Dict[Tuple, Witness] = {}

    for values, lam in table.items():
        if prune and not is_orbit_least(values):
            continue
        for i in range(1, n):
            other = _swap(values, i, side)
            mu = table[other]
            d = delta(lam, mu)
            result.evaluated += 1
            if d > bound:
                result.violations += 1
            if d < result.max_delta:
                continue
            if d > result.max_delta:
                result.max_delta = d
                best = {}
            p, q = canonicalize_pair(Permutation(values), Permutation(other), side)
            if (p.values, q.values) not in best:
                best[(p.values, q.values)] = Witness(p, q, table[p.values], table[q.values], d)

    result.witnesses = [best[key] for key in sorted(best)]
    logger.info(result.summary())
    return result
