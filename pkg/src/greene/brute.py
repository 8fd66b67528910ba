"""Exhaustive oracle for unions of increasing subsequences."""

from typing import List

from ..core.exceptions import DomainError, ResourceRefusal
from ..tableaux import Permutation

BRUTE_FORCE_MAX_N = 10


def brute_force_max_union(pi: Permutation, j: int) -> int:
    """
    μ_j by assigning each position to one of ≤ j chains or leaving it out.

    Branch-and-bound; refuses n > 10.
    """
    n = pi.n
    if n > BRUTE_FORCE_MAX_N:
        raise ResourceRefusal(
            f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got n={n}",
            estimate=(j + 1) ** n,
        )
    if not 1 <= j <= max(n, 1):
        raise DomainError(f"j must lie in 1..{n}, got {j}")
    values = pi.values
    tails: List[int] = []
    best = 0

    def search(pos: int, covered: int) -> None:
        nonlocal best
        if covered + (n - pos) <= best:
            return
        if pos == n:
            best = covered
            return
        v = values[pos]
        for c in range(len(tails)):
            if tails[c] < v:
                old = tails[c]
                tails[c] = v
                search(pos + 1, covered + 1)
                tails[c] = old
        # opening a chain: every empty chain is interchangeable
        if len(tails) < j:
            tails.append(v)
            search(pos + 1, covered + 1)
            tails.pop()
        search(pos + 1, covered)

    search(0, 0)
    return best
