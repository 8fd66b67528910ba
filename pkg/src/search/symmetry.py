"""
Symmetries of pair searches.

Reverse and complement send shapes to conjugates, inverse keeps them, and
swapping the pair is harmless, so Δ is constant on orbits. Inverse
exchanges left and right adjacency and is left out when a side is fixed.
"""

from typing import Iterator, Optional, Sequence, Tuple, Union

from ..metrics import Side
from ..tableaux import Permutation, inverse
from ..tableaux.permutation import require_same_size

Pair = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _dihedral(values: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """id, reverse, complement, reverse∘complement on raw tuples."""
    n = len(values)
    values = tuple(values)
    comp = tuple(n + 1 - v for v in values)
    yield values
    yield values[::-1]
    yield comp
    yield comp[::-1]


def orbit(pi: Permutation, tau: Permutation, side: Optional[Union[Side, str]] = None) -> Iterator[Tuple[Permutation, Permutation]]:
    require_same_size(pi, tau)
    bases = [(pi, tau)]
    if side is None:
        bases.append((inverse(pi), inverse(tau)))
    for p, q in bases:
        for gp, gq in zip(_dihedral(p.values), _dihedral(q.values)):
            yield Permutation(gp), Permutation(gq)
            yield Permutation(gq), Permutation(gp)


def canonicalize_pair(
    pi: Permutation,
    tau: Permutation,
    side: Optional[Union[Side, str]] = None,
) -> Tuple[Permutation, Permutation]:
    """Lexicographically least pair in the orbit."""
    return min(orbit(pi, tau, side), key=lambda pair: (pair[0].values, pair[1].values))


def is_orbit_least(values: Sequence[int]) -> bool:
    """True if ``values`` is least among its reverse/complement images."""
    values = tuple(values)
    return all(values <= g for g in _dihedral(values))

