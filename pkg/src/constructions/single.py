"""
Extremal pair at one adjacent transposition.

For odd k and n0 = (k+1)²/2 the values split into small, intermediate and
big categories. Intermediates m_1 < … < m_{k+1} are interleaved with big
blocks (descending index) and then small blocks (ascending index); τ swaps
the two middle values. λ(π) = (k+1, k−1, k−1, …, 2, 2) and λ(τ) is its
conjugate, so Δ = (k+1)/2 = √(n0/2).
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..core.exceptions import DomainError
from ..core.logger import get_logger
from ..greene import Decomposition, Direction
from ..tableaux import Partition, Permutation

logger = get_logger(__name__)

Block = Tuple[int, ...]


def _require_odd(k: int, least: int = 1) -> None:
    if k < least or k % 2 == 0:
        raise DomainError(f"k must be odd and >= {least}, got {k}")


def core_size(k: int) -> int:
    """n0 = (k+1)²/2."""
    return (k + 1) ** 2 // 2


def largest_odd_k(n: int) -> int:
    """Largest odd k with (k+1)²/2 ≤ n, or 0 if none."""
    k = 1
    if core_size(k) > n:
        return 0
    while core_size(k + 2) <= n:
        k += 2
    return k


@dataclass(frozen=True)
class T1Construction:
    """
    The extremal pair for odd k with its value categories.

    ``small_blocks[i-1]`` is s_i and ``big_blocks[i-1]`` is b_i, both of
    size 2i, values ascending. ``intermediates[i-1]`` is m_i.

    Usage:
        c = build_t1(5)
        c.pi.to_list()    # [7, 15, 16, 17, 18, 8, ...]
    """
    k: int
    pi: Permutation
    tau: Permutation
    small_blocks: Tuple[Block, ...]
    big_blocks: Tuple[Block, ...]
    intermediates: Tuple[int, ...]

    @property
    def n0(self) -> int:
        return core_size(self.k)

    @property
    def q(self) -> int:
        return (self.k - 1) // 2

    @property
    def swapped(self) -> Tuple[int, int]:
        """The two values exchanged between π and τ."""
        h = self.n0 // 2
        return h, h + 1

    def shapes(self) -> Tuple[Partition, Partition]:
        return expected_shapes(self.k)

    def to_dict(self) -> Dict:
        lam, mu = self.shapes()
        return {
            "k": self.k,
            "n0": self.n0,
            "pi": self.pi.to_list(),
            "tau": self.tau.to_list(),
            "lambda": lam.to_list(),
            "mu": mu.to_list(),
            "small_blocks": [list(b) for b in self.small_blocks],
            "big_blocks": [list(b) for b in self.big_blocks],
            "intermediates": list(self.intermediates),
        }


def build_t1(k: int) -> T1Construction:
    _require_odd(k)
    n0 = core_size(k)
    if k == 1:
        return T1Construction(
            k=1,
            pi=Permutation((1, 2)),
            tau=Permutation((2, 1)),
            small_blocks=(),
            big_blocks=(),
            intermediates=(1, 2),
        )

    h = n0 // 2
    q = (k - 1) // 2
    intermediates = tuple(range(h - (k - 1) // 2, h + (k + 1) // 2 + 1))

    # small blocks are cut from the smallest value upward: s_q first, s_1 last
    small: Dict[int, Block] = {}
    start = 1
    for i in range(q, 0, -1):
        small[i] = tuple(range(start, start + 2 * i))
        start += 2 * i
    big: Dict[int, Block] = {}
    start = h + (k + 3) // 2
    for i in range(1, q + 1):
        big[i] = tuple(range(start, start + 2 * i))
        start += 2 * i

    m = (None,) + intermediates  # 1-based
    layout: List[int] = []
    for i in range(1, q + 1):
        layout.append(m[i])
        layout.extend(big[q + 1 - i])
    layout.append(m[q + 1])
    layout.append(m[q + 2])
    for j in range(1, q + 1):
        layout.extend(small[j])
        layout.append(m[q + 2 + j])

    pi = Permutation(tuple(layout))
    tau = Permutation(tuple(h + 1 if v == h else h if v == h + 1 else v for v in layout))
    return T1Construction(
        k=k,
        pi=pi,
        tau=tau,
        small_blocks=tuple(small[i] for i in range(1, q + 1)),
        big_blocks=tuple(big[i] for i in range(1, q + 1)),
        intermediates=intermediates,
    )


def expected_shapes(k: int) -> Tuple[Partition, Partition]:
    """λ = (k+1, k−1, k−1, …, 2, 2) and μ = (k, k, k−2, k−2, …, 1, 1)."""
    _require_odd(k)
    lam = [k + 1]
    for p in range(k - 1, 0, -2):
        lam += [p, p]
    mu = []
    for p in range(k, 0, -2):
        mu += [p, p]
    return Partition.of(lam), Partition.of(mu)


def construct_t1(n: int) -> Tuple[Permutation, Permutation]:
    """
    Pair at left distance 1 with Δ = √(n0/2), n0 the largest admissible core ≤ n.

    Values n0+1, …, n are appended as fixed points.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    c = build_t1(largest_odd_k(n))
    tail = tuple(range(c.n0 + 1, n + 1))
    return Permutation(c.pi.values + tail), Permutation(c.tau.values + tail)


@dataclass(frozen=True)
class ConstructionDecompositions:
    """Increasing and decreasing certificates for both members of the pair."""
    pi_increasing: Decomposition
    pi_decreasing: Decomposition
    tau_increasing: Decomposition
    tau_decreasing: Decomposition

    def to_dict(self) -> Dict:
        return {
            "pi": {"increasing": self.pi_increasing.to_dict(), "decreasing": self.pi_decreasing.to_dict()},
            "tau": {"increasing": self.tau_increasing.to_dict(), "decreasing": self.tau_decreasing.to_dict()},
        }


def _descending(block: Block) -> List[int]:
    return sorted(block, reverse=True)


def decreasing_pieces_pi(c: T1Construction) -> List[List[int]]:
    """d_1 … d_{k+1} as value sets."""
    k, q = c.k, c.q
    d: Dict[int, List[int]] = {i: [] for i in range(1, k + 2)}
    for block in c.big_blocks + c.small_blocks:
        for i, v in enumerate(_descending(block), start=1):
            d[i].append(v)
    m = (None,) + c.intermediates
    for idx, target in zip(range(1, q + 2), range(k, 0, -2)):
        d[target].append(m[idx])
    for idx, target in zip(range(q + 2, k + 2), range(2, k + 2, 2)):
        d[target].append(m[idx])
    return [d[i] for i in range(1, k + 2)]


def decreasing_pieces_tau(c: T1Construction) -> List[List[int]]:
    """f_1 … f_k as value sets."""
    k, q = c.k, c.q
    f: Dict[int, List[int]] = {i: [] for i in range(1, k + 1)}
    for block in c.big_blocks:
        for i, v in enumerate(_descending(block), start=1):
            f[i].append(v)
    for j, block in enumerate(c.small_blocks, start=1):
        rest = _descending(block)
        f[2 * j + 1].append(rest.pop())
        for i, v in enumerate(rest, start=1):
            f[i].append(v)
    m = (None,) + c.intermediates
    for idx, target in zip(range(1, q + 1), range(k, 2, -2)):
        f[target].append(m[idx])
    for idx, target in zip(range(q + 3, k + 2), range(2, k, 2)):
        f[target].append(m[idx])
    f[1] += [m[q + 1], m[q + 2]]
    return [f[i] for i in range(1, k + 1)]


def increasing_pieces_pi(c: T1Construction) -> List[List[int]]:
    return [list(c.intermediates)] + [list(b) for b in c.small_blocks + c.big_blocks]


def increasing_pieces_tau(c: T1Construction) -> List[List[int]]:
    q = c.q
    m = (None,) + c.intermediates
    pieces = [[m[i]] + list(c.big_blocks[q - i]) for i in range(1, q + 1)]
    pieces += [list(c.small_blocks[j - 1]) + [m[q + 2 + j]] for j in range(1, q + 1)]
    pieces += [[m[q + 1]], [m[q + 2]]]
    return pieces


def construction_decompositions(k: int) -> ConstructionDecompositions:
    _require_odd(k, least=3)
    c = build_t1(k)
    decomps = ConstructionDecompositions(
        pi_increasing=Decomposition.from_values(c.pi, increasing_pieces_pi(c), Direction.INCREASING),
        pi_decreasing=Decomposition.from_values(c.pi, decreasing_pieces_pi(c), Direction.DECREASING),
        tau_increasing=Decomposition.from_values(c.tau, increasing_pieces_tau(c), Direction.INCREASING),
        tau_decreasing=Decomposition.from_values(c.tau, decreasing_pieces_tau(c), Direction.DECREASING),
    )
    logger.debug(f"decompositions for k={k}: d sizes {decomps.pi_decreasing.sizes}, f sizes {decomps.tau_decreasing.sizes}")
    return decomps


def values_of(pi: Permutation, piece) -> List[int]:
    """Values of π at the given positions, in position order."""
    return [pi[p] for p in sorted(piece)]
