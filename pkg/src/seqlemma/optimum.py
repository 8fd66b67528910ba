"""Geometric-series optimum of the relaxed problem and its stationarity residuals."""

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Sequence, Union

import numpy as np

from ..core.exceptions import DomainError

Number = Union[float, Fraction]


@dataclass(frozen=True)
class ContinuousOptimum:
    """
    Interior a_i = (c−1)ℓ1·c^(i−1), b_i = (c−1)ℓ2·c^(k−i).

    The extended sequences prepend ℓ1 entries (1, T) and append ℓ2
    entries (T, 1).
    """
    k: int
    ell1: int
    ell2: int
    c: Number
    a: tuple
    b: tuple

    @property
    def T(self) -> Number:
        return self.c ** (self.k - 1) * (self.c - 1) ** 2 * self.ell1 * self.ell2

    @property
    def extended_a(self) -> List[Number]:
        return [1] * self.ell1 + list(self.a) + [self.T] * self.ell2

    @property
    def extended_b(self) -> List[Number]:
        return [self.T] * self.ell1 + list(self.b) + [1] * self.ell2

    def in_feasible_region(self) -> bool:
        """a_1 > 1 and b_k > 1, where the k upper bound applies."""
        return self.a[0] > 1 and self.b[-1] > 1

    def k_upper_bound_holds(self) -> bool:
        """k − 1 < ln T / ln c ≤ ln T / ln(1 + 1/max(ℓ1, ℓ2))."""
        ln_t = math.log(self.T)
        by_ratio = ln_t / math.log(self.c)
        by_ell = ln_t / math.log(1 + 1 / max(self.ell1, self.ell2))
        return self.k - 1 < by_ratio <= by_ell

    def to_dict(self) -> Dict:
        return {
            "k": self.k,
            "ell1": self.ell1,
            "ell2": self.ell2,
            "c": float(self.c),
            "a": [float(x) for x in self.a],
            "b": [float(x) for x in self.b],
            "T": float(self.T),
        }


def continuous_optimum(k: int, ell1: int, ell2: int, c: Number, exact: bool = False) -> ContinuousOptimum:
    """
    Closed-form optimum; ``exact=True`` keeps rational c as a Fraction.

    Raises:
        DomainError: c ≤ 1, k < 1 or ℓ < 1
    """
    if c <= 1:
        raise DomainError(f"ratio c must exceed 1, got {c}")
    if k < 1 or ell1 < 1 or ell2 < 1:
        raise DomainError(f"need k, ell1, ell2 >= 1, got {k}, {ell1}, {ell2}")
    if exact:
        c = Fraction(c)
        a = tuple((c - 1) * ell1 * c ** i for i in range(k))
        b = tuple((c - 1) * ell2 * c ** (k - 1 - i) for i in range(k))
    else:
        c = float(c)
        powers = c ** np.arange(k)
        a = tuple(((c - 1) * ell1 * powers).tolist())
        b = tuple(((c - 1) * ell2 * powers[::-1]).tolist())
    return ContinuousOptimum(k=k, ell1=ell1, ell2=ell2, c=c, a=a, b=b)


def perturb(opt: ContinuousOptimum, index: int, factor: float) -> ContinuousOptimum:
    """Copy with b_index (0-based) scaled by ``factor``."""
    b = list(opt.b)
    b[index] = b[index] * factor
    return replace(opt, b=tuple(b))


def kkt_residuals(opt: ContinuousOptimum) -> Union[np.ndarray, List[Fraction]]:
    """
    Relative residual of a_i(b_i + … + b_k + ℓ2) = b_i(ℓ1 + a_1 + … + a_i) per interior i.

    Exact optima give exact Fraction residuals (all zero); float optima give an array.
    """
    if isinstance(opt.c, Fraction):
        return _exact_residuals(opt.a, opt.b, opt.ell1, opt.ell2)
    a = np.asarray(opt.a, dtype=float)
    b = np.asarray(opt.b, dtype=float)
    tail_b = np.cumsum(b[::-1])[::-1] + opt.ell2
    head_a = np.cumsum(a) + opt.ell1
    lhs = a * tail_b
    rhs = b * head_a
    return np.abs(lhs - rhs) / np.maximum(np.abs(lhs), np.abs(rhs))


def _exact_residuals(a: Sequence[Fraction], b: Sequence[Fraction], ell1: int, ell2: int) -> List[Fraction]:
    residuals = []
    for i in range(len(a)):
        lhs = a[i] * (sum(b[i:]) + ell2)
        rhs = b[i] * (ell1 + sum(a[: i + 1]))
        residuals.append(abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
    return residuals


def interior_products(opt: ContinuousOptimum) -> np.ndarray:
    """a_i·b_i for every interior i; all equal T at the optimum."""
    return np.asarray(opt.a, dtype=float) * np.asarray(opt.b, dtype=float)
