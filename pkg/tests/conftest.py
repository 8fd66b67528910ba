"""Shared fixtures."""

from itertools import permutations

import pytest
from hypothesis import strategies as st

from src.tableaux import Partition, Permutation

PI_18 = (7, 15, 16, 17, 18, 8, 13, 14, 9, 10, 5, 6, 11, 1, 2, 3, 4, 12)
TAU_18 = (7, 15, 16, 17, 18, 8, 13, 14, 10, 9, 5, 6, 11, 1, 2, 3, 4, 12)
SIMULATION_18 = (13, 14, 10, 15, 6, 1, 18, 2, 16, 9, 11, 12, 3, 7, 17, 8, 4, 5)


def all_permutations(n):
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def perms(min_n=1, max_n=12):
    """Hypothesis strategy for permutations of 1..n."""
    return st.integers(min_value=min_n, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation.of)
    )


@pytest.fixture
def pi18():
    return Permutation(PI_18)


@pytest.fixture
def tau18():
    return Permutation(TAU_18)


@pytest.fixture
def simulation18():
    return Permutation(SIMULATION_18)


@pytest.fixture
def lam18():
    return Partition((6, 4, 4, 2, 2))


@pytest.fixture
def mu18():
    return Partition((5, 5, 3, 3, 1, 1))
