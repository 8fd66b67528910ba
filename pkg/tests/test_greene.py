"""Tests for the Greene oracle and conjugate witnesses."""

import pytest
from hypothesis import given, settings

from src.core.exceptions import DomainError, ResourceRefusal, ValidationError
from src.greene import (
    Decomposition,
    Direction,
    brute_force_max_union,
    decreasing_profile,
    greene_profile,
    greene_shape,
    max_union_increasing,
    verify_witness,
)
from src.tableaux import Partition, Permutation, conjugate, shape

from .conftest import all_permutations, perms


class TestFlowOracle:
    def test_identity(self):
        assert max_union_increasing(Permutation.identity(6), 1) == 6

    @pytest.mark.parametrize("j", [1, 2, 4])
    def test_decreasing(self, j):
        assert max_union_increasing(Permutation((6, 5, 4, 3, 2, 1)), j) == j

    def test_construction_permutation(self, pi18):
        assert max_union_increasing(pi18, 1) == 6
        assert max_union_increasing(pi18, 3) == 14

    def test_j_out_of_range(self):
        with pytest.raises(DomainError):
            max_union_increasing(Permutation.identity(3), 4)
        with pytest.raises(DomainError):
            max_union_increasing(Permutation.identity(3), 0)
        with pytest.raises(DomainError):
            brute_force_max_union(Permutation.identity(3), 4)

    def test_construction_partner_shape(self, tau18):
        assert greene_shape(tau18) == Partition((5, 5, 3, 3, 1, 1))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_rsk_on_small_groups(self, n):
        for pi in all_permutations(n):
            assert greene_shape(pi) == shape(pi)

    @pytest.mark.slow
    def test_matches_rsk_on_s7(self):
        for pi in all_permutations(7):
            assert greene_shape(pi) == shape(pi)

    @settings(max_examples=40, deadline=None)
    @given(perms(max_n=9))
    def test_profile_is_concave(self, pi):
        mu = [0] + greene_profile(pi).mu
        assert mu[-1] == pi.n
        steps = [b - a for a, b in zip(mu, mu[1:])]
        assert all(x >= y for x, y in zip(steps, steps[1:]))

    @settings(max_examples=40, deadline=None)
    @given(perms(max_n=9))
    def test_decreasing_profile_sums_conjugate(self, pi):
        assert decreasing_profile(pi).mu == conjugate(shape(pi)).prefix_sums()


class TestBruteForce:
    def test_small_cases(self):
        assert brute_force_max_union(Permutation((2, 1)), 1) == 1
        assert brute_force_max_union(Permutation((3, 1, 2)), 2) == 3

    def test_refuses_large_n(self):
        with pytest.raises(ResourceRefusal):
            brute_force_max_union(Permutation.identity(11), 2)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_agrees_with_flow(self, n):
        for pi in all_permutations(n):
            for j in range(1, n + 1):
                assert brute_force_max_union(pi, j) == max_union_increasing(pi, j)

    @pytest.mark.slow
    def test_agrees_with_flow_on_s6(self):
        for pi in all_permutations(6):
            for j in range(1, 7):
                assert brute_force_max_union(pi, j) == max_union_increasing(pi, j)


class TestWitness:
    def test_identity(self):
        n = 5
        pi = Permutation.identity(n)
        inc = Decomposition.from_positions([range(1, n + 1)], Direction.INCREASING)
        dec = Decomposition.from_positions([[p] for p in range(1, n + 1)], Direction.DECREASING)
        verdict = verify_witness(pi, inc, dec)
        assert verdict.certified
        assert verdict.shape == Partition((5,))

    def test_listed_decompositions(self, pi18, tau18):
        d = [[18, 14, 9, 6, 4], [17, 13, 10, 5, 3], [16, 8, 2], [15, 11, 1], [7], [12]]
        inc = [[7, 8, 9, 10, 11, 12], [5, 6], [1, 2, 3, 4], [13, 14], [15, 16, 17, 18]]
        verdict = verify_witness(
            pi18,
            Decomposition.from_values(pi18, inc, Direction.INCREASING),
            Decomposition.from_values(pi18, d, Direction.DECREASING),
        )
        assert verdict.certified
        assert verdict.shape == Partition((6, 4, 4, 2, 2))

        f = [[18, 14, 10, 9, 6, 4], [17, 13, 11, 3], [16, 8, 5, 2], [15, 12], [7, 1]]
        inc_tau = [[7, 15, 16, 17, 18], [8, 13, 14], [5, 6, 11], [1, 2, 3, 4, 12], [9], [10]]
        verdict = verify_witness(
            tau18,
            Decomposition.from_values(tau18, inc_tau, Direction.INCREASING),
            Decomposition.from_values(tau18, f, Direction.DECREASING),
        )
        assert verdict.certified
        assert verdict.shape == Partition((5, 5, 3, 3, 1, 1))

    def test_non_conjugate_sizes(self):
        pi = Permutation.identity(3)
        inc = Decomposition.from_positions([[1, 2], [3]], Direction.INCREASING)
        dec = Decomposition.from_positions([[1], [2], [3]], Direction.DECREASING)
        verdict = verify_witness(pi, inc, dec)
        assert not verdict.certified
        assert verdict.shape is None

    def test_non_monotone_piece(self):
        pi = Permutation((2, 1))
        inc = Decomposition.from_positions([[1, 2]], Direction.INCREASING)
        dec = Decomposition.from_positions([[1], [2]], Direction.DECREASING)
        assert not verify_witness(pi, inc, dec).certified

    def test_pieces_must_partition_positions(self):
        pi = Permutation.identity(3)
        inc = Decomposition.from_positions([[1, 2], [2, 3]], Direction.INCREASING)
        dec = Decomposition.from_positions([[1], [2], [3]], Direction.DECREASING)
        with pytest.raises(ValidationError):
            verify_witness(pi, inc, dec)

    def test_value_outside_range(self, pi18):
        with pytest.raises(ValidationError):
            Decomposition.from_values(pi18, [[19]], Direction.DECREASING)
