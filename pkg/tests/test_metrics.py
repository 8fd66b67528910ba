"""Tests for Δ, adjacent distances, prefix inequalities and blocks."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.core.exceptions import DomainError, SizeMismatchError, ValidationError
from src.metrics import (
    BlockKind,
    Side,
    adjacent_distance,
    anatomy,
    apply_adjacent,
    apply_transposition,
    check_prefix_inequalities,
    decompose_blocks,
    delta,
    inversions,
    inversions_naive,
    lipschitz_ratio,
    prefix_deviation,
    row_column_exclusivity,
    swap_direction,
)
from src.tableaux import Partition, Permutation, inverse, shape

from .conftest import all_permutations, perms


def same_size_triples(max_n=20):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.tuples(*(st.permutations(list(range(1, n + 1))).map(Permutation.of) for _ in range(3)))
    )


class TestDelta:
    def test_paper_pair(self, lam18, mu18):
        assert delta(lam18, mu18) == 3

    def test_row_against_column(self):
        assert delta(Partition((5,)), Partition((1, 1, 1, 1, 1))) == 4

    def test_identity(self, lam18):
        assert delta(lam18, lam18) == 0

    def test_unequal_sizes_give_half_integer(self):
        assert delta(Partition((2,)), Partition((1,))) == Fraction(1, 2)

    @settings(max_examples=60)
    @given(same_size_triples())
    def test_metric_axioms(self, triple):
        a, b, c = (shape(p) for p in triple)
        assert delta(a, b) == delta(b, a) >= 0
        assert (delta(a, b) == 0) == (a == b)
        assert delta(a, c) <= delta(a, b) + delta(b, c)


class TestAdjacentDistance:
    def test_zero_on_equal(self, pi18):
        assert adjacent_distance(pi18, pi18) == 0

    @pytest.mark.parametrize("side", ["left", "right"])
    def test_identity_to_reversal(self, side):
        n = 7
        rev = Permutation(tuple(range(n, 0, -1)))
        assert adjacent_distance(Permutation.identity(n), rev, side) == n * (n - 1) // 2

    def test_construction_pair(self, pi18, tau18):
        assert adjacent_distance(pi18, tau18, Side.LEFT) == 1

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            adjacent_distance(Permutation.identity(3), Permutation.identity(4))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_left_on_inverses_is_right(self, n):
        group = all_permutations(n)
        for pi in group:
            for tau in group:
                assert adjacent_distance(pi, tau, "left") == adjacent_distance(inverse(pi), inverse(tau), "right")

    @given(perms(max_n=12), perms(max_n=12))
    def test_symmetric(self, pi, tau):
        if pi.n == tau.n:
            assert adjacent_distance(pi, tau, "right") == adjacent_distance(tau, pi, "right")

    @given(st.lists(st.integers(), max_size=40))
    def test_merge_count_matches_naive(self, values):
        assert inversions(values) == inversions_naive(values)


class TestSwaps:
    def test_left_swap_on_identity(self):
        assert apply_adjacent(Permutation.identity(4), 1, "left").to_list() == [2, 1, 3, 4]

    def test_left_swap_builds_construction_partner(self, pi18, tau18):
        assert apply_adjacent(pi18, 9, Side.LEFT) == tau18

    @given(perms(min_n=2), st.data())
    def test_swap_is_involution(self, pi, data):
        i = data.draw(st.integers(min_value=1, max_value=pi.n - 1))
        for side in Side:
            assert apply_adjacent(apply_adjacent(pi, i, side), i, side) == pi

    def test_index_out_of_range(self):
        with pytest.raises(DomainError):
            apply_adjacent(Permutation.identity(3), 3)

    def test_arbitrary_transposition(self):
        assert apply_transposition(Permutation((1, 2, 3)), 1, 3, "right").to_list() == [3, 2, 1]
        assert apply_transposition(Permutation((2, 1, 3)), 1, 3, "left").to_list() == [2, 3, 1]

    def test_swap_direction(self):
        ident = Permutation.identity(3)
        assert swap_direction(ident, 1, "left") == "s"
        assert swap_direction(Permutation((2, 1, 3)), 1, "right") == "r"

    def test_bad_side(self):
        with pytest.raises(ValidationError):
            Side.of("up")


class TestAnatomy:
    def test_paper_pair(self, lam18, mu18):
        a = anatomy(lam18, mu18)
        assert sorted(a.sym_diff_cells) == [(1, 6), (2, 5), (3, 4), (4, 3), (5, 2), (6, 1)]
        assert a.intersection_area == 15
        assert a.union_shape == Partition((6, 5, 4, 3, 2, 1))

    def test_equal_diagrams(self, lam18):
        a = anatomy(lam18, lam18)
        assert a.sym_diff_cells == []
        assert a.intersection_area == lam18.n

    @given(perms(max_n=15), perms(max_n=15))
    def test_symmetric_difference_is_twice_delta(self, pi, tau):
        if pi.n == tau.n:
            lam, mu = shape(pi), shape(tau)
            assert len(anatomy(lam, mu).sym_diff_cells) == 2 * delta(lam, mu)

    def test_exclusivity(self, lam18, mu18):
        assert row_column_exclusivity(lam18, mu18)
        assert not row_column_exclusivity(Partition((3,)), Partition((1, 1, 1)))


class TestPrefixInequalities:
    @pytest.mark.parametrize("side", list(Side))
    def test_single_swaps(self, side):
        for pi in all_permutations(5):
            for i in range(1, 5):
                tau = apply_adjacent(pi, i, side)
                r, s = (0, 1) if swap_direction(pi, i, side) == "s" else (1, 0)
                assert check_prefix_inequalities(shape(pi), shape(tau), r, s).holds

    def test_equal_shapes(self, lam18):
        assert check_prefix_inequalities(lam18, lam18, 0, 0).holds

    def test_reports_first_violation(self):
        report = check_prefix_inequalities(Partition((1, 1)), Partition((2,)), 0, 0)
        assert not report.holds
        assert report.first_violation == 1

    def test_negative_counts_rejected(self, lam18):
        with pytest.raises(DomainError):
            check_prefix_inequalities(lam18, lam18, -1, 0)

    def test_prefix_deviation(self):
        assert prefix_deviation(Partition((2,)), Partition((1, 1))) == 1


class TestBlocks:
    def test_alternating_unit_blocks(self, lam18, mu18):
        blocks = decompose_blocks(lam18, mu18)
        assert len(blocks) == 6
        assert all(b.area == 1 for b in blocks)
        assert [b.kind for b in blocks] == [BlockKind.LAMBDA, BlockKind.MU] * 3

    def test_equal_diagrams_have_no_blocks(self, lam18):
        assert decompose_blocks(lam18, lam18) == []

    def test_equal_rows_join_pre_blocks(self):
        lam, mu = Partition((4, 2, 2)), Partition((3, 2, 1, 1, 1))
        first, second = decompose_blocks(lam, mu)
        assert first.kind is BlockKind.LAMBDA
        assert first.rows == (1, 3)
        assert first.pre_blocks == 2
        assert first.area == 2
        assert (first.box_height, first.box_width) == (3, 3)
        assert second.kind is BlockKind.MU
        assert (second.box_height, second.box_width) == (2, 1)

    @given(perms(max_n=15), perms(max_n=15))
    def test_areas_sum_to_twice_delta(self, pi, tau):
        if pi.n == tau.n:
            lam, mu = shape(pi), shape(tau)
            blocks = decompose_blocks(lam, mu)
            assert sum(b.area for b in blocks) == 2 * delta(lam, mu)
            assert all(b.area <= b.box_height * b.box_width for b in blocks)


class TestSingleSwapBound:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_shapes_move_by_at_most_root_half_n(self, n):
        cap = math.sqrt(n / 2)
        for pi in all_permutations(n):
            lam = shape(pi)
            for i in range(1, n):
                for side in Side:
                    mu = shape(apply_adjacent(pi, i, side))
                    assert delta(lam, mu) <= cap
                    assert row_column_exclusivity(lam, mu)

    @pytest.mark.slow
    def test_shapes_move_by_at_most_root_half_n_on_s8(self):
        n = 8
        for pi in all_permutations(n):
            lam = shape(pi)
            for i in range(1, n):
                for side in Side:
                    mu = shape(apply_adjacent(pi, i, side))
                    assert delta(lam, mu) <= 2
                    assert row_column_exclusivity(lam, mu)


class TestLipschitzRatio:
    def test_construction_pair(self, pi18, tau18):
        assert lipschitz_ratio(pi18, tau18) == Fraction(3)

    def test_two_elements(self):
        assert lipschitz_ratio(Permutation((1, 2)), Permutation((2, 1))) == 1

    def test_simulation_pair_on_the_right(self, simulation18):
        tau = apply_adjacent(simulation18, 10, Side.RIGHT)
        assert lipschitz_ratio(simulation18, tau, Side.RIGHT) == 3

    def test_equal_permutations(self, pi18):
        with pytest.raises(DomainError):
            lipschitz_ratio(pi18, pi18)
