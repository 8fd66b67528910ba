"""Tests for partitions, tableaux and RSK."""

import pytest
from hypothesis import given, settings

from src.core.exceptions import DuplicateEntryError, ShapeMismatchError, ValidationError
from src.tableaux import (
    Partition,
    Permutation,
    Tableau,
    TableauPair,
    complement,
    compose,
    conjugate,
    inverse,
    inverse_rsk,
    longest_increasing_subsequence,
    reverse,
    row_insert,
    rsk,
    shape,
    validate_tableau,
)

from .conftest import all_permutations, perms


class TestPartition:
    def test_parts_must_be_weakly_decreasing(self):
        with pytest.raises(ValidationError) as exc:
            Partition((2, 3))
        assert exc.value.invariant == "weakly-decreasing"

    def test_parts_must_be_positive(self):
        with pytest.raises(ValidationError):
            Partition((2, 0, 1))

    def test_of_drops_zeros(self):
        assert Partition.of([3, 1, 0, 0]) == Partition((3, 1))

    def test_parse(self):
        assert Partition.parse("6 4 4 2 2").to_list() == [6, 4, 4, 2, 2]

    def test_missing_parts_read_as_zero(self):
        lam = Partition((2, 1))
        assert lam[5] == 0
        assert lam.prefix_sums(4) == [2, 3, 3, 3]

    def test_conjugate(self, lam18, mu18):
        assert conjugate(lam18) == mu18
        assert conjugate(Partition((3,))) == Partition((1, 1, 1))

    def test_cells(self):
        assert Partition((2, 1)).cells() == [(1, 1), (1, 2), (2, 1)]

    @given(perms())
    def test_conjugate_is_involution(self, pi):
        lam = shape(pi)
        assert conjugate(conjugate(lam)) == lam


class TestPermutation:
    def test_rejects_non_bijection(self):
        with pytest.raises(ValidationError) as exc:
            Permutation((1, 1, 2))
        assert exc.value.invariant == "bijection"

    def test_rejects_garbage_text(self):
        with pytest.raises(ValidationError):
            Permutation.parse("1 two 3")

    def test_one_based_access(self):
        pi = Permutation.parse("3 1 2")
        assert pi[1] == 3
        assert pi.positions()[3] == 1

    def test_compose(self):
        sigma = Permutation((2, 3, 1))
        rho = Permutation((3, 1, 2))
        # σ(ρ(1)) = σ(3) = 1
        assert compose(sigma, rho) == Permutation((1, 2, 3))

    @given(perms())
    def test_inverse_composes_to_identity(self, pi):
        assert compose(pi, inverse(pi)) == Permutation.identity(pi.n)

    def test_reverse_and_complement(self):
        pi = Permutation((2, 3, 1))
        assert reverse(pi) == Permutation((1, 3, 2))
        assert complement(pi) == Permutation((2, 1, 3))


class TestRowInsertion:
    def test_insert_bumps(self):
        t = Tableau(((1, 3),))
        t2, cell = row_insert(t, 2)
        assert t2.to_list() == [[1, 2], [3]]
        assert cell == (2, 1)
        assert t.to_list() == [[1, 3]]

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateEntryError):
            row_insert(Tableau(((1, 3),)), 3)

    def test_non_positive_rejected(self):
        with pytest.raises(ValidationError):
            row_insert(Tableau(), 0)

    def test_validate_reports_column_violation(self):
        report = validate_tableau(Tableau(((2, 3), (1, 4))))
        assert not report.valid
        assert "column-increasing" in report.invariants()

    def test_checked_raises_on_first_violation(self):
        with pytest.raises(ValidationError):
            Tableau.checked([[1], [2, 3]])

    def test_empty_rows_are_kept(self):
        t = Tableau(((1, 2), (), (3,)))
        assert t.rows == ((1, 2), (), (3,))
        report = validate_tableau(t)
        assert not report.valid
        assert report.invariants().count("shape-monotone") == 2

    def test_trailing_empty_row_reported(self):
        report = validate_tableau(Tableau(((1, 2), ())))
        assert report.invariants() == ["shape-monotone"]

    def test_insert_skips_empty_rows(self):
        t2, cell = row_insert(Tableau(((1, 3), ())), 2)
        assert t2.to_list() == [[1, 2], [3]]
        assert cell == (2, 1)


class TestRSK:
    def test_small_example(self):
        pair = rsk(Permutation.parse("3 1 2"))
        assert pair.p.to_list() == [[1, 2], [3]]
        assert pair.q.to_list() == [[1, 3], [2]]
        assert pair.shape == Partition((2, 1))

    def test_identity_and_reversal(self):
        assert shape(Permutation.identity(5)) == Partition((5,))
        assert shape(Permutation((5, 4, 3, 2, 1))) == Partition((1, 1, 1, 1, 1))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_bijection_on_small_groups(self, n):
        for pi in all_permutations(n):
            pair = rsk(pi)
            assert pair.p.shape == pair.q.shape
            assert pair.p.is_standard() and pair.q.is_standard()
            assert inverse_rsk(pair) == pi

    @given(perms(max_n=15))
    def test_naive_insertion_agrees(self, pi):
        assert rsk(pi, naive=True) == rsk(pi)

    @given(perms(max_n=15))
    def test_inverse_permutation_swaps_tableaux(self, pi):
        pair, inv_pair = rsk(pi), rsk(inverse(pi))
        assert inv_pair.p == pair.q and inv_pair.q == pair.p

    @given(perms(max_n=15))
    def test_reverse_gives_conjugate_shape(self, pi):
        assert shape(reverse(pi)) == conjugate(shape(pi))
        assert shape(complement(pi)) == conjugate(shape(pi))

    @settings(max_examples=50)
    @given(perms(max_n=30))
    def test_first_row_is_longest_increasing_subsequence(self, pi):
        assert shape(pi)[0] == longest_increasing_subsequence(pi)

    def test_inverse_rsk_rejects_unequal_shapes(self):
        pair = TableauPair(Tableau(((1, 2),)), Tableau(((1,), (2,))))
        with pytest.raises(ShapeMismatchError) as exc:
            inverse_rsk(pair)
        assert exc.value.invariant == "equal-shapes"

    def test_inverse_rsk_rejects_non_standard(self):
        pair = TableauPair(Tableau(((1, 3),)), Tableau(((1, 2),)))
        with pytest.raises(ShapeMismatchError) as exc:
            inverse_rsk(pair)
        assert exc.value.invariant == "standard-P"
