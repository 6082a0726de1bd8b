"""Tests for quadratic residues, chi and the classical character sums."""

from __future__ import annotations

import pytest

from paley_lab.core.field import FiniteField, field_of_order, make_field
from paley_lab.core.residues import (
    ResidueSet,
    canonical_two_squares,
    char_pair_sum,
    character_table,
    chi,
    chi_by_power,
    jacobsthal_identity_sum,
    jacobsthal_phi,
    non_residues,
    perron_count,
    perron_expected,
    perron_nonresidue_count,
    phi_square_sum,
    phi_square_sum_expected,
    phi_squared_values,
    power_sum,
    squares,
    two_squares_gauss,
    two_squares_jacobsthal,
    two_squares_search,
)
from paley_lab.errors import InvalidArgumentError

ODD_PRIME_POWERS_TO_49 = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49]


class TestSquares:
    """Tests for the residue set and chi."""

    def test_squares_mod_13(self, f13: FiniteField):
        assert squares(f13) == frozenset({1, 3, 4, 9, 10, 12})
        assert non_residues(f13) == frozenset({2, 5, 6, 7, 8, 11})

    @pytest.mark.parametrize("q", [5, 7, 9, 25, 27])
    def test_half_are_squares(self, q: int):
        assert len(squares(field_of_order(q))) == (q - 1) // 2

    def test_chi_values(self, f7: FiniteField):
        assert [chi(f7, x) for x in range(7)] == [0, 1, 1, -1, 1, -1, -1]

    def test_chi_by_power_agrees(self, f9: FiniteField):
        assert [chi_by_power(f9, x) for x in range(9)] == list(character_table(f9))

    def test_even_field_rejected(self):
        with pytest.raises(InvalidArgumentError, match="odd order"):
            chi(make_field(2, 2), 1)

    def test_symmetry_matches_q_mod_4(self):
        assert ResidueSet.of(field_of_order(13)).is_symmetric
        assert not ResidueSet.of(field_of_order(11)).is_symmetric

    def test_residue_set_with_zero(self, f5: FiniteField):
        S0 = ResidueSet.of(f5, with_zero=True)
        assert 0 in S0
        assert len(S0) == 3


class TestCharacterSums:
    """Exact character sums over every odd prime power up to 49."""

    @pytest.mark.parametrize("q", ODD_PRIME_POWERS_TO_49)
    def test_pair_sums(self, q: int):
        F = field_of_order(q)
        for u in range(q):
            for v in range(q):
                assert char_pair_sum(F, u, v) == (q - 1 if u == v else -1)

    @pytest.mark.parametrize("q", ODD_PRIME_POWERS_TO_49)
    def test_chi_sums_to_zero(self, q: int):
        F = field_of_order(q)
        assert sum(chi(F, x) for x in range(q)) == 0

    @pytest.mark.parametrize("q", [5, 7, 9, 13, 27])
    def test_identity_sums(self, q: int):
        F = field_of_order(q)
        for c in range(q):
            assert jacobsthal_identity_sum(F, c) == (q - 1 if c == 0 else -1)

    def test_injected_character_changes_the_sum(self, f7: FiniteField):
        def constant(F: FiniteField, x: int) -> int:
            return 1

        assert char_pair_sum(f7, 0, 1, character=constant) == 7


class TestTwoSquares:
    """Jacobsthal's and Gauss's representations of p = a^2 + b^2."""

    def test_jacobsthal_13(self):
        F = make_field(13)
        assert jacobsthal_phi(F, 1) == 6
        assert jacobsthal_phi(F, 2) == -4
        assert two_squares_jacobsthal(13) == (3, -2)

    def test_gauss_13(self):
        a, b = two_squares_gauss(13)
        assert a * a + b * b == 13
        assert canonical_two_squares(a, b) == (2, 3)

    @pytest.mark.parametrize("p", [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 997])
    def test_methods_agree_with_search(self, p: int):
        oracle = two_squares_search(p)
        assert canonical_two_squares(*two_squares_jacobsthal(p)) == oracle
        assert canonical_two_squares(*two_squares_gauss(p)) == oracle

    def test_requires_1_mod_4(self):
        with pytest.raises(InvalidArgumentError, match="1 mod 4"):
            two_squares_jacobsthal(7)
        with pytest.raises(InvalidArgumentError, match="not prime"):
            two_squares_gauss(25)

    def test_phi_over_extension_rejected(self, f9: FiniteField):
        with pytest.raises(InvalidArgumentError, match="prime fields"):
            jacobsthal_phi(f9, 1)


class TestPhi:
    """Properties of Jacobsthal's sum phi."""

    @pytest.mark.parametrize("p", [5, 13, 17, 29])
    def test_square_sum(self, p: int):
        assert phi_square_sum(p) == phi_square_sum_expected(p) == 2 * p * (p - 1)

    def test_square_sum_3_mod_4(self):
        assert phi_square_sum_expected(7) == 0
        assert phi_square_sum(7) == 0

    def test_squared_values_give_4p(self):
        r2, n2 = phi_squared_values(13)
        assert r2 + n2 == 4 * 13

    @pytest.mark.parametrize("p", [7, 11, 13])
    def test_scaling(self, p: int):
        F = make_field(p)
        for e in range(p):
            for x in range(1, p):
                assert jacobsthal_phi(F, e) == chi(F, x) * jacobsthal_phi(F, e * x * x % p)


class TestPerron:
    """Intersections of translated residue sets."""

    @pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 25, 27])
    @pytest.mark.parametrize("with_zero", [True, False])
    def test_counts_match_prediction(self, q: int, with_zero: bool):
        F = field_of_order(q)
        for a in range(1, q):
            assert perron_count(F, a, with_zero) == perron_expected(F, a, with_zero)

    @pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
    def test_non_residues_by_complement(self, q: int):
        F = field_of_order(q)
        for a in range(1, q):
            assert perron_nonresidue_count(F, a) == perron_count(F, a) - 1

    def test_zero_shift_rejected(self, f5: FiniteField):
        with pytest.raises(InvalidArgumentError):
            perron_count(f5, 0)


class TestPowerSums:
    """Sum of w^k over F_p."""

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_values(self, p: int):
        for k in range(1, 2 * p):
            assert power_sum(p, k) == (p - 1 if k % (p - 1) == 0 else 0)

    def test_bad_exponent(self):
        with pytest.raises(InvalidArgumentError):
            power_sum(5, 0)
