"""Tests for the coset-preserving permutation searches."""

from __future__ import annotations

import pytest

from paley_lab.core.characterize import (
    carlitz_permutations,
    frobenius_step,
    lenstra_normalizer_members,
    mcconnel_group,
    mcconnel_order_report,
    mcconnel_permutations,
    predicted_frobenius_maps,
    verify_paley_automorphisms,
)
from paley_lab.core.field import FiniteField, field_of_order, make_field
from paley_lab.core.groups import generalized_paley_affine_group
from paley_lab.core.perm import Permutation
from paley_lab.errors import InvalidArgumentError, ResourceLimitError


class TestCarlitz:
    """Maps fixing 0 and 1 that preserve chi of every difference."""

    @pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 25, 27])
    def test_only_frobenius_powers(self, q: int):
        F = field_of_order(q)
        assert carlitz_permutations(F) == predicted_frobenius_maps(F)

    def test_f25_has_two(self):
        found = carlitz_permutations(make_field(5, 2))
        assert len(found) == 2
        assert found[0].is_identity

    def test_prime_field_has_identity_only(self, f13: FiniteField):
        assert carlitz_permutations(f13) == [Permutation.identity(13)]

    def test_even_q_rejected(self):
        with pytest.raises(InvalidArgumentError, match="odd q"):
            carlitz_permutations(make_field(2, 3))

    def test_order_bound(self):
        with pytest.raises(ResourceLimitError):
            carlitz_permutations(make_field(7, 2), max_q=25)


class TestMcConnel:
    """Maps preserving the cosets of a subgroup of index d."""

    @pytest.mark.parametrize(("q", "d"), [(13, 3), (13, 4), (13, 6), (9, 2), (9, 4)])
    def test_only_predicted_maps(self, q: int, d: int):
        F = field_of_order(q)
        assert mcconnel_permutations(F, d) == predicted_frobenius_maps(F, d)

    def test_predictions(self, f9: FiniteField):
        assert len(predicted_frobenius_maps(f9, 2)) == 2
        assert predicted_frobenius_maps(f9, 4) == [Permutation.identity(9)]

    @pytest.mark.parametrize("d", [1, 5, 12])
    def test_index_must_be_proper_divisor(self, f13: FiniteField, d: int):
        with pytest.raises(InvalidArgumentError, match="proper divisor"):
            mcconnel_permutations(f13, d)

    def test_frobenius_step(self, f9: FiniteField):
        assert frobenius_step(f9, 2) == 1
        assert frobenius_step(f9, 4) == 2
        assert frobenius_step(make_field(5, 2), 3) == 2

    def test_group_matches_generalized_paley_group(self, f13: FiniteField):
        assert mcconnel_group(f13, 3) == generalized_paley_affine_group(f13, 4)


class TestMcConnelOrders:
    """The order of the coset-preserving group against the closed form."""

    def test_prime_field(self, f13: FiniteField):
        report = mcconnel_order_report(f13, 2)
        assert report.computed == report.published == report.oracle == 78

    def test_quadratic_case(self, f9: FiniteField):
        report = mcconnel_order_report(f9, 2)
        assert report.computed == 72
        assert report.published_matches

    def test_published_formula_overcounts(self, f9: FiniteField):
        # gcd(m, e) counts the Frobenius even when d does not divide p - 1
        report = mcconnel_order_report(f9, 4)
        assert report.m == 2
        assert (report.computed, report.published, report.oracle) == (18, 36, 18)
        assert not report.published_matches
        assert report.oracle_matches


class TestLenstra:
    """Permutations that permute the difference classes."""

    def test_prime_field(self, f5: FiniteField):
        search = lenstra_normalizer_members(f5, 2)
        assert len(search.members) == 20
        assert search.kappa_count == 2
        assert search.ok

    def test_f9_index_4_is_agl_2_3(self, f9: FiniteField):
        search = lenstra_normalizer_members(f9, 4)
        assert len(search.members) == 432
        assert search.ok

    def test_order_bound(self):
        with pytest.raises(ResourceLimitError):
            lenstra_normalizer_members(make_field(17), 2)


class TestPaleyAutomorphisms:
    """Aut P(q) against the square-multiplier semilinear group."""

    @pytest.mark.parametrize(("p", "e"), [(5, 1), (3, 2), (13, 1), (17, 1)])
    def test_equal(self, p: int, e: int):
        F = make_field(p, e)
        report = verify_paley_automorphisms(F)
        assert report.equal
        assert report.automorphism_order == F.q * (F.q - 1) * e // 2

    def test_order_bound(self, f13: FiniteField):
        with pytest.raises(ResourceLimitError):
            verify_paley_automorphisms(f13, max_q=9)

    def test_q_49(self):
        assert verify_paley_automorphisms(make_field(7, 2)).equal
