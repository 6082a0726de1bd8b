"""Tests for finite field construction and arithmetic."""

from __future__ import annotations

import pytest

from paley_lab.core.field import (
    MAX_FIELD_ORDER,
    FiniteField,
    field_of_order,
    make_field,
    prime_power_parts,
    prime_powers,
)
from paley_lab.errors import InvalidArgumentError


class TestConstruction:
    """Tests for make_field and its validation."""

    def test_prime_field(self, f13: FiniteField):
        assert (f13.p, f13.e, f13.q) == (13, 1, 13)
        assert f13.omega == 2

    def test_extension_field_modulus(self, f9: FiniteField):
        # x^2 + 1 is the smallest monic irreducible quadratic over F_3
        assert f9.modulus == (1, 0, 1)
        assert f9.omega == 4

    def test_elements_in_encoding_order(self, f9: FiniteField):
        assert f9.elements() == list(range(9))

    def test_cached_instance(self):
        assert make_field(3, 2) is make_field(3, 2)

    def test_equality_by_parameters(self, f9: FiniteField):
        assert f9 == field_of_order(9)
        assert hash(f9) == hash(field_of_order(9))
        assert f9 != make_field(3)

    def test_non_prime_characteristic(self):
        with pytest.raises(InvalidArgumentError, match="prime"):
            make_field(9)

    def test_bad_degree(self):
        with pytest.raises(InvalidArgumentError, match="extension degree"):
            make_field(3, 0)

    def test_order_bound(self):
        with pytest.raises(InvalidArgumentError, match=str(MAX_FIELD_ORDER)):
            make_field(2, 21)

    def test_field_of_order_rejects_composites(self):
        with pytest.raises(InvalidArgumentError, match="not a prime power"):
            field_of_order(12)


class TestArithmetic:
    """Field axioms checked exhaustively on small fields."""

    @pytest.mark.parametrize("q", [2, 4, 5, 8, 9, 25, 27])
    def test_inverses(self, q: int):
        F = field_of_order(q)
        for x in range(1, q):
            assert F.mul(x, F.inv(x)) == 1
            assert F.add(x, F.neg(x)) == 0

    @pytest.mark.parametrize("q", [4, 9, 25])
    def test_distributive(self, q: int):
        F = field_of_order(q)
        for a in range(q):
            for b in range(q):
                for c in range(0, q, 3):
                    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))

    def test_division_by_zero(self, f7: FiniteField):
        with pytest.raises(ZeroDivisionError):
            f7.inv(0)
        with pytest.raises(ZeroDivisionError):
            f7.div(3, 0)
        with pytest.raises(ZeroDivisionError):
            f7.pow(0, -1)

    def test_pow_conventions(self, f7: FiniteField):
        assert f7.pow(0, 0) == 1
        assert f7.pow(3, 6) == 1
        assert f7.pow(3, -1) == f7.inv(3)

    @pytest.mark.parametrize("q", prime_powers(81))
    def test_frobenius_is_a_field_automorphism(self, q: int):
        F = field_of_order(q)
        for j in range(F.e):
            images = [F.frobenius(x, j) for x in range(q)]
            assert sorted(images) == list(range(q))
            for x in range(q):
                for y in range(q):
                    assert images[F.add(x, y)] == F.add(images[x], images[y])
                    assert images[F.mul(x, y)] == F.mul(images[x], images[y])

    def test_frobenius_range(self, f9: FiniteField):
        with pytest.raises(InvalidArgumentError):
            f9.frobenius(1, 2)

    def test_element_check(self, f5: FiniteField):
        with pytest.raises(InvalidArgumentError):
            f5.add(5, 1)

    def test_primitive_root_order(self, f9: FiniteField):
        assert f9.multiplicative_order(f9.omega) == 8
        assert sorted(f9.exp(i) for i in range(8)) == list(range(1, 9))

    def test_log_of_zero(self, f5: FiniteField):
        with pytest.raises(InvalidArgumentError):
            f5.log(0)


class TestEncoding:
    """Tests for the base-p element encoding."""

    def test_digits_round_trip(self, f9: FiniteField):
        for x in range(9):
            assert f9.from_digits(f9.digits(x)) == x

    def test_format_element(self, f9: FiniteField):
        assert f9.format_element(0) == "0"
        assert f9.format_element(4) == "x+1"
        assert f9.format_element(5) == "x+2"
        assert f9.format_element(6) == "2x"


class TestPrimePowers:
    """Tests for prime power helpers."""

    def test_parts(self):
        assert prime_power_parts(49) == (7, 2)
        assert prime_power_parts(13) == (13, 1)
        assert prime_power_parts(1) is None
        assert prime_power_parts(12) is None

    def test_listing(self):
        assert prime_powers(30) == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]

    def test_residue_filter(self):
        assert prime_powers(30, residue_mod_4=1) == [5, 9, 13, 17, 25, 29]
        assert prime_powers(30, residue_mod_4=3) == [3, 7, 11, 19, 23, 27]
