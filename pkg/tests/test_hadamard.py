"""Tests for sign matrices, Hadamard constructions and designs."""

from __future__ import annotations

import numpy as np
import pytest

from paley_lab.core.field import FiniteField, field_of_order, make_field
from paley_lab.core.hadamard import (
    SignMatrix,
    compound_counts,
    compound_dimensions,
    design_parameters,
    design_to_matrix,
    hadamard_graph,
    is_hadamard,
    is_hadamard_automorphism,
    jacobsthal_matrix,
    kronecker,
    make_design,
    matrix_to_design,
    normalize,
    paley_I,
    paley_II,
    paley_III,
    paley_III_compound,
    paley_coverage,
    pg_design,
    qr_design,
    sign_matrix_from_rows,
    signed_permutation_matrix,
    simplex_vertices,
    sylvester,
)
from paley_lab.errors import InvalidArgumentError, ResourceLimitError


class TestSignMatrix:
    """Tests for the SignMatrix value type."""

    def test_rejects_other_entries(self):
        with pytest.raises(InvalidArgumentError, match="entries"):
            sign_matrix_from_rows([[1, 2], [1, 1]])

    def test_rejects_non_square(self):
        with pytest.raises(InvalidArgumentError, match="square"):
            sign_matrix_from_rows([[1, 1, 1], [1, 1, 1]])

    def test_read_only(self):
        H = sylvester(1)
        with pytest.raises(ValueError):
            H.entries[0, 0] = -1

    def test_equality_and_negation(self):
        assert -(-sylvester(2)) == sylvester(2)
        assert -sylvester(2) != sylvester(2)


class TestIsHadamard:
    """Tests for the exact orthogonality check."""

    def test_reports_failing_pair(self):
        check = is_hadamard(sign_matrix_from_rows([[1, 1, 1, 1]] * 4))
        assert not check
        assert check.failing_pair == (0, 1)

    def test_zero_entry_rejected(self):
        with pytest.raises(InvalidArgumentError, match="0 entries"):
            is_hadamard(sign_matrix_from_rows([[1, 0], [1, 1]]))

    def test_order_one(self):
        assert is_hadamard(sylvester(0))


class TestJacobsthal:
    """Tests for the Jacobsthal matrix Q."""

    @pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 25, 27])
    def test_identities(self, q: int):
        Q = jacobsthal_matrix(field_of_order(q)).entries
        J = np.ones((q, q), dtype=np.int64)
        assert np.array_equal(Q @ Q.T, q * np.eye(q, dtype=np.int64) - J)
        assert not (Q @ J).any()

    def test_symmetry_follows_q_mod_4(self, f13: FiniteField, f7: FiniteField):
        assert jacobsthal_matrix(f13).is_symmetric
        assert jacobsthal_matrix(f7).is_skew_symmetric

    def test_even_q_rejected(self):
        with pytest.raises(InvalidArgumentError):
            jacobsthal_matrix(make_field(2, 3))


class TestConstructions:
    """Tests for the Sylvester and Paley constructions."""

    @pytest.mark.parametrize("k", range(7))
    def test_sylvester(self, k: int):
        H = sylvester(k)
        assert H.order == 2**k
        assert is_hadamard(H)
        assert H.is_symmetric

    @pytest.mark.parametrize("q", [3, 7, 11, 19, 23, 27, 31, 43, 47])
    def test_paley_I(self, q: int):
        H = paley_I(q)
        assert H.order == q + 1
        assert is_hadamard(H)
        assert H.is_normalized

    @pytest.mark.parametrize("q", [5, 9, 13, 17, 25, 29])
    def test_paley_II(self, q: int):
        H = paley_II(q)
        assert H.order == 2 * (q + 1)
        assert is_hadamard(H)
        assert H.is_symmetric

    def test_wrong_residue(self):
        with pytest.raises(InvalidArgumentError, match="3 mod 4"):
            paley_I(9)
        with pytest.raises(InvalidArgumentError, match="1 mod 4"):
            paley_II(7)

    def test_not_a_prime_power(self):
        with pytest.raises(InvalidArgumentError, match="odd prime power"):
            paley_I(15)

    def test_kronecker(self):
        H = kronecker(paley_I(3), sylvester(1))
        assert H.order == 8
        assert is_hadamard(H)

    def test_kronecker_rejects_non_hadamard(self):
        with pytest.raises(InvalidArgumentError):
            kronecker(sign_matrix_from_rows([[1, 1], [1, 1]]), sylvester(1))


class TestPaleyIII:
    """Tests for the partition of sign vectors into Hadamard matrices."""

    @pytest.mark.parametrize("k", [2, 3])
    def test_partition(self, k: int):
        m = 2**k
        matrices = paley_III(k)
        assert len(matrices) == 2**m // m
        assert all(is_hadamard(H) for H in matrices)
        rows = [row for H in matrices for row in H.rows()]
        assert len(set(rows)) == len(rows) == 2**m

    def test_bounds(self):
        with pytest.raises(InvalidArgumentError):
            paley_III(1)
        with pytest.raises(ResourceLimitError):
            paley_III(5)


class TestNormalize:
    """Tests for normalization."""

    @pytest.mark.parametrize("H", [paley_II(5), paley_I(11), -sylvester(3)])
    def test_normalized_and_still_hadamard(self, H: SignMatrix):
        N = normalize(H)
        assert N.is_normalized
        assert is_hadamard(N)

    def test_idempotent(self):
        N = normalize(paley_II(9))
        assert normalize(N) == N


class TestDesigns:
    """Tests for Hadamard 2-designs."""

    @pytest.mark.parametrize("q", [3, 7, 11, 19, 23])
    def test_qr_designs(self, q: int):
        assert design_parameters(qr_design(q))

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_pg_designs(self, k: int):
        D = pg_design(k)
        assert D.points == 2**k - 1
        assert design_parameters(D)

    def test_matrix_to_design(self):
        D = matrix_to_design(paley_I(7))
        assert D.points == 7
        assert all(len(b) == 3 for b in D.blocks)
        assert design_parameters(D)

    @pytest.mark.parametrize("q", [7, 11, 19])
    def test_round_trip(self, q: int):
        D = qr_design(q)
        H = design_to_matrix(D)
        assert H.order == q + 1
        assert is_hadamard(H)
        assert matrix_to_design(H) == D

    def test_bad_design_reason(self):
        check = design_parameters(make_design(7, [[0, 1, 2]] * 7))
        assert not check
        assert "meet" in (check.reason or "")

    def test_design_to_matrix_rejects_bad_design(self):
        with pytest.raises(InvalidArgumentError, match="invalid Hadamard design"):
            design_to_matrix(make_design(5, [[0, 1]] * 5))

    def test_small_matrix_has_no_design(self):
        with pytest.raises(InvalidArgumentError, match="order m >= 4"):
            matrix_to_design(sylvester(1))


class TestCoverage:
    """Tests for the orders reached by the Paley constructions."""

    def test_exceptions_up_to_200(self):
        report = paley_coverage(200)
        assert {92, 116, 156, 184, 188} <= set(report.exceptions)
        # 172 = 4 * 43 needs a construction other than one Paley factor times 2^a
        assert 172 in report.exceptions
        assert len(report.exceptions) == 6

    def test_small_orders(self):
        report = paley_coverage(40)
        assert report.achievable == tuple(range(4, 41, 4))
        assert report.exceptions == ()

    def test_compound_dimensions(self):
        assert compound_dimensions(12) == [3, 7, 11]

    def test_limit_too_small(self):
        with pytest.raises(InvalidArgumentError):
            paley_coverage(3)


class TestSimplices:
    """Tests for regular simplices in the cube."""

    def test_vertices_pairwise_dot(self):
        vertices = simplex_vertices(normalize(paley_I(7)))
        assert len(vertices) == 8
        for i, a in enumerate(vertices):
            for b in vertices[i + 1 :]:
                assert sum(x * y for x, y in zip(a, b)) == -1

    def test_requires_normalized(self):
        with pytest.raises(InvalidArgumentError, match="normalized"):
            simplex_vertices(-sylvester(2))

    @pytest.mark.parametrize(("k", "count"), [(2, 2), (3, 16)])
    def test_compound_partitions_cube(self, k: int, count: int):
        compound = paley_III_compound(k)
        assert compound.dimension == 2**k - 1
        assert compound.count == count
        assert compound.partitions_cube

    def test_compound_counts(self):
        counts = compound_counts(2, 168)
        assert (counts.d1, counts.D) == (30, 480)
        counts = compound_counts(3, 660)
        assert (counts.d1, counts.D) == (60480, 10321920)

    def test_compound_counts_divisibility(self):
        with pytest.raises(InvalidArgumentError, match="does not divide"):
            compound_counts(2, 11)


class TestMonomialAutomorphisms:
    """Tests for P H Q^T = H with signed permutation matrices."""

    def test_identity_pair(self):
        I = signed_permutation_matrix([0, 1, 2, 3])
        assert is_hadamard_automorphism(sylvester(2), I, I)

    def test_row_swap_with_column_sign(self):
        P = signed_permutation_matrix([1, 0])
        Q = signed_permutation_matrix([0, 1], [1, -1])
        assert is_hadamard_automorphism(sylvester(1), P, Q)
        assert not is_hadamard_automorphism(sylvester(1), P, signed_permutation_matrix([0, 1]))

    def test_rejects_non_monomial(self):
        I = signed_permutation_matrix([0, 1])
        with pytest.raises(InvalidArgumentError, match="signed permutation"):
            is_hadamard_automorphism(sylvester(1), sylvester(1), I)


class TestHadamardGraph:
    """Tests for the graph read off a normalized core."""

    @pytest.mark.parametrize("q", [3, 7, 11])
    def test_paley_I_gives_tournament(self, q: int):
        T = hadamard_graph(paley_I(q))
        assert T.n == q
        assert T.is_tournament()
        assert all(T.degree(u) == (q - 1) // 2 for u in range(q))

    def test_paley_II_gives_graph(self):
        G = hadamard_graph(paley_II(5))
        assert not G.directed
        assert G.n == 11
