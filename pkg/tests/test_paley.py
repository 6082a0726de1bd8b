"""Tests for the Paley family of Cayley graphs."""

from __future__ import annotations

import pytest

from paley_lab.core.field import FiniteField, field_of_order, make_field, prime_powers
from paley_lab.core.graph import (
    SrgParams,
    are_isomorphic,
    complement,
    is_self_complementary,
    relabel,
    srg_params,
)
from paley_lab.core.groups import multiplication
from paley_lab.core.paley import (
    additive_span,
    generalized_paley,
    multiplicative_subgroup,
    paley_graph,
    paley_tournament,
    peisert_connection_set,
    peisert_graph,
    primitive_roots,
)
from paley_lab.core.residues import squares
from paley_lab.errors import InvalidArgumentError, NotConnectedError


class TestPaleyGraph:
    """Tests for P(q)."""

    @pytest.mark.parametrize("q", prime_powers(50, residue_mod_4=1))
    def test_strongly_regular(self, q: int):
        G = paley_graph(field_of_order(q))
        assert srg_params(G) == SrgParams(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4)

    def test_rejects_3_mod_4(self, f7: FiniteField):
        with pytest.raises(InvalidArgumentError, match="1 mod 4"):
            paley_graph(f7)

    def test_edges_are_square_differences(self, f13: FiniteField):
        G = paley_graph(f13)
        S = squares(f13)
        for u, v in G.edges():
            assert f13.sub(v, u) in S

    @pytest.mark.parametrize("q", [5, 9, 13, 17, 25])
    def test_non_residue_maps_onto_complement(self, q: int):
        F = field_of_order(q)
        G = paley_graph(F)
        S = squares(F)
        for a in range(1, q):
            if a not in S:
                assert relabel(G, multiplication(F, a)) == complement(G)

    @pytest.mark.parametrize("q", prime_powers(100, residue_mod_4=1))
    def test_conference_parameters(self, q: int):
        t = (q - 1) // 4
        params = srg_params(paley_graph(field_of_order(q)))
        assert params == SrgParams(4 * t + 1, 2 * t, t - 1, t)
        assert params.is_consistent()
        assert params.complement() == params


class TestPaleyTournament:
    """Tests for T(q)."""

    @pytest.mark.parametrize("q", [3, 7, 11, 19, 23, 27])
    def test_is_regular_tournament(self, q: int):
        T = paley_tournament(field_of_order(q))
        assert T.is_tournament()
        assert all(T.degree(u) == (q - 1) // 2 for u in range(q))

    def test_rejects_1_mod_4(self, f13: FiniteField):
        with pytest.raises(InvalidArgumentError, match="3 mod 4"):
            paley_tournament(f13)


class TestGeneralizedPaley:
    """Tests for the Cayley graphs on subgroups of F*."""

    def test_subgroup_of_order_4_in_f13(self, f13: FiniteField):
        assert multiplicative_subgroup(f13, 4) == frozenset({1, 5, 8, 12})

    def test_m_half_is_paley(self, f9: FiniteField):
        G, spec = generalized_paley(f9, 4)
        assert G == paley_graph(f9)
        assert spec.d == 2
        assert spec.lim_praeger_large

    def test_disconnected_subgroup(self, f9: FiniteField):
        # {1, -1} lies in the prime subfield
        assert additive_span(f9, multiplicative_subgroup(f9, 2)) == frozenset({0, 1, 2})
        with pytest.raises(NotConnectedError):
            generalized_paley(f9, 2)

    def test_odd_m_rejected_for_odd_q(self, f13: FiniteField):
        with pytest.raises(InvalidArgumentError, match="even"):
            generalized_paley(f13, 3)

    def test_m_must_divide(self, f13: FiniteField):
        with pytest.raises(InvalidArgumentError, match="does not divide"):
            generalized_paley(f13, 5)

    def test_index_3_in_f13(self, f13: FiniteField):
        G, spec = generalized_paley(f13, 4)
        assert spec.d == 3
        assert spec.lim_praeger_large
        assert all(G.degree(u) == 4 for u in range(13))

    def test_index_3_in_f25_is_not_large(self):
        _, spec = generalized_paley(make_field(5, 2), 8)
        assert spec.d == 3
        assert not spec.lim_praeger_large

    def test_clebsch_graph(self):
        # the fifth roots of unity in F_16 are a basis plus its sum: the folded 5-cube
        G, spec = generalized_paley(make_field(2, 4), 5)
        assert not G.directed
        assert srg_params(G) == SrgParams(16, 5, 0, 2)


class TestPeisert:
    """Tests for P*(q)."""

    def test_primitive_roots_f9(self, f9: FiniteField):
        assert len(primitive_roots(f9)) == 4

    def test_connection_set_size(self, f9: FiniteField):
        assert len(peisert_connection_set(f9, f9.omega)) == 4

    def test_isomorphic_to_paley_9(self, f9: FiniteField):
        P = peisert_graph(f9)
        assert srg_params(P) == SrgParams(9, 4, 1, 2)
        assert are_isomorphic(P, paley_graph(f9)) is not None

    def test_independent_of_omega_up_to_isomorphism(self, f9: FiniteField):
        graphs = [peisert_graph(f9, w) for w in primitive_roots(f9)]
        assert all(are_isomorphic(graphs[0], H) is not None for H in graphs[1:])

    def test_49_is_pseudo_paley(self):
        F = make_field(7, 2)
        G = peisert_graph(F)
        assert srg_params(G) == SrgParams(49, 24, 11, 12)
        assert is_self_complementary(G)[0]
        assert are_isomorphic(G, paley_graph(F)) is None

    def test_rejects_non_primitive_omega(self, f9: FiniteField):
        with pytest.raises(InvalidArgumentError, match="primitive root"):
            peisert_graph(f9, 2)

    @pytest.mark.parametrize(("p", "e"), [(7, 1), (5, 2), (3, 3)])
    def test_rejects_other_fields(self, p: int, e: int):
        with pytest.raises(InvalidArgumentError, match="Peisert"):
            peisert_graph(make_field(p, e))
