"""Claims about Hadamard matrices, Hadamard designs and simplex compounds."""

from __future__ import annotations

from functools import partial

import numpy as np

from paley_lab.core.field import field_of_order, prime_powers
from paley_lab.core.graph import are_isomorphic
from paley_lab.core.hadamard import (
    SignMatrix,
    compound_counts,
    design_parameters,
    design_to_matrix,
    hadamard_graph,
    is_hadamard,
    jacobsthal_matrix,
    matrix_to_design,
    normalize,
    paley_I,
    paley_II,
    paley_III,
    paley_III_compound,
    paley_coverage,
    pg_design,
    qr_design,
    simplex_vertices,
    sylvester,
)
from paley_lab.core.paley import paley_tournament

from .base import Claim, ClaimContext, ClaimOutcome, outcome, tally

JACOBSTHAL_MAX_Q = 49
SYLVESTER_MAX_K = 10
PALEY_I_MAX_Q = 103
PALEY_II_MAX_Q = 101
TABLE1_LIMIT = 200
PUBLISHED_EXCEPTIONS = frozenset({92, 116, 156, 184, 188})
DESIGN_QS = (3, 7, 11, 19, 23)
PG_KS = (2, 3, 4)
COMPOUND_CASES = {(2, 168): (30, 480), (3, 660): (60480, 10321920)}


def check_jacobsthal(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        Q = jacobsthal_matrix(field_of_order(q))
        E = Q.entries
        J = np.ones_like(E)
        return (
            not (E @ J).any()
            and not (J @ E).any()
            and np.array_equal(E @ E.T, q * np.eye(q, dtype=np.int64) - J)
            and Q.is_symmetric == (q % 4 == 1)
            and Q.is_skew_symmetric == (q % 4 == 3)
        )

    odd = [q for q in prime_powers(JACOBSTHAL_MAX_Q) if q % 2]
    return tally(f"odd q <= {JACOBSTHAL_MAX_Q}", odd, holds)


def check_sylvester(ctx: ClaimContext) -> ClaimOutcome:
    return tally(
        f"k <= {SYLVESTER_MAX_K}",
        list(range(SYLVESTER_MAX_K + 1)),
        lambda k: bool(is_hadamard(sylvester(k))),
    )


def check_paley_I(ctx: ClaimContext) -> ClaimOutcome:
    return tally(
        f"q = 3 mod 4 up to {PALEY_I_MAX_Q}",
        prime_powers(PALEY_I_MAX_Q, residue_mod_4=3),
        lambda q: bool(is_hadamard(paley_I(q))),
    )


def check_paley_II(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        H = paley_II(q)
        return bool(is_hadamard(H)) and H.is_symmetric

    return tally(
        f"q = 1 mod 4 up to {PALEY_II_MAX_Q}", prime_powers(PALEY_II_MAX_Q, residue_mod_4=1), holds
    )


def check_paley_III(ctx: ClaimContext) -> ClaimOutcome:
    """Each k gives 2**m/m Hadamard matrices whose rows are all 2**m sign vectors."""

    def holds(k: int) -> bool:
        m = 1 << k
        matrices = paley_III(k, max_k=ctx.limits.paley3_max_k)
        rows = {row for H in matrices for row in H.rows()}
        return (
            len(matrices) == (1 << m) // m
            and len(rows) == 1 << m
            and all(is_hadamard(H) for H in matrices)
        )

    return tally("k in 2..4", [2, 3, 4], holds)


def check_table1(ctx: ClaimContext) -> ClaimOutcome:
    computed = frozenset(paley_coverage(TABLE1_LIMIT).exceptions)
    return outcome(PUBLISHED_EXCEPTIONS, computed, published=True)


def check_designs(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        return bool(design_parameters(matrix_to_design(paley_I(q)))) and bool(
            design_parameters(qr_design(q))
        )

    return tally("q in 3, 7, 11, 19, 23", list(DESIGN_QS), holds)


def check_pg_designs(ctx: ClaimContext) -> ClaimOutcome:
    return tally("k in 2..4", list(PG_KS), lambda k: bool(design_parameters(pg_design(k))))


def check_design_round_trip(ctx: ClaimContext) -> ClaimOutcome:
    designs = [qr_design(q) for q in DESIGN_QS] + [pg_design(k) for k in PG_KS]
    return tally("designs", designs, lambda D: matrix_to_design(design_to_matrix(D)) == D)


def check_compound_counts(ctx: ClaimContext) -> ClaimOutcome:
    computed = {}
    for n, N in COMPOUND_CASES:
        counts = compound_counts(n, N)
        computed[(n, N)] = (counts.d1, counts.D)
    return outcome(COMPOUND_CASES, computed)


def _normalized_of_order(m: int) -> SignMatrix:
    if m & (m - 1) == 0:
        return normalize(sylvester(m.bit_length() - 1))
    return normalize(paley_I(m - 1))


def check_simplex_dots(ctx: ClaimContext) -> ClaimOutcome:
    def holds(m: int) -> bool:
        vertices = np.array(simplex_vertices(_normalized_of_order(m)), dtype=np.int64)
        dots = vertices @ vertices.T
        return bool((dots[~np.eye(m, dtype=bool)] == -1).all())

    return tally("orders 4, 8, 12, 16", [4, 8, 12, 16], holds)


def check_paley_III_compound(ctx: ClaimContext) -> ClaimOutcome:
    def holds(k: int) -> bool:
        m = 1 << k
        compound = paley_III_compound(k, max_k=ctx.limits.paley3_max_k)
        return compound.partitions_cube and compound.count == (1 << m) // (2 * m)

    return tally("k in 2..4", [2, 3, 4], holds)


def _check_tournament_from_matrix(q: int, ctx: ClaimContext) -> ClaimOutcome:
    T = hadamard_graph(paley_I(q))
    witness = are_isomorphic(
        T, paley_tournament(field_of_order(q)), max_vertices=ctx.limits.iso_max_vertices
    )
    computed = f"tournament={T.is_tournament()} paley={witness is not None}"
    return outcome("tournament=True paley=True", computed)


def check_paley_II_graphs(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        G = hadamard_graph(paley_II(q))
        return not G.directed and G.n == 2 * q + 1

    return tally("q in 5, 9, 13", [5, 9, 13], holds)


HADAMARD_CLAIMS: list[Claim] = [
    Claim(
        "jacobsthal-identities",
        "hadamard",
        "QJ = JQ = 0, QQ^T = qI - J, Q symmetric iff q = 1 mod 4",
        check_jacobsthal,
    ),
    Claim("sylvester", "hadamard", "the Sylvester matrices are Hadamard", check_sylvester),
    Claim("paley-I", "hadamard", "Paley's first construction is Hadamard", check_paley_I),
    Claim(
        "paley-II",
        "hadamard",
        "Paley's second construction is a symmetric Hadamard matrix",
        check_paley_II,
    ),
    Claim(
        "paley-III",
        "hadamard",
        "the 2^m sign vectors split into 2^m/m Hadamard matrices",
        check_paley_III,
    ),
    Claim(
        "table1",
        "hadamard",
        "orders m <= 200 missed by Paley and Sylvester: 92, 116, 156, 184, 188",
        check_table1,
        group="table1",
    ),
    Claim(
        "hadamard-designs",
        "hadamard",
        "Paley I and the residue translates give (4n-1, 2n-1, n-1) designs",
        check_designs,
    ),
    Claim(
        "pg-designs",
        "hadamard",
        "hyperplanes of PG(k-1, 2) form a Hadamard design",
        check_pg_designs,
    ),
    Claim(
        "design-round-trip",
        "hadamard",
        "design -> normalized matrix -> design is the identity",
        check_design_round_trip,
    ),
    Claim(
        "compound-counts",
        "hadamard",
        "d1 = (4n-1)!/N and D = 2^(4n-3) d1 / n",
        check_compound_counts,
    ),
    Claim(
        "simplex-dots",
        "hadamard",
        "simplex vertices of a normalized matrix have pairwise dot product -1",
        check_simplex_dots,
    ),
    Claim(
        "paley-III-compound",
        "hadamard",
        "the Paley partition gives 2^m/(2m) simplices tiling the cube",
        check_paley_III_compound,
    ),
    *(
        Claim(
            f"hadamard-tournament-{q}",
            "hadamard",
            "the core of Paley's first matrix is the Paley tournament",
            partial(_check_tournament_from_matrix, q),
        )
        for q in (3, 7, 11)
    ),
    Claim(
        "hadamard-graph-paley-II",
        "hadamard",
        "the core of Paley's second matrix is a graph on 2q+1 vertices",
        check_paley_II_graphs,
    ),
]
