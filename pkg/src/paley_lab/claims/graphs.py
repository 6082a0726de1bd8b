"""Claims about Paley, generalized Paley and Peisert graphs."""

from __future__ import annotations

from paley_lab.core.field import field_of_order, prime_powers
from paley_lab.core.graph import (
    SrgParams,
    are_isomorphic,
    delta_uv,
    is_delta_graph,
    is_self_complementary,
    srg_params,
)
from paley_lab.core.groups import a_delta_l1, graph_automorphisms, is_arc_transitive
from paley_lab.core.paley import generalized_paley, paley_graph, peisert_graph

from .base import Claim, ClaimContext, ClaimOutcome, outcome, tally

SRG_MAX_Q = 101


def paley_parameters(q: int) -> SrgParams:
    return SrgParams(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4)


def check_paley_srg(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        return srg_params(paley_graph(field_of_order(q))) == paley_parameters(q)

    return tally(
        f"q = 1 mod 4 up to {SRG_MAX_Q}", prime_powers(SRG_MAX_Q, residue_mod_4=1), holds
    )


def check_self_complementary(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        G = paley_graph(field_of_order(q))
        return is_self_complementary(G, max_vertices=ctx.limits.iso_max_vertices)[0]

    return tally("Paley graphs", [5, 9, 13, 17, 25], holds)


def check_arc_transitive(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        F = field_of_order(q)
        return is_arc_transitive(paley_graph(F), a_delta_l1(F, **ctx.limits.group_limits))

    return tally("Paley graphs", [5, 9, 13, 17], holds)


def check_delta_graph(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        G = paley_graph(field_of_order(q))
        every_pair = all(
            delta_uv(G, u, v) == (q - 1) // 2 for u in range(q) for v in range(u + 1, q)
        )
        return every_pair and is_delta_graph(G)

    return tally("Paley graphs", [5, 13, 17], holds)


def check_hamming(ctx: ClaimContext) -> ClaimOutcome:
    G, _ = generalized_paley(field_of_order(9), 4)
    group = graph_automorphisms(G, max_vertices=ctx.limits.iso_max_vertices)
    return outcome(72, group.order)


def _peisert_profile(ctx: ClaimContext, q: int) -> str:
    F = field_of_order(q)
    G = peisert_graph(F)
    bound = ctx.limits.iso_max_vertices
    self_complementary, _ = is_self_complementary(G, max_vertices=bound)
    paley = are_isomorphic(G, paley_graph(F), max_vertices=bound) is not None
    return f"{srg_params(G)} self-complementary={self_complementary} paley={paley}"


def check_peisert_9(ctx: ClaimContext) -> ClaimOutcome:
    return outcome(
        "v=9 k=4 lambda=1 mu=2 self-complementary=True paley=True", _peisert_profile(ctx, 9)
    )


def check_peisert_49(ctx: ClaimContext) -> ClaimOutcome:
    return outcome(
        "v=49 k=24 lambda=11 mu=12 self-complementary=True paley=False", _peisert_profile(ctx, 49)
    )


GRAPH_CLAIMS: list[Claim] = [
    Claim(
        "paley-srg",
        "paley_family",
        "P(q) is strongly regular with (q, (q-1)/2, (q-5)/4, (q-1)/4)",
        check_paley_srg,
    ),
    Claim(
        "paley-self-complementary",
        "paley_family",
        "v -> nv maps P(q) onto its complement",
        check_self_complementary,
    ),
    Claim(
        "paley-arc-transitive",
        "paley_family",
        "v -> av + b with a a square acts on arcs transitively",
        check_arc_transitive,
    ),
    Claim(
        "delta-graph",
        "graph_core",
        "every pair of P(q) has (q-1)/2 vertices adjacent to exactly one",
        check_delta_graph,
    ),
    Claim(
        "hamming-exception",
        "paley_family",
        "the generalized Paley graph on F_9 with m=4 is the 3x3 rook graph",
        check_hamming,
    ),
    Claim(
        "peisert-9",
        "paley_family",
        "the pseudo-Paley graph on 9 points is unique",
        check_peisert_9,
    ),
    Claim(
        "peisert-49",
        "paley_family",
        "P*(49) is a self-complementary pseudo-Paley graph, not Paley",
        check_peisert_49,
    ),
]
