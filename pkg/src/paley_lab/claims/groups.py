"""Claims about automorphism groups and the characterization searches."""

from __future__ import annotations

from functools import partial

from paley_lab.core.characterize import (
    carlitz_permutations,
    lenstra_normalizer_members,
    mcconnel_order_report,
    mcconnel_permutations,
    predicted_frobenius_maps,
    verify_paley_automorphisms,
)
from paley_lab.core.field import field_of_order
from paley_lab.core.groups import (
    a_delta_l1,
    design_automorphisms,
    graph_automorphisms,
    suborbit_lengths,
    tournament_automorphisms,
)
from paley_lab.core.hadamard import qr_design
from paley_lab.core.paley import paley_graph, paley_tournament

from .base import Claim, ClaimContext, ClaimOutcome, outcome, tally

AFFINE_ORDER_QS = (5, 9, 13, 17, 25, 27, 29, 49)
PALEY_AUT_QS = (9, 13, 17, 25, 29)
SUBORBIT_QS = (9, 13, 17, 25)
CARLITZ_QS = (5, 9, 13, 17, 25)
MCCONNEL_CASES = ((13, 2), (13, 3), (13, 4), (9, 2), (9, 4), (25, 2))
MCCONNEL_ORDER_CASES = ((13, 2), (9, 4), (9, 2))
LENSTRA_CASES = ((5, 2), (9, 4))
TOURNAMENT_QS = (7, 11, 19, 23, 27)
DESIGN_ORDERS = {7: 168, 11: 660, 19: 171}


def _names(perms: list) -> list[str]:  # type: ignore[type-arg]
    return [str(p) for p in perms]


def check_affine_orders(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        F = field_of_order(q)
        group = a_delta_l1(F, **ctx.limits.group_limits)
        if q % 4 == 1:
            P = paley_graph(F)
            if not all(P.is_automorphism(g) for g in group.generators):
                return False
        return group.order == q * (q - 1) * F.e // 2

    return tally("fields", list(AFFINE_ORDER_QS), holds)


def check_suborbits(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        P = paley_graph(field_of_order(q))
        group = graph_automorphisms(P, max_vertices=ctx.limits.iso_max_vertices)
        return suborbit_lengths(group, 0) == [1, (q - 1) // 2, (q - 1) // 2]

    return tally("Paley graphs", list(SUBORBIT_QS), holds)


def _check_paley_aut(q: int, ctx: ClaimContext) -> ClaimOutcome:
    limits = ctx.limits
    report = verify_paley_automorphisms(
        field_of_order(q),
        max_q=limits.paley_aut_max_q,
        max_vertices=limits.iso_max_vertices,
        **limits.group_limits,
    )
    computed = f"order={report.automorphism_order} equal={report.equal}"
    return outcome(f"order={report.expected_order} equal=True", computed)


def paley_aut_claim(q: int) -> Claim:
    return Claim(
        f"paley-aut-{q}",
        "perm_groups",
        "Aut P(q) is the group of v -> a v^gamma + b with a a square",
        partial(_check_paley_aut, q),
        group="theorem41",
    )


def _check_carlitz(q: int, ctx: ClaimContext) -> ClaimOutcome:
    F = field_of_order(q)
    found = carlitz_permutations(F, max_q=ctx.limits.carlitz_max_q)
    return outcome(_names(predicted_frobenius_maps(F)), _names(found))


def carlitz_claim(q: int) -> Claim:
    return Claim(
        f"carlitz-{q}",
        "perm_groups",
        "chi-preserving maps fixing 0 and 1 are field automorphisms",
        partial(_check_carlitz, q),
        group="carlitz",
    )


def _check_mcconnel(q: int, d: int, ctx: ClaimContext) -> ClaimOutcome:
    F = field_of_order(q)
    found = mcconnel_permutations(F, d, max_q=ctx.limits.mcconnel_max_q)
    return outcome(_names(predicted_frobenius_maps(F, d)), _names(found))


def _check_mcconnel_order(q: int, d: int, ctx: ClaimContext) -> ClaimOutcome:
    report = mcconnel_order_report(field_of_order(q), d, **ctx.limits.group_limits)
    if not report.oracle_matches:
        return outcome(report.oracle, report.computed)
    return outcome(report.published, report.computed, published=True)


def mcconnel_claims(q: int, d: int) -> list[Claim]:
    """The coset-preserving maps for (q, d) and the order of the group they generate."""
    return [
        Claim(
            f"mcconnel-{q}-{d}",
            "perm_groups",
            "coset-preserving maps fixing 0 and 1 are Frobenius powers",
            partial(_check_mcconnel, q, d),
            group="mcconnel",
        ),
        Claim(
            f"mcconnel-order-{q}-{d}",
            "perm_groups",
            "published order m*q*gcd(m,e) of the coset-preserving group",
            partial(_check_mcconnel_order, q, d),
            group="mcconnel",
        ),
    ]


def _check_lenstra(q: int, d: int, ctx: ClaimContext) -> ClaimOutcome:
    limits = ctx.limits
    search = lenstra_normalizer_members(
        field_of_order(q), d, max_q=limits.lenstra_max_q, **limits.group_limits
    )
    expected = "closed=True contains=True normalizes=True"
    computed = (
        f"closed={search.is_group} contains={search.contains_base_group} "
        f"normalizes={search.normalizes}"
    )
    result = outcome(expected, computed)
    members = f" members={len(search.members)}"
    return ClaimOutcome(result.expected + members, result.computed + members, result.status)


def lenstra_claim(q: int, d: int) -> Claim:
    return Claim(
        f"lenstra-{q}-{d}",
        "perm_groups",
        "maps permuting difference classes form the normalizer",
        partial(_check_lenstra, q, d),
        group="lenstra",
    )


def _check_tournament(q: int, ctx: ClaimContext) -> ClaimOutcome:
    F = field_of_order(q)
    T = paley_tournament(F)
    group = tournament_automorphisms(T, max_vertices=ctx.limits.iso_max_vertices)
    return outcome(q * (q - 1) * F.e // 2, group.order)


def tournament_claim(q: int) -> Claim:
    return Claim(
        f"tournament-aut-{q}",
        "perm_groups",
        "the Paley tournament has automorphism group of odd order q(q-1)e/2",
        partial(_check_tournament, q),
        group="tournament",
    )


def _check_design(q: int, expected: int | None, ctx: ClaimContext) -> ClaimOutcome:
    group = design_automorphisms(qr_design(q), max_points=ctx.limits.design_max_points)
    if expected is None:
        expected = q * (q - 1) // 2
    return outcome(expected, group.order)


def design_claim(q: int) -> Claim:
    """Automorphism order of the quadratic residue design on q points."""
    return Claim(
        f"design-aut-{q}",
        "perm_groups",
        "automorphism group of the quadratic residue design",
        partial(_check_design, q, DESIGN_ORDERS.get(q)),
        group="design",
    )


GROUP_CLAIMS: list[Claim] = [
    Claim(
        "affine-square-group",
        "perm_groups",
        "v -> a v^gamma + b, a a square, has order q(q-1)e/2 and preserves P(q)",
        check_affine_orders,
    ),
    Claim(
        "paley-suborbits",
        "perm_groups",
        "Aut P(q) is rank 3 with suborbits 1, (q-1)/2, (q-1)/2",
        check_suborbits,
    ),
    *(paley_aut_claim(q) for q in PALEY_AUT_QS),
    *(carlitz_claim(q) for q in CARLITZ_QS),
    *(claim for q, d in MCCONNEL_CASES for claim in mcconnel_claims(q, d)[:1]),
    *(mcconnel_claims(q, d)[1] for q, d in MCCONNEL_ORDER_CASES),
    *(lenstra_claim(q, d) for q, d in LENSTRA_CASES),
    *(tournament_claim(q) for q in TOURNAMENT_QS),
    *(design_claim(q) for q in DESIGN_ORDERS),
]
