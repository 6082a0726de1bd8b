"""Registry of every checked claim, grouped by library area."""

from __future__ import annotations

from .base import (
    MODULE_NAMES,
    Claim,
    ClaimContext,
    ClaimOutcome,
    ClaimResult,
    ClaimStatus,
    ModuleName,
    exit_code,
    run_claim,
    run_claims,
)
from .graphs import GRAPH_CLAIMS
from .groups import (
    GROUP_CLAIMS,
    carlitz_claim,
    design_claim,
    lenstra_claim,
    mcconnel_claims,
    paley_aut_claim,
    tournament_claim,
)
from .hadamard import HADAMARD_CLAIMS
from .residues import RESIDUE_CLAIMS

ALL_CLAIMS: list[Claim] = [*RESIDUE_CLAIMS, *GRAPH_CLAIMS, *HADAMARD_CLAIMS, *GROUP_CLAIMS]


def get_all_claims(
    *,
    include_slow: bool = False,
    module: ModuleName | None = None,
    group: str | None = None,
) -> list[Claim]:
    """Registered claims in a fixed order, optionally filtered by module or group."""
    return [
        claim
        for claim in ALL_CLAIMS
        if (include_slow or not claim.slow)
        and (module is None or claim.module == module)
        and (group is None or claim.group == group)
    ]


def get_claim(name: str) -> Claim:
    for claim in ALL_CLAIMS:
        if claim.name == name:
            return claim
    raise KeyError(name)


__all__ = [
    "ALL_CLAIMS",
    "MODULE_NAMES",
    "Claim",
    "ClaimContext",
    "ClaimOutcome",
    "ClaimResult",
    "ClaimStatus",
    "ModuleName",
    "carlitz_claim",
    "design_claim",
    "exit_code",
    "get_all_claims",
    "get_claim",
    "lenstra_claim",
    "mcconnel_claims",
    "paley_aut_claim",
    "run_claim",
    "run_claims",
    "tournament_claim",
]
