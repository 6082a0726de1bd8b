"""Claim definitions and the runner behind `paley-lab verify`."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Literal, TypeVar

from paley_lab.config import LimitsConfig
from paley_lab.core.field import FieldElement, FiniteField
from paley_lab.core.parallel import Outcome, ParallelConfig, parallel_map_ordered
from paley_lab.core.residues import Character, character_table

logger = logging.getLogger(__name__)

ClaimStatus = Literal["PASS", "FAIL", "DIFF"]
ModuleName = Literal["residue_sums", "graph_core", "paley_family", "hadamard", "perm_groups"]
MODULE_NAMES: tuple[ModuleName, ...] = (
    "residue_sums",
    "graph_core",
    "paley_family",
    "hadamard",
    "perm_groups",
)

T = TypeVar("T")


def table_chi(F: FiniteField, x: FieldElement) -> int:
    """chi read from the cached character table."""
    return character_table(F)[x]


@dataclass
class ClaimContext:
    """What a claim check may depend on besides its own arguments."""

    limits: LimitsConfig = field(default_factory=LimitsConfig)
    chi: Character = table_chi


@dataclass(frozen=True)
class ClaimOutcome:
    expected: str
    computed: str
    status: ClaimStatus


def outcome(expected: object, computed: object, *, published: bool = False) -> ClaimOutcome:
    """PASS on equality; a mismatch is DIFF for published figures and FAIL otherwise."""
    if expected == computed:
        status: ClaimStatus = "PASS"
    else:
        status = "DIFF" if published else "FAIL"
    return ClaimOutcome(_show(expected), _show(computed), status)


def _show(value: object) -> str:
    if isinstance(value, (set, frozenset)):
        return "{" + ",".join(str(x) for x in sorted(value)) + "}"
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(str(x) for x in value) + ")"
    return str(value)


def tally(label: str, items: Sequence[T], holds: Callable[[T], bool]) -> ClaimOutcome:
    """PASS when holds(x) for every item; otherwise name the first failure."""
    failures = [x for x in items if not holds(x)]
    expected = f"all {len(items)} {label}"
    if not failures:
        return ClaimOutcome(expected, expected, "PASS")
    computed = f"{len(items) - len(failures)} of {len(items)} {label}, first failure {failures[0]}"
    return ClaimOutcome(expected, computed, "FAIL")


@dataclass(frozen=True)
class Claim:
    """A published statement checked by direct computation."""

    name: str
    module: ModuleName
    source: str
    check: Callable[[ClaimContext], ClaimOutcome]
    group: str | None = None
    slow: bool = False


@dataclass(frozen=True)
class ClaimResult:
    claim: Claim
    expected: str
    computed: str
    status: ClaimStatus

    @property
    def line(self) -> str:
        return f"{self.status} {self.claim.name} expected={self.expected} computed={self.computed}"


def run_claim(claim: Claim, context: ClaimContext | None = None) -> ClaimResult:
    """Run one claim; an exception is reported as a FAIL carrying its message."""
    context = context or ClaimContext()
    try:
        result = claim.check(context)
    except Exception as e:  # noqa: BLE001
        logger.debug("claim %s raised %r", claim.name, e)
        return ClaimResult(claim, "no error", f"error: {e}", "FAIL")
    if result.status == "DIFF":
        logger.warning(
            "%s: published %s, computed %s", claim.name, result.expected, result.computed
        )
    return ClaimResult(claim, result.expected, result.computed, result.status)


def run_claims(
    claims: Iterable[Claim],
    *,
    limits: LimitsConfig | None = None,
    parallel: ParallelConfig | None = None,
    chi_override: Character | None = None,
    on_done: Callable[[ClaimResult], None] | None = None,
) -> list[ClaimResult]:
    """Run claims on the worker pool and return results in input order.

    ``chi_override`` replaces the character used by every claim that sums
    chi, so a deliberately broken character shows up as FAIL lines.
    """
    context = ClaimContext(limits=limits or LimitsConfig())
    if chi_override is not None:
        context.chi = chi_override

    def report(done: Outcome[Claim, ClaimResult]) -> None:
        if on_done is not None and done.result is not None:
            on_done(done.result)

    outcomes = parallel_map_ordered(
        lambda claim: run_claim(claim, context),
        list(claims),
        parallel or ParallelConfig(enabled=False),
        on_done=report,
    )
    return [o.result for o in outcomes if o.result is not None]


def exit_code(results: Iterable[ClaimResult]) -> int:
    """1 when any claim failed; DIFF does not count as a failure."""
    return 1 if any(r.status == "FAIL" for r in results) else 0
