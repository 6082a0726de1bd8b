"""Tests for the claim registry and runner."""

from __future__ import annotations

import pytest

import paley_lab.claims as claims_module
from paley_lab.claims import (
    ALL_CLAIMS,
    Claim,
    ClaimContext,
    ClaimOutcome,
    exit_code,
    get_all_claims,
    get_claim,
    run_claim,
    run_claims,
)
from paley_lab.claims.base import outcome, tally
from paley_lab.core.field import FieldElement, FiniteField
from paley_lab.core.parallel import ParallelConfig


def constant_chi(F: FiniteField, x: FieldElement) -> int:
    return 1


def fixed_claim(name: str, result: ClaimOutcome) -> Claim:
    return Claim(name, "graph_core", "fixed result", lambda ctx: result)


class TestOutcome:
    """Tests for outcome and tally."""

    def test_equal_is_pass(self):
        assert outcome(72, 72).status == "PASS"

    def test_mismatch_is_fail(self):
        assert outcome(72, 36).status == "FAIL"

    def test_published_mismatch_is_diff(self):
        result = outcome(frozenset({92, 116}), frozenset({92, 116, 172}), published=True)
        assert result.status == "DIFF"
        assert result.expected == "{92,116}"
        assert result.computed == "{92,116,172}"

    def test_tally_names_first_failure(self):
        result = tally("odd numbers", [1, 3, 4, 6], lambda x: x % 2 == 1)
        assert result.status == "FAIL"
        assert result.expected == "all 4 odd numbers"
        assert result.computed == "2 of 4 odd numbers, first failure 4"

    def test_tally_pass(self):
        result = tally("items", [1, 2], lambda x: True)
        assert result.status == "PASS"
        assert result.computed == result.expected


class TestRegistry:
    """Tests for get_all_claims and get_claim."""

    def test_names_are_unique(self):
        names = [claim.name for claim in ALL_CLAIMS]
        assert len(names) == len(set(names))

    def test_slow_claims_excluded_by_default(self, monkeypatch: pytest.MonkeyPatch):
        heavy = Claim("heavy", "graph_core", "runs long", lambda ctx: outcome("1", "1"), slow=True)
        monkeypatch.setattr(claims_module, "ALL_CLAIMS", [*ALL_CLAIMS, heavy])
        assert heavy not in get_all_claims()
        assert heavy in get_all_claims(include_slow=True)

    def test_acceptance_claims_run_by_default(self):
        names = {claim.name for claim in get_all_claims()}
        assert {"peisert-49", "design-aut-19", "table1"} <= names

    def test_module_filter(self):
        claims = get_all_claims(module="residue_sums")
        assert claims
        assert {claim.module for claim in claims} == {"residue_sums"}

    def test_group_filter(self):
        names = [claim.name for claim in get_all_claims(group="theorem41")]
        assert names == [f"paley-aut-{q}" for q in (9, 13, 17, 25, 29)]

    def test_every_module_has_claims(self):
        modules = {claim.module for claim in ALL_CLAIMS}
        assert modules == {"residue_sums", "graph_core", "paley_family", "hadamard", "perm_groups"}

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            get_claim("no-such-claim")


class TestRunClaim:
    """Tests for running single claims."""

    def test_worked_example(self):
        result = run_claim(get_claim("two-squares-13"))
        assert result.status == "PASS"
        assert result.computed == "phi(1)=6 phi(2)=-4 13=3^2+(-2)^2"

    def test_table1_is_diff(self):
        result = run_claim(get_claim("table1"))
        assert result.status == "DIFF"
        assert "172" in result.computed
        assert "172" not in result.expected

    def test_mcconnel_order_9_4_is_diff(self):
        result = run_claim(get_claim("mcconnel-order-9-4"))
        assert result.status == "DIFF"
        assert (result.expected, result.computed) == ("36", "18")

    def test_exception_becomes_fail(self):
        def broken(ctx: ClaimContext) -> ClaimOutcome:
            raise ValueError("boom")

        result = run_claim(Claim("broken", "graph_core", "raises", broken))
        assert result.status == "FAIL"
        assert result.computed == "error: boom"

    def test_line_format(self):
        result = run_claim(fixed_claim("fixed", ClaimOutcome("1", "2", "FAIL")))
        assert result.line == "FAIL fixed expected=1 computed=2"


class TestRunClaims:
    """Tests for the batch runner."""

    def test_broken_character_fails(self):
        claims = [get_claim("character-pair-sums"), get_claim("chi-sum-zero")]
        results = run_claims(claims, chi_override=constant_chi)
        assert [r.status for r in results] == ["FAIL", "FAIL"]
        assert exit_code(results) == 1

    def test_real_character_passes(self):
        results = run_claims([get_claim("character-pair-sums"), get_claim("chi-sum-zero")])
        assert [r.status for r in results] == ["PASS", "PASS"]

    def test_character_sum_covers_odd_fields_to_2000(self):
        result = run_claim(get_claim("chi-sum-zero"))
        assert result.status == "PASS"
        assert result.expected.endswith("odd q <= 2000")

    def test_parallel_keeps_input_order(self):
        claims = [
            fixed_claim(f"c{i}", ClaimOutcome(str(i), str(i), "PASS")) for i in range(8)
        ]
        results = run_claims(claims, parallel=ParallelConfig(enabled=True, max_workers=4))
        assert [r.claim.name for r in results] == [f"c{i}" for i in range(8)]

    def test_on_done_sees_every_result(self):
        seen: list[str] = []
        claims = [get_claim("sylvester"), get_claim("two-squares-13")]
        run_claims(claims, on_done=lambda r: seen.append(r.claim.name))
        assert sorted(seen) == ["sylvester", "two-squares-13"]


class TestExitCode:
    """Tests for exit_code."""

    def test_diff_is_not_failure(self):
        results = [
            run_claim(fixed_claim("a", ClaimOutcome("1", "1", "PASS"))),
            run_claim(fixed_claim("b", ClaimOutcome("1", "2", "DIFF"))),
        ]
        assert exit_code(results) == 0

    def test_fail_is_failure(self):
        results = [run_claim(fixed_claim("a", ClaimOutcome("1", "2", "FAIL")))]
        assert exit_code(results) == 1

    def test_empty(self):
        assert exit_code([]) == 0
