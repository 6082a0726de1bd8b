"""Claims about chi, character sums and representations as two squares."""

from __future__ import annotations

from sympy import primerange

from paley_lab.core.field import field_of_order, make_field, prime_powers
from paley_lab.core.residues import (
    canonical_two_squares,
    char_pair_sum,
    chi_by_power,
    jacobsthal_identity_sum,
    jacobsthal_phi,
    perron_count,
    perron_expected,
    perron_nonresidue_count,
    phi_square_sum,
    phi_square_sum_expected,
    power_sum,
    squares,
    two_squares_gauss,
    two_squares_jacobsthal,
    two_squares_search,
)

from .base import Claim, ClaimContext, ClaimOutcome, outcome, tally

PAIR_SUM_MAX_Q = 49
CHI_SUM_MAX_Q = 2000
EULER_MAX_Q = 361
TWO_SQUARES_MAX_P = 1000
PHI_MAX_P = 101
PHI_SCALING_MAX_P = 61


def _odd_prime_powers(limit: int) -> list[int]:
    return [q for q in prime_powers(limit) if q % 2]


def _pair_sums_hold(ctx: ClaimContext, q: int) -> bool:
    F = field_of_order(q)
    return all(
        char_pair_sum(F, u, v, character=ctx.chi) == (q - 1 if u == v else -1)
        for u in range(q)
        for v in range(q)
    )


def check_pair_sums(ctx: ClaimContext) -> ClaimOutcome:
    return tally(
        f"odd q <= {PAIR_SUM_MAX_Q}",
        _odd_prime_powers(PAIR_SUM_MAX_Q),
        lambda q: _pair_sums_hold(ctx, q),
    )


def check_chi_sum(ctx: ClaimContext) -> ClaimOutcome:
    def vanishes(q: int) -> bool:
        F = field_of_order(q)
        return sum(ctx.chi(F, x) for x in range(1, q)) == 0

    return tally(f"odd q <= {CHI_SUM_MAX_Q}", _odd_prime_powers(CHI_SUM_MAX_Q), vanishes)


def check_euler_criterion(ctx: ClaimContext) -> ClaimOutcome:
    def agrees(q: int) -> bool:
        F = field_of_order(q)
        S = squares(F)
        return all(chi_by_power(F, x) == (1 if x in S else -1) for x in range(1, q))

    return tally(f"odd q <= {EULER_MAX_Q}", _odd_prime_powers(EULER_MAX_Q), agrees)


def check_identity_sums(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        F = field_of_order(q)
        return all(
            jacobsthal_identity_sum(F, c, character=ctx.chi) == (q - 1 if c == 0 else -1)
            for c in range(q)
        )

    return tally(f"odd q <= {PAIR_SUM_MAX_Q}", _odd_prime_powers(PAIR_SUM_MAX_Q), holds)


def check_thirteen(ctx: ClaimContext) -> ClaimOutcome:
    F = make_field(13)
    a, b = two_squares_jacobsthal(13)
    computed = f"phi(1)={jacobsthal_phi(F, 1)} phi(2)={jacobsthal_phi(F, 2)} 13={a}^2+({b})^2"
    return outcome("phi(1)=6 phi(2)=-4 13=3^2+(-2)^2", computed)


def _primes_1_mod_4(limit: int) -> list[int]:
    return [int(p) for p in primerange(5, limit + 1) if p % 4 == 1]


def check_two_squares(ctx: ClaimContext) -> ClaimOutcome:
    def agree(p: int) -> bool:
        oracle = two_squares_search(p)
        return (
            canonical_two_squares(*two_squares_jacobsthal(p))
            == canonical_two_squares(*two_squares_gauss(p))
            == oracle
        )

    return tally(
        f"primes p = 1 mod 4 up to {TWO_SQUARES_MAX_P}", _primes_1_mod_4(TWO_SQUARES_MAX_P), agree
    )


def check_phi_values(ctx: ClaimContext) -> ClaimOutcome:
    """phi is even, phi**2 is constant on residues and on non-residues, and the sum of squares."""

    def holds(p: int) -> bool:
        F = make_field(p)
        S = squares(F)
        values = [jacobsthal_phi(F, e) for e in range(p)]
        on_residues = {values[e] ** 2 for e in S}
        on_others = {values[e] ** 2 for e in range(1, p) if e not in S}
        return (
            all(v % 2 == 0 for v in values)
            and len(on_residues) == len(on_others) == 1
            and on_residues != on_others
            and phi_square_sum(p) == phi_square_sum_expected(p)
        )

    return tally(f"primes p = 1 mod 4 up to {PHI_MAX_P}", _primes_1_mod_4(PHI_MAX_P), holds)


def check_phi_scaling(ctx: ClaimContext) -> ClaimOutcome:
    """phi(e) = chi(x) phi(e x**2) for every x != 0."""

    def holds(p: int) -> bool:
        F = make_field(p)
        return all(
            jacobsthal_phi(F, e) == ctx.chi(F, x) * jacobsthal_phi(F, e * x * x % p)
            for e in range(p)
            for x in range(1, p)
        )

    primes = [int(p) for p in primerange(3, PHI_SCALING_MAX_P + 1)]
    return tally(f"odd primes up to {PHI_SCALING_MAX_P}", primes, holds)


def check_perron(ctx: ClaimContext) -> ClaimOutcome:
    def holds(q: int) -> bool:
        F = field_of_order(q)
        for a in range(1, q):
            with_zero = perron_count(F, a, with_zero=True)
            if with_zero != perron_expected(F, a, with_zero=True):
                return False
            if perron_count(F, a, with_zero=False) != perron_expected(F, a, with_zero=False):
                return False
            if perron_nonresidue_count(F, a) != with_zero - 1:
                return False
        return True

    return tally(f"odd q <= {PAIR_SUM_MAX_Q}", _odd_prime_powers(PAIR_SUM_MAX_Q), holds)


def check_power_sums(ctx: ClaimContext) -> ClaimOutcome:
    def holds(p: int) -> bool:
        return all(
            power_sum(p, k) == (p - 1 if k % (p - 1) == 0 else 0) for k in range(1, 2 * p - 1)
        )

    return tally(f"primes up to {PHI_MAX_P}", [int(p) for p in primerange(3, PHI_MAX_P + 1)], holds)


RESIDUE_CLAIMS: list[Claim] = [
    Claim(
        "character-pair-sums",
        "residue_sums",
        "sum of chi(w-u)chi(w-v) is q-1 on the diagonal and -1 off it",
        check_pair_sums,
    ),
    Claim("chi-sum-zero", "residue_sums", "chi sums to 0 over the field", check_chi_sum),
    Claim(
        "chi-euler-criterion",
        "residue_sums",
        "square membership agrees with x^((q-1)/2)",
        check_euler_criterion,
    ),
    Claim(
        "identity-sums",
        "residue_sums",
        "sum of chi(x^2+c) is -1 for c != 0",
        check_identity_sums,
    ),
    Claim("two-squares-13", "residue_sums", "Jacobsthal's worked example", check_thirteen),
    Claim(
        "two-squares",
        "residue_sums",
        "Jacobsthal and Gauss both write p as a sum of two squares",
        check_two_squares,
    ),
    Claim(
        "phi-values",
        "residue_sums",
        "phi^2 depends only on the residue class of e",
        check_phi_values,
    ),
    Claim("phi-scaling", "residue_sums", "phi(e) = chi(x) phi(e x^2)", check_phi_scaling),
    Claim(
        "perron-counts",
        "residue_sums",
        "Perron's intersection counts for S0 + a",
        check_perron,
    ),
    Claim("power-sums", "residue_sums", "sum of w^k over F_p", check_power_sums),
]
