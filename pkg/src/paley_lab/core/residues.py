"""Quadratic residues, the character chi and classical character sums."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Literal, TypeAlias

from sympy import isprime

from paley_lab.core.field import FieldElement, FiniteField, make_field
from paley_lab.errors import InvalidArgumentError

logger = logging.getLogger(__name__)

CharValue: TypeAlias = Literal[-1, 0, 1]

# A pluggable character, so verification runs can inject a faulty one
Character: TypeAlias = Callable[[FiniteField, FieldElement], int]


def _require_odd(F: FiniteField, what: str) -> None:
    if F.p == 2:
        raise InvalidArgumentError(f"{what} needs a field of odd order, got q={F.q}")


def _require_prime_1_mod_4(p: int) -> None:
    if not isinstance(p, int) or not isprime(p):
        raise InvalidArgumentError(f"{p!r} is not prime")
    if p % 4 != 1:
        raise InvalidArgumentError(f"p must be congruent to 1 mod 4, got {p}")


@lru_cache(maxsize=None)
def squares(F: FiniteField) -> frozenset[FieldElement]:
    """The set S of non-zero squares."""
    return frozenset(F.mul(x, x) for x in range(1, F.q))


@lru_cache(maxsize=None)
def non_residues(F: FiniteField) -> frozenset[FieldElement]:
    """Non-zero elements outside S."""
    return frozenset(range(1, F.q)) - squares(F)


@dataclass(frozen=True)
class ResidueSet:
    """The residue set S, or S0 = S with 0 adjoined."""

    field: FiniteField
    members: frozenset[FieldElement]
    with_zero: bool = False

    @classmethod
    def of(cls, F: FiniteField, with_zero: bool = False) -> ResidueSet:
        _require_odd(F, "a residue set")
        members = squares(F) | {0} if with_zero else squares(F)
        return cls(F, frozenset(members), with_zero)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    @property
    def is_symmetric(self) -> bool:
        """True when S = -S, which happens exactly for q = 1 mod 4."""
        return all(self.field.neg(x) in self.members for x in self.members)

    def translate(self, a: FieldElement) -> frozenset[FieldElement]:
        return frozenset(self.field.add(x, a) for x in self.members)


def chi_by_power(F: FiniteField, x: FieldElement) -> CharValue:
    """Euler's criterion: x**((q-1)/2) is 1 on squares and -1 on non-squares."""
    _require_odd(F, "chi")
    if F.check(x) == 0:
        return 0
    return 1 if F.pow(x, (F.q - 1) // 2) == 1 else -1


def chi(F: FiniteField, x: FieldElement) -> CharValue:
    """The quadratic residue character, cross-checked against Euler's criterion."""
    _require_odd(F, "chi")
    if F.check(x) == 0:
        value: CharValue = 0
    else:
        value = 1 if x in squares(F) else -1
    if value != chi_by_power(F, x):
        raise AssertionError(f"chi disagrees with Euler's criterion at {x} in F_{F.q}")
    return value


@lru_cache(maxsize=None)
def character_table(F: FiniteField) -> tuple[int, ...]:
    """chi(x) for every encoding x."""
    return tuple(chi(F, x) for x in range(F.q))


def char_pair_sum(
    F: FiniteField,
    u: FieldElement,
    v: FieldElement,
    *,
    character: Character = chi,
) -> int:
    """Sum over w of chi(w-u)*chi(w-v), by direct summation."""
    _require_odd(F, "char_pair_sum")
    return sum(character(F, F.sub(w, u)) * character(F, F.sub(w, v)) for w in range(F.q))


def jacobsthal_identity_sum(
    F: FiniteField,
    c: FieldElement,
    *,
    character: Character = chi,
) -> int:
    """Sum over x of chi(x**2 + c)."""
    _require_odd(F, "jacobsthal_identity_sum")
    c = F.check(c)
    return sum(character(F, F.add(F.mul(x, x), c)) for x in range(F.q))


def jacobsthal_phi(F: FiniteField, e_arg: FieldElement) -> int:
    """Jacobsthal's sum phi(e) = sum over m of chi(m)*chi(m**2 + e), over a prime field."""
    if F.e != 1:
        raise InvalidArgumentError(f"phi is defined over prime fields only, got q={F.q}")
    _require_odd(F, "jacobsthal_phi")
    table = character_table(F)
    p = F.p
    e_arg = F.check(e_arg)
    return sum(table[m] * table[(m * m + e_arg) % p] for m in range(p))


def _smallest_residue_and_non_residue(F: FiniteField) -> tuple[int, int]:
    return min(squares(F)), min(non_residues(F))


def two_squares_jacobsthal(p: int) -> tuple[int, int]:
    """Write p = a**2 + b**2 with a = phi(r)/2 and b = phi(n)/2.

    r and n are the smallest residue and non-residue mod p. Signs are
    returned exactly as the sums produce them.
    """
    _require_prime_1_mod_4(p)
    F = make_field(p, 1)
    r, n = _smallest_residue_and_non_residue(F)
    a, b = jacobsthal_phi(F, r) // 2, jacobsthal_phi(F, n) // 2
    if a * a + b * b != p:
        raise AssertionError(f"Jacobsthal sums gave {a}^2 + {b}^2 != {p}")
    return a, b


def _closest_residue(n: int, p: int) -> int:
    """The representative of n mod p in (-p/2, p/2)."""
    r = n % p
    return r - p if r > p // 2 else r


def two_squares_gauss(p: int) -> tuple[int, int]:
    """Gauss's formula: a = <C(2k,k)/2>, b = <(2k)! a> for p = 4k+1.

    Binomial and factorial are running products mod p.
    """
    _require_prime_1_mod_4(p)
    k = (p - 1) // 4
    numerator = 1
    k_factorial = 1
    for i in range(1, k + 1):
        numerator = numerator * (k + i) % p
        k_factorial = k_factorial * i % p
    binomial = numerator * pow(k_factorial, -1, p) % p
    a = _closest_residue(binomial * pow(2, -1, p), p)
    # (2k)! = k! * (k+1)...(2k)
    double_factorial = k_factorial * numerator % p
    b = _closest_residue(double_factorial * a, p)
    if a * a + b * b != p:
        raise AssertionError(f"Gauss's formula gave {a}^2 + {b}^2 != {p}")
    return a, b


def canonical_two_squares(a: int, b: int) -> tuple[int, int]:
    """(|a|, |b|) in ascending order, for display."""
    x, y = sorted((abs(a), abs(b)))
    return x, y


def two_squares_search(p: int) -> tuple[int, int]:
    """Exhaustive search for the unique a <= b, both positive, with a**2 + b**2 = p."""
    _require_prime_1_mod_4(p)
    for a in range(1, isqrt(p // 2) + 1):
        b2 = p - a * a
        b = isqrt(b2)
        if b * b == b2:
            return a, b
    raise AssertionError(f"no two-squares representation found for {p}")


def perron_count(F: FiniteField, a: FieldElement, with_zero: bool = True) -> int:
    """|(S0 + a) & S0| (or with S in place of S0), by set intersection."""
    _require_odd(F, "perron_count")
    if F.check(a) == 0:
        raise InvalidArgumentError("perron_count needs a non-zero shift")
    base = ResidueSet.of(F, with_zero=with_zero)
    return len(base.translate(a) & base.members)


def perron_expected(F: FiniteField, a: FieldElement, with_zero: bool = True) -> int:
    """Predicted value of perron_count.

    With zero: n+1 or n for q = 4n+1 as a is a residue or not, and n for
    q = 4n-1. Without zero the count drops by |{a, -a} & S|.
    """
    _require_odd(F, "perron_expected")
    if F.check(a) == 0:
        raise InvalidArgumentError("perron_expected needs a non-zero shift")
    S = squares(F)
    if F.q % 4 == 1:
        n = (F.q - 1) // 4
        count = n + 1 if a in S else n
    else:
        count = (F.q + 1) // 4
    if with_zero:
        return count
    return count - len({a, F.neg(a)} & S)


def perron_nonresidue_count(F: FiniteField, a: FieldElement) -> int:
    """|(N + a) & N| for the non-residues N.

    By complementation in F this is perron_count(F, a) - 1.
    """
    _require_odd(F, "perron_nonresidue_count")
    if F.check(a) == 0:
        raise InvalidArgumentError("perron_nonresidue_count needs a non-zero shift")
    N = non_residues(F)
    return len({F.add(x, a) for x in N} & N)


def power_sum(p: int, k: int) -> int:
    """Sum of w**k over F_p, reduced mod p; it is p-1 when (p-1) | k and 0 otherwise."""
    if not isinstance(p, int) or not isprime(p):
        raise InvalidArgumentError(f"{p!r} is not prime")
    if k < 1:
        raise InvalidArgumentError(f"exponent must be positive, got {k}")
    return sum(pow(w, k, p) for w in range(p)) % p


def phi_square_sum(p: int) -> int:
    """Sum of phi(e)**2 for e = 1..p."""
    F = make_field(p, 1)
    return sum(jacobsthal_phi(F, e) ** 2 for e in range(p))


def phi_square_sum_expected(p: int) -> int:
    """p(p-1)(1 + chi(-1))."""
    F = make_field(p, 1)
    return p * (p - 1) * (1 + chi(F, F.neg(1)))


def phi_squared_values(p: int) -> tuple[int, int]:
    """(phi(r)**2, phi(n)**2) for the smallest residue r and non-residue n."""
    F = make_field(p, 1)
    r, n = _smallest_residue_and_non_residue(F)
    return jacobsthal_phi(F, r) ** 2, jacobsthal_phi(F, n) ** 2
