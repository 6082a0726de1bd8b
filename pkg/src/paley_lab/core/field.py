"""Finite field construction and exact arithmetic in F_q, q = p**e."""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import product
from math import gcd
from typing import TypeAlias

import numpy as np
from sympy import factorint, isprime

from paley_lab.errors import InvalidArgumentError

logger = logging.getLogger(__name__)

# An element is its base-p encoding: digit i is the coefficient of x**i.
FieldElement: TypeAlias = int

MAX_FIELD_ORDER = 1 << 20

# Fields up to this order get a precomputed addition table
ADD_TABLE_LIMIT = 729


def _to_digits(x: int, p: int, e: int) -> list[int]:
    """Base-p digits of x, least significant first."""
    digits = []
    for _ in range(e):
        x, r = divmod(x, p)
        digits.append(r)
    return digits


def _from_digits(digits: list[int], p: int) -> int:
    """Inverse of _to_digits."""
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num modulo den over F_p (coefficient lists, constant term first)."""
    r = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i] * inv_lead % p
        if c:
            for j in range(dd + 1):
                r[i - dd + j] = (r[i - dd + j] - c * den[j]) % p
    return r[:dd]


def _is_irreducible(modulus_low: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..e//2."""
    e = len(modulus_low) - 1
    for k in range(1, e // 2 + 1):
        for lower in product(range(p), repeat=k):
            divisor = list(reversed(lower)) + [1]
            if not any(_poly_rem(modulus_low, divisor, p)):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e, coefficients high to low."""
    for lower in product(range(p), repeat=e):
        high = (1, *lower)
        if _is_irreducible(list(reversed(high)), p):
            return high
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


class FiniteField:
    """The field F_q with elements encoded as integers 0..q-1.

    Use :func:`make_field` rather than constructing directly; it caches one
    instance per (p, e). Multiplication goes through exp/log tables built
    from the primitive root ``omega``, so every operation is a table lookup.
    """

    def __init__(self, p: int, e: int) -> None:
        if not isinstance(p, int) or not isprime(p):
            raise InvalidArgumentError(f"field characteristic must be prime, got {p!r}")
        if not isinstance(e, int) or e < 1:
            raise InvalidArgumentError(f"extension degree must be a positive integer, got {e!r}")
        if p**e > MAX_FIELD_ORDER:
            raise InvalidArgumentError(f"field order {p}**{e} exceeds {MAX_FIELD_ORDER}")

        self.p = p
        self.e = e
        self.q = p**e
        self.modulus: tuple[int, ...] = _smallest_irreducible(p, e)
        self._modulus_low = list(reversed(self.modulus))

        self.omega: FieldElement = self._find_primitive_root()
        self._exp, self._log = self._build_power_tables()
        self._add_table, self._neg_table = self._build_additive_tables()
        logger.debug("Constructed F_%d (p=%d, e=%d, omega=%d)", self.q, p, e, self.omega)

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, e={self.e})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    # Construction helpers

    def _slow_mul(self, x: int, y: int) -> int:
        """Polynomial multiplication modulo the field polynomial."""
        p, e = self.p, self.e
        a = _to_digits(x, p, e)
        b = _to_digits(y, p, e)
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        if e == 1:
            return prod[0] % p
        return _from_digits(_poly_rem([c % p for c in prod], self._modulus_low, p), p)

    def _slow_pow(self, x: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._slow_mul(result, x)
            x = self._slow_mul(x, x)
            k >>= 1
        return result

    def _find_primitive_root(self) -> int:
        """Smallest encoding whose multiplicative order is q-1."""
        if self.q == 2:
            return 1
        group_order = self.q - 1
        prime_factors = list(factorint(group_order))
        for candidate in range(2, self.q):
            if all(self._slow_pow(candidate, group_order // r) != 1 for r in prime_factors):
                return candidate
        raise AssertionError(f"F_{self.q} has no primitive root")

    def _build_power_tables(self) -> tuple[list[int], list[int]]:
        group_order = self.q - 1
        exp = [1] * group_order
        for i in range(1, group_order):
            exp[i] = self._slow_mul(exp[i - 1], self.omega)
        log = [-1] * self.q
        for i, x in enumerate(exp):
            log[x] = i
        if -1 in log[1:]:
            raise AssertionError(f"omega={self.omega} does not generate F_{self.q}*")
        return exp, log

    def _build_additive_tables(self) -> tuple[list[list[int]] | None, list[int]]:
        p, e, q = self.p, self.e, self.q
        if e == 1:
            return None, [(-x) % p for x in range(q)]
        powers = p ** np.arange(e, dtype=np.int64)
        digits = (np.arange(q, dtype=np.int64)[:, None] // powers[None, :]) % p
        neg = (((-digits) % p) @ powers).tolist()
        if q > ADD_TABLE_LIMIT:
            return None, neg
        sums = (digits[:, None, :] + digits[None, :, :]) % p
        return (sums @ powers).tolist(), neg

    # Element helpers

    def check(self, x: FieldElement) -> FieldElement:
        """Return x if it encodes an element of this field, else raise."""
        if not isinstance(x, (int, np.integer)) or not 0 <= x < self.q:
            raise InvalidArgumentError(f"{x!r} is not an element of F_{self.q}")
        return int(x)

    def elements(self) -> list[FieldElement]:
        """All q elements in encoding order; the first is always 0."""
        return list(range(self.q))

    def digits(self, x: FieldElement) -> list[int]:
        """Coefficient vector of x, constant term first."""
        return _to_digits(self.check(x), self.p, self.e)

    def from_digits(self, digits: list[int]) -> FieldElement:
        if len(digits) > self.e or any(not 0 <= d < self.p for d in digits):
            raise InvalidArgumentError(f"{digits!r} is not a coefficient vector over F_{self.p}")
        return _from_digits(list(digits), self.p)

    def format_element(self, x: FieldElement) -> str:
        """Polynomial form of x in the generator ``x``, e.g. ``2x+1``."""
        terms = []
        for power, coeff in reversed(list(enumerate(self.digits(x)))):
            if not coeff:
                continue
            if power == 0:
                terms.append(str(coeff))
            else:
                mono = "x" if power == 1 else f"x^{power}"
                terms.append(mono if coeff == 1 else f"{coeff}{mono}")
        return "+".join(terms) or "0"

    # Arithmetic

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        x, y = self.check(x), self.check(y)
        if self.e == 1:
            return (x + y) % self.p
        if self._add_table is not None:
            return self._add_table[x][y]
        p = self.p
        a = _to_digits(x, p, self.e)
        b = _to_digits(y, p, self.e)
        return _from_digits([(ai + bi) % p for ai, bi in zip(a, b)], p)

    def neg(self, x: FieldElement) -> FieldElement:
        return self._neg_table[self.check(x)]

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.add(x, self.neg(y))

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        x, y = self.check(x), self.check(y)
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]

    def inv(self, x: FieldElement) -> FieldElement:
        if self.check(x) == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.q}")
        return self._exp[(-self._log[x]) % (self.q - 1)]

    def div(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.mul(x, self.inv(y))

    def pow(self, x: FieldElement, k: int) -> FieldElement:
        """x**k, with x**0 = 1 for every x and negative k meaning an inverse power."""
        x = self.check(x)
        if k == 0:
            return 1
        if x == 0:
            if k < 0:
                raise ZeroDivisionError(f"0 has no inverse in F_{self.q}")
            return 0
        return self._exp[(self._log[x] * k) % (self.q - 1)]

    def frobenius(self, x: FieldElement, j: int) -> FieldElement:
        """The Galois automorphism x -> x**(p**j), for 0 <= j < e."""
        if not 0 <= j < self.e:
            raise InvalidArgumentError(f"Frobenius exponent must lie in [0, {self.e}), got {j}")
        return self.pow(x, self.p**j)

    def log(self, x: FieldElement) -> int:
        """Discrete logarithm of a non-zero x to the base omega."""
        if self.check(x) == 0:
            raise InvalidArgumentError("0 has no discrete logarithm")
        return self._log[x]

    def exp(self, i: int) -> FieldElement:
        """omega**i."""
        return self._exp[i % (self.q - 1)]

    def multiplicative_order(self, x: FieldElement) -> int:
        return (self.q - 1) // gcd(self.log(x), self.q - 1)

    def is_primitive(self, x: FieldElement) -> bool:
        return self.check(x) != 0 and self.multiplicative_order(x) == self.q - 1


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FiniteField:
    """Construct F_{p^e}; a pure function of (p, e)."""
    return FiniteField(p, e)


def prime_power_parts(q: int) -> tuple[int, int] | None:
    """Return (p, e) with q = p**e, or None when q is not a prime power."""
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, e),) = factors.items()
    return int(p), int(e)


def field_of_order(q: int) -> FiniteField:
    """The field with q elements."""
    parts = prime_power_parts(q)
    if parts is None:
        raise InvalidArgumentError(f"{q} is not a prime power")
    return make_field(*parts)


def prime_powers(limit: int, *, residue_mod_4: int | None = None) -> list[int]:
    """Prime powers 2 <= q <= limit, optionally only those congruent to residue_mod_4."""
    return [
        q
        for q in range(2, limit + 1)
        if prime_power_parts(q) is not None and (residue_mod_4 is None or q % 4 == residue_mod_4)
    ]
