"""Paley graphs, Paley tournaments, generalized Paley graphs and Peisert graphs."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from paley_lab.core.field import FieldElement, FiniteField
from paley_lab.core.graph import Graph, cayley_graph
from paley_lab.core.residues import squares
from paley_lab.errors import InvalidArgumentError, NotConnectedError

logger = logging.getLogger(__name__)


def paley_graph(F: FiniteField) -> Graph:
    """P(q): u ~ v iff u - v is a non-zero square. Needs q = 1 mod 4."""
    if F.q % 4 != 1:
        raise InvalidArgumentError(
            f"the Paley graph needs q = 1 mod 4, got q={F.q}; use paley_tournament for q = 3 mod 4"
        )
    return cayley_graph(F, squares(F))


def paley_tournament(F: FiniteField) -> Graph:
    """Arc u -> v iff v - u is a non-zero square. Needs q = 3 mod 4."""
    if F.q % 4 != 3:
        raise InvalidArgumentError(f"the Paley tournament needs q = 3 mod 4, got q={F.q}")
    T = cayley_graph(F, squares(F))
    if not T.is_tournament():
        raise AssertionError(f"Cayley digraph on the squares of F_{F.q} is not a tournament")
    return T


@dataclass(frozen=True)
class GeneralizedPaleySpec:
    """The connection subgroup D of order m and its index d = (q-1)/m."""

    field: FiniteField
    m: int
    subgroup: frozenset[FieldElement]

    @property
    def d(self) -> int:
        return (self.field.q - 1) // self.m

    @property
    def lim_praeger_large(self) -> bool:
        """The index d divides p - 1."""
        return (self.field.p - 1) % self.d == 0


def multiplicative_subgroup(F: FiniteField, m: int) -> frozenset[FieldElement]:
    """The unique subgroup of order m in F*, as the image of x -> x**((q-1)/m)."""
    if m < 1 or (F.q - 1) % m:
        raise InvalidArgumentError(f"m={m} does not divide q-1={F.q - 1}")
    d = (F.q - 1) // m
    return frozenset(F.pow(x, d) for x in range(1, F.q))


def additive_span(F: FiniteField, generators: frozenset[FieldElement]) -> frozenset[FieldElement]:
    """Elements reachable from 0 by adding generators."""
    reached = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = F.add(x, g)
            if y not in reached:
                reached.add(y)
                frontier.append(y)
    return frozenset(reached)


def generalized_paley(F: FiniteField, m: int) -> tuple[Graph, GeneralizedPaleySpec]:
    """The Cayley graph of (F, +) whose connection set is the subgroup of order m."""
    if m < 1 or (F.q - 1) % m:
        raise InvalidArgumentError(f"m={m} does not divide q-1={F.q - 1}")
    if F.p != 2 and m % 2:
        raise InvalidArgumentError(f"m must be even when q is odd, got m={m} for q={F.q}")
    D = multiplicative_subgroup(F, m)
    if len(additive_span(F, D)) != F.q:
        raise NotConnectedError(f"the subgroup of order {m} does not generate F_{F.q} additively")
    spec = GeneralizedPaleySpec(F, m, D)
    logger.debug("generalized Paley graph q=%d m=%d d=%d", F.q, m, spec.d)
    return cayley_graph(F, D), spec


def primitive_roots(F: FiniteField) -> list[FieldElement]:
    return [x for x in range(1, F.q) if F.is_primitive(x)]


def peisert_connection_set(F: FiniteField, omega: FieldElement) -> frozenset[FieldElement]:
    """{omega**j : j = 0 or 1 mod 4}."""
    return frozenset(F.pow(omega, j) for j in range(F.q - 1) if j % 4 in (0, 1))


def peisert_graph(F: FiniteField, omega: FieldElement | None = None) -> Graph:
    """The Peisert graph P*(q) for q = p**(2k), p = 3 mod 4."""
    if F.p % 4 != 3 or F.e % 2:
        raise InvalidArgumentError(
            f"the Peisert graph needs q = p^(2k) with p = 3 mod 4, got p={F.p} e={F.e}"
        )
    if omega is None:
        omega = F.omega
    elif not F.is_primitive(omega):
        raise InvalidArgumentError(f"{omega} is not a primitive root of F_{F.q}")
    G = cayley_graph(F, peisert_connection_set(F, omega))
    if G.directed:
        raise AssertionError("Peisert connection set is not symmetric")
    return G
