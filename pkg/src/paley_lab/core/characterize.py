"""Exhaustive searches behind the characterizations of Aut P(q) and its generalizations.

Each search looks for permutations f of F_q that carry the class of every
difference u - v to a prescribed class of f(u) - f(v). Classes are the
cosets of a multiplicative subgroup of index d: d = 2 gives the quadratic
character. Candidates are kept as bitsets and pruned by forward checking
after every assignment, in field encoding order.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import permutations
from math import gcd

from paley_lab.core.field import FiniteField
from paley_lab.core.graph import ISO_MAX_VERTICES
from paley_lab.core.groups import (
    CLOSURE_LIMIT,
    GROUP_MAX_ORDER,
    PermutationGroup,
    a_delta_l1,
    frobenius_map,
    graph_automorphisms,
    group_from_generators,
    multiplication,
    translation_generators,
)
from paley_lab.core.paley import paley_graph
from paley_lab.core.perm import Permutation
from paley_lab.core.refine import iter_bits
from paley_lab.errors import InvalidArgumentError, ResourceLimitError

logger = logging.getLogger(__name__)

CARLITZ_MAX_Q = 49
MCCONNEL_MAX_Q = 27
LENSTRA_MAX_Q = 13
PALEY_AUT_MAX_Q = 49


class _CosetSearch:
    """Backtracking over permutations that respect coset classes of differences."""

    def __init__(self, F: FiniteField, d: int) -> None:
        self.F = F
        self.d = d
        q = F.q
        self.diff_class = [
            [F.log(F.sub(z, x)) % d if z != x else -1 for x in range(q)] for z in range(q)
        ]
        # class_masks[c][a] = bitset of a + y over the y in class c
        self.class_masks = [[0] * q for _ in range(d)]
        for y in range(1, q):
            c = F.log(y) % d
            for a in range(q):
                self.class_masks[c][a] |= 1 << F.add(a, y)
        self.nodes_visited = 0

    def _assign(
        self, domains: list[int], images: list[int], x: int, y: int, kappa: Sequence[int]
    ) -> list[int] | None:
        new = list(domains)
        new[x] = 1 << y
        for z in range(self.F.q):
            if images[z] < 0 and z != x:
                new[z] &= self.class_masks[kappa[self.diff_class[z][x]]][y]
                if not new[z]:
                    return None
        return new

    def solutions(
        self, fixed: dict[int, int], kappa: Sequence[int] | None = None
    ) -> Iterator[Permutation]:
        """Every permutation with the given fixed values and class map kappa."""
        q = self.F.q
        kappa = tuple(range(self.d)) if kappa is None else tuple(kappa)
        images = [-1] * q
        domains = [(1 << q) - 1] * q
        for x, y in fixed.items():
            if not domains[x] >> y & 1:
                return
            new = self._assign(domains, images, x, y, kappa)
            if new is None:
                return
            domains = new
            images[x] = y
        yield from self._extend(domains, images, kappa)

    def _extend(
        self, domains: list[int], images: list[int], kappa: Sequence[int]
    ) -> Iterator[Permutation]:
        self.nodes_visited += 1
        try:
            x = images.index(-1)
        except ValueError:
            yield Permutation(tuple(images))
            return
        for y in iter_bits(domains[x]):
            new = self._assign(domains, images, x, y, kappa)
            if new is None:
                continue
            images[x] = y
            yield from self._extend(new, images, kappa)
            images[x] = -1


def _require_odd_bounded(F: FiniteField, max_q: int, name: str) -> None:
    if F.p == 2:
        raise InvalidArgumentError(f"{name} needs odd q, got q={F.q}")
    if F.q > max_q:
        raise ResourceLimitError(f"{name} q", max_q, F.q)


def carlitz_permutations(F: FiniteField, *, max_q: int = CARLITZ_MAX_Q) -> list[Permutation]:
    """Permutations fixing 0 and 1 that preserve chi(u - v) for every pair."""
    _require_odd_bounded(F, max_q, "carlitz")
    search = _CosetSearch(F, 2)
    found = sorted(search.solutions({0: 0, 1: 1}))
    logger.debug("carlitz q=%d: %d maps, %d nodes", F.q, len(found), search.nodes_visited)
    return found


def predicted_frobenius_maps(F: FiniteField, d: int = 2) -> list[Permutation]:
    """v -> v**(p**j) for 0 <= j < e with d | p**j - 1."""
    return sorted({frobenius_map(F, j) for j in range(F.e) if (F.p**j - 1) % d == 0})


def _require_index(F: FiniteField, d: int) -> None:
    if not 1 < d < F.q - 1 or (F.q - 1) % d:
        raise InvalidArgumentError(f"d={d} must be a proper divisor of q-1={F.q - 1} with d > 1")


def mcconnel_permutations(
    F: FiniteField, d: int, *, max_q: int = MCCONNEL_MAX_Q
) -> list[Permutation]:
    """Maps fixing 0 and 1 that keep every difference in its coset of the index-d subgroup."""
    _require_index(F, d)
    if F.q > max_q:
        raise ResourceLimitError("mcconnel q", max_q, F.q)
    search = _CosetSearch(F, d)
    found = sorted(search.solutions({0: 0, 1: 1}))
    logger.debug("mcconnel q=%d d=%d: %d maps, %d nodes", F.q, d, len(found), search.nodes_visited)
    return found


def frobenius_step(F: FiniteField, d: int) -> int:
    """Smallest j >= 1 with d | p**j - 1."""
    j = 1
    while (F.p**j - 1) % d:
        j += 1
    return j


def mcconnel_group(
    F: FiniteField,
    d: int,
    *,
    closure_limit: int = CLOSURE_LIMIT,
    max_order: int = GROUP_MAX_ORDER,
) -> PermutationGroup:
    """x -> a x**(p**j) + b with a in the subgroup D of index d and d | p**j - 1."""
    _require_index(F, d)
    gens = [*translation_generators(F), multiplication(F, F.exp(d))]
    step = frobenius_step(F, d)
    if step < F.e:
        gens.append(frobenius_map(F, step))
    return group_from_generators(gens, F.q, closure_limit=closure_limit, max_order=max_order)


@dataclass(frozen=True)
class McConnelOrder:
    """The computed order of G(d) against the published m*q*gcd(m, e) and the direct count."""

    q: int
    d: int
    computed: int
    published: int
    oracle: int

    @property
    def m(self) -> int:
        return (self.q - 1) // self.d

    @property
    def published_matches(self) -> bool:
        return self.computed == self.published

    @property
    def oracle_matches(self) -> bool:
        return self.computed == self.oracle


def mcconnel_order_report(F: FiniteField, d: int, **limits: int) -> McConnelOrder:
    group = mcconnel_group(F, d, **limits)
    m = (F.q - 1) // d
    report = McConnelOrder(
        q=F.q,
        d=d,
        computed=group.order,
        published=m * F.q * gcd(m, F.e),
        oracle=m * F.q * (F.e // frobenius_step(F, d)),
    )
    if not report.published_matches:
        logger.warning(
            "G(%d) on F_%d has order %d, published formula gives %d",
            d,
            F.q,
            report.computed,
            report.published,
        )
    return report


@dataclass(frozen=True)
class NormalizerSearch:
    """Permutations f with class(f(u) - f(v)) = kappa(class(u - v)) for some kappa."""

    q: int
    d: int
    members: tuple[Permutation, ...]
    kappa_count: int
    is_group: bool
    contains_base_group: bool
    normalizes: bool

    @property
    def ok(self) -> bool:
        return self.is_group and self.contains_base_group and self.normalizes


def lenstra_normalizer_members(
    F: FiniteField,
    d: int,
    *,
    max_q: int = LENSTRA_MAX_Q,
    closure_limit: int = CLOSURE_LIMIT,
    max_order: int = GROUP_MAX_ORDER,
) -> NormalizerSearch:
    """All f respecting difference classes up to a permutation kappa of the d classes.

    Translations commute with the condition, so the search fixes f(0) = 0
    and adds the q translates afterwards.
    """
    _require_index(F, d)
    if F.q > max_q:
        raise ResourceLimitError("lenstra q", max_q, F.q)
    search = _CosetSearch(F, d)
    fixing_zero: list[Permutation] = []
    kappa_count = 0
    for kappa in permutations(range(d)):
        found = list(search.solutions({0: 0}, kappa))
        if found:
            kappa_count += 1
            fixing_zero.extend(found)
    translations = [
        Permutation.from_function(F.q, lambda v, b=b: F.add(v, b)) for b in range(F.q)
    ]
    members = tuple(sorted({t.compose(f) for t in translations for f in fixing_zero}))
    logger.debug(
        "lenstra q=%d d=%d: %d members over %d class maps, %d nodes",
        F.q,
        d,
        len(members),
        kappa_count,
        search.nodes_visited,
    )

    base = mcconnel_group(F, d, closure_limit=closure_limit, max_order=max_order)
    closure = group_from_generators(members, F.q, closure_limit=closure_limit, max_order=max_order)
    member_set = set(members)
    return NormalizerSearch(
        q=F.q,
        d=d,
        members=members,
        kappa_count=kappa_count,
        is_group=closure.order == len(members),
        contains_base_group=all(g in member_set for g in base.elements(limit=closure_limit)),
        normalizes=all(
            base.contains(f.compose(g).compose(f.inverse()))
            for f in members
            for g in base.generators
        ),
    )


@dataclass(frozen=True)
class PaleyAutomorphismReport:
    """Aut P(q) against the group of maps v -> a v**gamma + b with a a square."""

    q: int
    expected_order: int
    automorphism_order: int
    affine_order: int
    affine_in_automorphisms: bool
    automorphisms_in_affine: bool

    @property
    def equal(self) -> bool:
        return (
            self.automorphism_order == self.affine_order == self.expected_order
            and self.affine_in_automorphisms
            and self.automorphisms_in_affine
        )


def verify_paley_automorphisms(
    F: FiniteField,
    *,
    max_q: int = PALEY_AUT_MAX_Q,
    max_vertices: int = ISO_MAX_VERTICES,
    closure_limit: int = CLOSURE_LIMIT,
    max_order: int = GROUP_MAX_ORDER,
) -> PaleyAutomorphismReport:
    """Compare the full automorphism group of P(q) with its semilinear affine subgroup.

    Containment is checked both ways on generators.
    """
    if F.q > max_q:
        raise ResourceLimitError("paley automorphism q", max_q, F.q)
    P = paley_graph(F)
    aut = graph_automorphisms(P, max_vertices=max_vertices)
    affine = a_delta_l1(F, closure_limit=closure_limit, max_order=max_order)
    return PaleyAutomorphismReport(
        q=F.q,
        expected_order=F.q * (F.q - 1) * F.e // 2,
        automorphism_order=aut.order,
        affine_order=affine.order,
        affine_in_automorphisms=all(P.is_automorphism(g) for g in affine.generators)
        and affine.is_subgroup_of(aut),
        automorphisms_in_affine=aut.is_subgroup_of(affine),
    )
