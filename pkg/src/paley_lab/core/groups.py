"""Permutation groups, affine semilinear groups and automorphism groups of graphs and designs."""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import TypeVar

from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup as SymPermutationGroup

from paley_lab.core.field import FieldElement, FiniteField
from paley_lab.core.graph import ISO_MAX_VERTICES, Graph
from paley_lab.core.hadamard import IncidenceDesign
from paley_lab.core.perm import Permutation
from paley_lab.core.refine import SearchGraph, search_automorphisms
from paley_lab.errors import InvalidArgumentError, ResourceLimitError

logger = logging.getLogger(__name__)

# Groups up to this order are also enumerated element by element
CLOSURE_LIMIT = 1_000_000

# Largest group order accepted by group_from_generators
GROUP_MAX_ORDER = 10_000_000

# Largest point count accepted by design_automorphisms
DESIGN_MAX_POINTS = 23

T = TypeVar("T", bound=Hashable)


def _closure(starts: Iterable[T], step: Callable[[T], Iterable[T]]) -> set[T]:
    seen = set(starts)
    frontier = list(seen)
    while frontier:
        x = frontier.pop()
        for y in step(x):
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def _to_sympy(perm: Permutation) -> SymPermutation:
    return SymPermutation(list(perm.images), size=perm.degree)


def _from_sympy(perm: SymPermutation, degree: int) -> Permutation:
    images = list(perm.array_form)
    return Permutation(tuple(images + list(range(len(images), degree))))


@dataclass(frozen=True, eq=False)
class PermutationGroup:
    """A group of permutations of {0..degree-1} with its exact order.

    Equality is equality of the generated groups, not of the generator lists.
    """

    degree: int
    generators: tuple[Permutation, ...]
    order: int
    _backend: SymPermutationGroup = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.order == other.order
            and all(other.contains(g) for g in self.generators)
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.order))

    def __contains__(self, perm: object) -> bool:
        return isinstance(perm, Permutation) and self.contains(perm)

    def contains(self, perm: Permutation) -> bool:
        if perm.degree != self.degree:
            return False
        return bool(self._backend.contains(_to_sympy(perm), strict=True))

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def orbit(self, point: int) -> frozenset[int]:
        if not 0 <= point < self.degree:
            raise InvalidArgumentError(f"point {point} is outside 0..{self.degree - 1}")
        return frozenset(_closure([point], lambda x: (g(x) for g in self.generators)))

    def orbits(self) -> list[frozenset[int]]:
        """Point orbits, ordered by smallest member."""
        result: list[frozenset[int]] = []
        covered: set[int] = set()
        for x in range(self.degree):
            if x not in covered:
                orb = self.orbit(x)
                covered |= orb
                result.append(orb)
        return result

    def pair_orbits(self) -> list[frozenset[tuple[int, int]]]:
        """Orbits on ordered pairs of distinct points."""
        result: list[frozenset[tuple[int, int]]] = []
        covered: set[tuple[int, int]] = set()
        for u in range(self.degree):
            for v in range(self.degree):
                if u == v or (u, v) in covered:
                    continue
                orb = frozenset(self.pair_orbit((u, v)))
                covered |= orb
                result.append(orb)
        return result

    def pair_orbit(self, pair: tuple[int, int]) -> set[tuple[int, int]]:
        return _closure([pair], lambda uv: ((g(uv[0]), g(uv[1])) for g in self.generators))

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def elements(self, *, limit: int = CLOSURE_LIMIT) -> list[Permutation]:
        """Every element, by breadth-first product closure."""
        if self.order > limit:
            raise ResourceLimitError("closure", limit, self.order)
        identity = Permutation.identity(self.degree)
        found = _closure([identity], lambda h: (g.compose(h) for g in self.generators))
        return sorted(found)

    def order_by_stabilizer_chain(self) -> int:
        return int(self._backend.order())

    def stabilizer(self, point: int) -> PermutationGroup:
        if not 0 <= point < self.degree:
            raise InvalidArgumentError(f"point {point} is outside 0..{self.degree - 1}")
        backend = self._backend.stabilizer(point)
        images = (_from_sympy(g, self.degree) for g in backend.generators)
        gens = tuple(p for p in images if not p.is_identity)
        return PermutationGroup(self.degree, gens, int(backend.order()), backend)


def _build_group(
    generators: Sequence[Permutation], degree: int | None, order: int | None = None
) -> PermutationGroup:
    """Validate generators and wrap them; ``order`` defaults to the stabilizer chain order."""
    gens = tuple(generators)
    if degree is None:
        if not gens:
            raise InvalidArgumentError("an empty generator list needs an explicit degree")
        degree = gens[0].degree
    if degree < 1:
        raise InvalidArgumentError(f"degree must be positive, got {degree}")
    for g in gens:
        if g.degree != degree:
            raise InvalidArgumentError(
                f"generator of degree {g.degree} in a group of degree {degree}"
            )

    gens = tuple(g for g in dict.fromkeys(gens) if not g.is_identity)
    backend = SymPermutationGroup(
        [_to_sympy(g) for g in gens] or [SymPermutation(list(range(degree)), size=degree)]
    )
    if order is None:
        order = int(backend.order())
    return PermutationGroup(degree, gens, order, backend)


def group_from_generators(
    generators: Sequence[Permutation],
    degree: int | None = None,
    *,
    closure_limit: int = CLOSURE_LIMIT,
    max_order: int = GROUP_MAX_ORDER,
) -> PermutationGroup:
    """The group generated by ``generators``, with its order from a stabilizer chain.

    Orders up to ``closure_limit`` are confirmed by enumerating the closure.

    Raises:
        InvalidArgumentError: No degree can be determined, or degrees differ.
        ResourceLimitError: The order exceeds ``max_order``.
    """
    group = _build_group(generators, degree)
    order, degree, gens = group.order, group.degree, group.generators
    if order > max_order:
        raise ResourceLimitError("group order", max_order, order)

    if order <= closure_limit:
        enumerated = len(group.elements(limit=closure_limit))
        if enumerated != order:
            raise AssertionError(
                f"stabilizer chain order {order} disagrees with closure size {enumerated}"
            )
    logger.debug("group of degree %d with %d generators has order %d", degree, len(gens), order)
    return group


def _field_map(F: FiniteField, func: Callable[[FieldElement], FieldElement]) -> Permutation:
    return Permutation.from_function(F.q, func)


def translation_generators(F: FiniteField) -> list[Permutation]:
    """Translations by the polynomial basis 1, x, ..., x**(e-1) of F over F_p."""
    return [_field_map(F, lambda v, t=F.p**i: F.add(v, t)) for i in range(F.e)]


def multiplication(F: FiniteField, a: FieldElement) -> Permutation:
    if F.check(a) == 0:
        raise InvalidArgumentError("multiplication by 0 is not a permutation")
    return _field_map(F, lambda v: F.mul(a, v))


def frobenius_map(F: FiniteField, j: int = 1) -> Permutation:
    """v -> v**(p**j)."""
    return _field_map(F, lambda v: F.frobenius(v, j % F.e))


def _affine_group(F: FiniteField, multiplier: FieldElement, **limits: int) -> PermutationGroup:
    gens = [*translation_generators(F), multiplication(F, multiplier)]
    if F.e > 1:
        gens.append(frobenius_map(F))
    return group_from_generators(gens, F.q, **limits)


def a_delta_l1(F: FiniteField, **limits: int) -> PermutationGroup:
    """v -> a v**gamma + b with a a non-zero square; order q(q-1)e/2."""
    if F.p == 2:
        raise InvalidArgumentError(f"the group of square multipliers needs odd q, got q={F.q}")
    group = _affine_group(F, F.exp(2), **limits)
    expected = F.q * (F.q - 1) * F.e // 2
    if group.order != expected:
        raise AssertionError(f"order {group.order}, expected q(q-1)e/2 = {expected}")
    return group


def a_gamma_l1(F: FiniteField, **limits: int) -> PermutationGroup:
    """All semilinear affine maps v -> a v**gamma + b; order q(q-1)e."""
    return _affine_group(F, F.omega, **limits)


def generalized_paley_affine_group(F: FiniteField, m: int, **limits: int) -> PermutationGroup:
    """v -> a v**gamma + b with a in the subgroup of order m; order m*q*e."""
    if m < 1 or (F.q - 1) % m:
        raise InvalidArgumentError(f"m={m} does not divide q-1={F.q - 1}")
    return _affine_group(F, F.exp((F.q - 1) // m), **limits)


def _search_group(
    search: SearchGraph,
    degree: int,
    check: Callable[[Permutation], bool],
) -> PermutationGroup:
    """Wrap a refinement search; the order is the product of its basic orbit sizes.

    When ``degree`` is smaller than the search graph only the action on the
    first ``degree`` vertices is kept, and the order comes from the stabilizer
    chain of that action.
    """
    data = search_automorphisms(search)
    gens = [Permutation(g[:degree]) for g in data.generators]
    for g in gens:
        if not check(g):
            raise AssertionError(f"search returned {g}, which is not an automorphism")
    group = _build_group(gens, degree, data.order if degree == search.n else None)
    logger.debug(
        "automorphism search: order %d, %d generators, %d nodes",
        group.order,
        len(gens),
        data.nodes_visited,
    )
    return group


def graph_automorphisms(G: Graph, *, max_vertices: int = ISO_MAX_VERTICES) -> PermutationGroup:
    """Full automorphism group of a graph or digraph by refinement backtracking.

    The group is not enumerated; its order can exceed every closure bound.
    """
    if G.n > max_vertices:
        raise ResourceLimitError("vertices", max_vertices, G.n)
    return _search_group(G.search_graph(), G.n, G.is_automorphism)


def tournament_automorphisms(
    T: Graph, *, max_vertices: int = ISO_MAX_VERTICES
) -> PermutationGroup:
    """Automorphism group of a tournament; its order is always odd."""
    if not T.is_tournament():
        raise InvalidArgumentError("input is not a tournament")
    group = graph_automorphisms(T, max_vertices=max_vertices)
    if group.order % 2 == 0:
        raise AssertionError(f"tournament automorphism group has even order {group.order}")
    return group


def _maps_blocks(D: IncidenceDesign, perm: Permutation) -> bool:
    blocks = set(D.blocks)
    return all(tuple(sorted(perm(x) for x in b)) in blocks for b in D.blocks)


def design_automorphisms(
    D: IncidenceDesign, *, max_points: int = DESIGN_MAX_POINTS
) -> PermutationGroup:
    """Point permutations that permute the blocks.

    The search runs on the point-block incidence graph with points and
    blocks coloured apart, and keeps the action on points.
    """
    if D.points > max_points:
        raise ResourceLimitError("design points", max_points, D.points)
    P = D.points
    rows = [0] * (P + len(D.blocks))
    for i, block in enumerate(D.blocks):
        for x in block:
            rows[x] |= 1 << (P + i)
            rows[P + i] |= 1 << x
    colours = [0] * P + [1] * len(D.blocks)
    search = SearchGraph.build(rows, directed=False, colours=colours)
    return _search_group(search, P, lambda g: _maps_blocks(D, g))


def is_arc_transitive(G: Graph, group: PermutationGroup) -> bool:
    """Whether group acts transitively on the ordered adjacent pairs of G."""
    if group.degree != G.n:
        raise InvalidArgumentError(f"group of degree {group.degree} cannot act on {G.n} vertices")
    for g in group.generators:
        if not G.is_automorphism(g):
            raise InvalidArgumentError(f"{g} is not an automorphism of the graph")
    arcs = {(u, v) for u in range(G.n) for v in G.neighbours(u)}
    if not arcs:
        return False
    return group.pair_orbit(min(arcs)) == arcs


def suborbit_lengths(group: PermutationGroup, point: int = 0) -> list[int]:
    """Sizes of the orbits of the stabilizer of point, ascending."""
    return sorted(len(orb) for orb in group.stabilizer(point).orbits())
