"""Equitable partition refinement and individualise-refine backtracking.

Both the automorphism search and the isomorphism test walk the same search
tree. A node is an ordered partition of the vertices. The root is the colour
partition refined to equitability. A child individualises one vertex of the
first smallest non-singleton cell and refines again. Refinement splits cells
by neighbour counts into every current cell. Its output depends only on the
labelled structure, so an isomorphism carries nodes to nodes with equal
traces, and any trace mismatch prunes the branch.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from math import prod
from typing import Any, TypeAlias

logger = logging.getLogger(__name__)

Cells: TypeAlias = list[list[int]]
Images: TypeAlias = tuple[int, ...]


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def image_mask(mask: int, images: Sequence[int]) -> int:
    """The bitset {images[v] : v in mask}."""
    result = 0
    for v in iter_bits(mask):
        result |= 1 << images[v]
    return result


@dataclass(frozen=True)
class SearchGraph:
    """Out-rows, in-rows and an initial vertex colouring."""

    out_rows: tuple[int, ...]
    in_rows: tuple[int, ...]
    colours: tuple[int, ...]
    directed: bool

    @classmethod
    def build(
        cls,
        rows: Sequence[int],
        directed: bool,
        colours: Sequence[int] | None = None,
    ) -> SearchGraph:
        n = len(rows)
        if directed:
            in_rows = [0] * n
            for u, row in enumerate(rows):
                for v in iter_bits(row):
                    in_rows[v] |= 1 << u
        else:
            in_rows = list(rows)
        return cls(
            out_rows=tuple(rows),
            in_rows=tuple(in_rows),
            colours=tuple(colours) if colours is not None else (0,) * n,
            directed=directed,
        )

    @property
    def n(self) -> int:
        return len(self.out_rows)

    def maps_onto(self, other: SearchGraph, images: Sequence[int]) -> bool:
        """Whether images is a colour-preserving isomorphism from self onto other."""
        for u in range(self.n):
            w = images[u]
            if self.colours[u] != other.colours[w]:
                return False
            if image_mask(self.out_rows[u], images) != other.out_rows[w]:
                return False
        return True


def refine(graph: SearchGraph, cells: Cells) -> tuple[Cells, tuple[Any, ...]]:
    """Split cells by neighbour counts until the partition is equitable."""
    trace: list[tuple[Any, ...]] = []
    cells = [list(c) for c in cells]
    while True:
        masks = [mask_of(c) for c in cells]
        refined: Cells = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((graph.out_rows[v] & m).bit_count() for m in masks)
                if graph.directed:
                    key += tuple((graph.in_rows[v] & m).bit_count() for m in masks)
                buckets.setdefault(key, []).append(v)
            keys = sorted(buckets)
            trace.append(tuple((k, len(buckets[k])) for k in keys))
            split = split or len(keys) > 1
            refined.extend(buckets[k] for k in keys)
        cells = refined
        if not split:
            return cells, tuple(trace)


def target_cell(cells: Cells) -> int | None:
    """Index of the first smallest non-singleton cell, or None when discrete."""
    best: int | None = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = i
    return best


def individualize(cells: Cells, index: int, v: int) -> Cells:
    rest = [x for x in cells[index] if x != v]
    return [*cells[:index], [v], rest, *cells[index + 1 :]]


def orbit(point: int, generators: Sequence[Images]) -> set[int]:
    seen = {point}
    frontier = [point]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = g[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def orbit_representatives(
    cell: Sequence[int], generators: Sequence[Images], first: int
) -> list[int]:
    """One point per orbit within cell, with first representing its own orbit."""
    reps = []
    seen: set[int] = set()
    for x in [first, *(y for y in cell if y != first)]:
        if x not in seen:
            reps.append(x)
            seen |= orbit(x, generators)
    return reps


@dataclass
class _Node:
    cells: Cells
    trace: tuple[Any, ...]


@dataclass
class _Path:
    """The leftmost root-to-leaf path: nodes[i+1] individualises base[i]."""

    nodes: list[_Node]
    targets: list[int]
    base: list[int]

    @property
    def leaf_cells(self) -> Cells:
        return self.nodes[-1].cells


class _TreeWalker:
    """Builds search-tree nodes for one graph and counts them."""

    def __init__(self, graph: SearchGraph) -> None:
        self.graph = graph
        self.nodes_visited = 0

    def root(self) -> _Node:
        colours = sorted(set(self.graph.colours))
        cells = [[v for v in range(self.graph.n) if self.graph.colours[v] == c] for c in colours]
        signature = tuple((c, len(cell)) for c, cell in zip(colours, cells))
        refined, trace = refine(self.graph, cells)
        return _Node(refined, (signature, trace))

    def child(self, node: _Node, index: int, v: int) -> _Node:
        self.nodes_visited += 1
        cells, trace = refine(self.graph, individualize(node.cells, index, v))
        return _Node(cells, trace)

    def first_path(self) -> _Path:
        node = self.root()
        path = _Path(nodes=[node], targets=[], base=[])
        while (index := target_cell(node.cells)) is not None:
            v = node.cells[index][0]
            node = self.child(node, index, v)
            path.nodes.append(node)
            path.targets.append(index)
            path.base.append(v)
        return path

    def leaf_images(self, path: _Path, leaf: _Node) -> Images:
        images = [0] * self.graph.n
        for src, dst in zip(path.leaf_cells, leaf.cells):
            images[src[0]] = dst[0]
        return tuple(images)

    def descend(
        self, node: _Node, level: int, w: int, path: _Path, source: SearchGraph
    ) -> Images | None:
        """Find a map from source matching path whose image of base[level] is w.

        node is the node of this walker's tree that corresponds to
        path.nodes[level]. Every branch below it is explored.
        """
        child = self.child(node, path.targets[level], w)
        if child.trace != path.nodes[level + 1].trace:
            return None
        if level + 1 == len(path.base):
            images = self.leaf_images(path, child)
            return images if source.maps_onto(self.graph, images) else None
        for x in child.cells[path.targets[level + 1]]:
            found = self.descend(child, level + 1, x, path, source)
            if found is not None:
                return found
        return None


@dataclass(frozen=True)
class AutomorphismData:
    """Output of :func:`search_automorphisms`.

    ``generators[i]`` was found while scanning base level ``levels[i]``
    and fixes every earlier base point. The generators found at levels
    >= j generate the pointwise stabilizer of ``base[:j]``.
    """

    degree: int
    base: tuple[int, ...]
    targets: tuple[int, ...]
    generators: tuple[Images, ...]
    levels: tuple[int, ...]
    orbit_sizes: tuple[int, ...]
    nodes_visited: int

    @property
    def order(self) -> int:
        return prod(self.orbit_sizes)

    def stabilizer_generators(self, level: int) -> list[Images]:
        return [g for g, lv in zip(self.generators, self.levels) if lv >= level]


def search_automorphisms(graph: SearchGraph) -> AutomorphismData:
    """Generators and exact order of the colour-preserving automorphism group."""
    walker = _TreeWalker(graph)
    path = walker.first_path()
    generators: list[Images] = []
    levels: list[int] = []
    orbit_sizes = [1] * len(path.base)

    for level in reversed(range(len(path.base))):
        b = path.base[level]
        current = orbit(b, generators)
        for w in path.nodes[level].cells[path.targets[level]]:
            if w in current:
                continue
            images = walker.descend(path.nodes[level], level, w, path, graph)
            if images is not None:
                generators.append(images)
                levels.append(level)
                current = orbit(b, generators)
                logger.debug("level %d: generator mapping %d -> %d", level, b, w)
        orbit_sizes[level] = len(current)

    logger.debug(
        "automorphism search: base length %d, %d generators, %d nodes",
        len(path.base),
        len(generators),
        walker.nodes_visited,
    )
    return AutomorphismData(
        degree=graph.n,
        base=tuple(path.base),
        targets=tuple(path.targets),
        generators=tuple(generators),
        levels=tuple(levels),
        orbit_sizes=tuple(orbit_sizes),
        nodes_visited=walker.nodes_visited,
    )


def _degree_pairs(graph: SearchGraph) -> list[tuple[int, int]]:
    return sorted((r.bit_count(), c.bit_count()) for r, c in zip(graph.out_rows, graph.in_rows))


def search_isomorphism(
    source: SearchGraph,
    target: SearchGraph,
    target_automorphisms: AutomorphismData | None = None,
) -> Images | None:
    """A colour-preserving isomorphism source -> target, or None.

    When the automorphism data of target is supplied, candidates along the
    target's own base path are reduced to one per stabilizer orbit.
    """
    if source.n != target.n or source.directed != target.directed:
        return None
    if sorted(source.colours) != sorted(target.colours):
        return None
    if _degree_pairs(source) != _degree_pairs(target):
        return None

    path = _TreeWalker(source).first_path()
    walker = _TreeWalker(target)
    root = walker.root()
    if root.trace != path.nodes[0].trace:
        return None
    if not path.base:
        images = walker.leaf_images(path, root)
        return images if source.maps_onto(target, images) else None

    aut = target_automorphisms

    def walk(node: _Node, level: int, on_base: bool) -> Images | None:
        index = path.targets[level]
        cell = node.cells[index]
        if (
            on_base
            and aut is not None
            and level < len(aut.base)
            and aut.targets[level] == index
            and aut.base[level] in cell
        ):
            stabilizer = aut.stabilizer_generators(level)
            candidates = orbit_representatives(cell, stabilizer, aut.base[level])
        else:
            on_base = False
            candidates = list(cell)
        for w in candidates:
            child = walker.child(node, index, w)
            if child.trace != path.nodes[level + 1].trace:
                continue
            if level + 1 == len(path.base):
                images = walker.leaf_images(path, child)
                if source.maps_onto(target, images):
                    return images
                continue
            still_on_base = on_base and aut is not None and w == aut.base[level]
            found = walk(child, level + 1, still_on_base)
            if found is not None:
                return found
        return None

    result = walk(root, 0, aut is not None)
    logger.debug("isomorphism search visited %d nodes", walker.nodes_visited)
    return result
