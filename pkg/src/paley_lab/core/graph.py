"""Bitset graphs and digraphs: Cayley graphs, SRG parameters, isomorphism and Delta counts."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from paley_lab.core.field import FieldElement, FiniteField
from paley_lab.core.perm import Permutation
from paley_lab.core.refine import (
    SearchGraph,
    image_mask,
    iter_bits,
    search_automorphisms,
    search_isomorphism,
)
from paley_lab.errors import InvalidArgumentError, ResourceLimitError

logger = logging.getLogger(__name__)

# Largest vertex count accepted by the isomorphism test
ISO_MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """A loop-free graph or digraph on {0..n-1}.

    ``rows[u]`` is the bitset of out-neighbours of u. Undirected graphs have
    symmetric rows.
    """

    n: int
    rows: tuple[int, ...]
    directed: bool = False

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.n < 1 or len(rows) != self.n:
            raise InvalidArgumentError(f"expected {self.n} adjacency rows, got {len(rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(rows):
            if row & ~full or row < 0:
                raise InvalidArgumentError(f"row {u} refers to vertices outside 0..{self.n - 1}")
            if row >> u & 1:
                raise InvalidArgumentError(f"loop at vertex {u}")
        if not self.directed:
            for u, row in enumerate(rows):
                for v in iter_bits(row):
                    if not rows[v] >> u & 1:
                        raise InvalidArgumentError(f"undirected graph has arc {u}->{v} only")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], directed: bool = False
    ) -> Graph:
        rows = [0] * n
        for u, v in edges:
            rows[u] |= 1 << v
            if not directed:
                rows[v] |= 1 << u
        return cls(n, tuple(rows), directed)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], directed: bool | None = None) -> Graph:
        """Build from a 0/1 matrix; directedness defaults to asymmetry of the matrix."""
        n = len(matrix)
        rows = []
        for u, line in enumerate(matrix):
            if len(line) != n:
                raise InvalidArgumentError(
                    f"adjacency row {u} has length {len(line)}, expected {n}"
                )
            rows.append(sum(1 << v for v, bit in enumerate(line) if bit))
        if directed is None:
            directed = any(matrix[u][v] != matrix[v][u] for u in range(n) for v in range(u))
        return cls(n, tuple(rows), directed)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbours(self, u: int) -> list[int]:
        return list(iter_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    @cached_property
    def in_rows(self) -> tuple[int, ...]:
        if not self.directed:
            return self.rows
        return SearchGraph.build(self.rows, directed=True).in_rows

    def edges(self) -> list[tuple[int, int]]:
        """Edges u < v when undirected, all arcs otherwise; ascending."""
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.rows[u])
            if self.directed or u < v
        ]

    @property
    def edge_count(self) -> int:
        total = sum(r.bit_count() for r in self.rows)
        return total if self.directed else total // 2

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            matrix[u, v] = 1
            if not self.directed:
                matrix[v, u] = 1
        return matrix

    def is_tournament(self) -> bool:
        if not self.directed:
            return False
        return all(
            self.has_edge(u, v) != self.has_edge(v, u)
            for u in range(self.n)
            for v in range(u + 1, self.n)
        )

    def is_automorphism(self, perm: Permutation) -> bool:
        if perm.degree != self.n:
            return False
        images = perm.images
        return all(image_mask(self.rows[u], images) == self.rows[images[u]] for u in range(self.n))

    def search_graph(self, colours: Sequence[int] | None = None) -> SearchGraph:
        return SearchGraph.build(self.rows, self.directed, colours)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgumentError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cayley_graph(F: FiniteField, connection: Iterable[FieldElement]) -> Graph:
    """u ~ v iff v - u is in the connection set; directed unless the set is symmetric."""
    conn = frozenset(F.check(s) for s in connection)
    if 0 in conn:
        raise InvalidArgumentError("the connection set of a Cayley graph must not contain 0")
    directed = conn != frozenset(F.neg(s) for s in conn)
    rows = tuple(sum(1 << F.add(u, s) for s in conn) for u in range(F.q))
    return Graph(F.q, rows, directed)


def complement(G: Graph) -> Graph:
    if G.directed:
        raise InvalidArgumentError("complement is defined for undirected graphs only")
    full = (1 << G.n) - 1
    return Graph(G.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(G.rows)))


def relabel(G: Graph, perm: Permutation) -> Graph:
    """The image of G under perm: u -> v becomes perm(u) -> perm(v)."""
    if perm.degree != G.n:
        raise InvalidArgumentError(
            f"permutation of degree {perm.degree} cannot relabel {G.n} vertices"
        )
    rows = [0] * G.n
    for u, row in enumerate(G.rows):
        rows[perm(u)] = image_mask(row, perm.images)
    return Graph(G.n, tuple(rows), G.directed)


def degree_sequence(G: Graph) -> list[int]:
    return sorted((G.degree(u) for u in range(G.n)), reverse=True)


def is_connected(G: Graph) -> bool:
    """Connectivity of the underlying undirected graph."""
    reach = 1
    frontier = 1
    while frontier:
        new = 0
        for u in iter_bits(frontier):
            new |= G.rows[u] | G.in_rows[u]
        frontier = new & ~reach
        reach |= new
    return reach == (1 << G.n) - 1


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular parameters (v, k, lambda, mu)."""

    v: int
    k: int
    lam: int
    mu: int

    def __str__(self) -> str:
        return f"v={self.v} k={self.k} lambda={self.lam} mu={self.mu}"

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.v, self.k, self.lam, self.mu

    def is_consistent(self) -> bool:
        """Double counting: (v-k-1)*mu = k*(k-lambda-1)."""
        return (self.v - self.k - 1) * self.mu == self.k * (self.k - self.lam - 1)

    def complement(self) -> SrgParams:
        v, k, lam, mu = self.as_tuple()
        return SrgParams(v, v - k - 1, v - 2 - 2 * k + mu, v - 2 * k + lam)


@dataclass(frozen=True)
class NotStronglyRegular:
    """Why a graph failed the SRG test, with a violating pair when there is one."""

    reason: str
    pair: tuple[int, int] | None = None

    def __str__(self) -> str:
        where = f" at pair {self.pair}" if self.pair else ""
        return f"not strongly regular: {self.reason}{where}"


def srg_params(G: Graph) -> SrgParams | NotStronglyRegular:
    """Strongly regular parameters by exhaustive pair scan."""
    if G.directed:
        return NotStronglyRegular("graph is directed")
    if G.edge_count == 0:
        return NotStronglyRegular("graph has no edges")
    if G.edge_count == G.n * (G.n - 1) // 2:
        return NotStronglyRegular("graph is complete")
    if not is_connected(G):
        return NotStronglyRegular("graph is not connected")

    k = G.degree(0)
    for u in range(1, G.n):
        if G.degree(u) != k:
            return NotStronglyRegular(f"degree {G.degree(u)} differs from {k}", (0, u))

    lam: int | None = None
    mu: int | None = None
    first_adjacent: tuple[int, int] | None = None
    first_apart: tuple[int, int] | None = None
    for u in range(G.n):
        for v in range(u + 1, G.n):
            common = (G.rows[u] & G.rows[v]).bit_count()
            if G.has_edge(u, v):
                if lam is None:
                    lam, first_adjacent = common, (u, v)
                elif common != lam:
                    return NotStronglyRegular(
                        f"adjacent pairs {first_adjacent} and {(u, v)} have {lam} and {common} "
                        "common neighbours",
                        (u, v),
                    )
            else:
                if mu is None:
                    mu, first_apart = common, (u, v)
                elif common != mu:
                    return NotStronglyRegular(
                        f"non-adjacent pairs {first_apart} and {(u, v)} have {mu} and {common} "
                        "common neighbours",
                        (u, v),
                    )
    assert lam is not None and mu is not None
    return SrgParams(G.n, k, lam, mu)


def common_neighbours(G: Graph, u: int, v: int) -> int:
    """Number of common out-neighbours of u and v."""
    if u == v:
        raise InvalidArgumentError("common_neighbours needs two distinct vertices")
    return (G.rows[u] & G.rows[v]).bit_count()


def _require_vertex_bound(n: int, max_vertices: int) -> None:
    if n > max_vertices:
        raise ResourceLimitError("vertices", max_vertices, n)


def are_isomorphic(
    G: Graph, H: Graph, *, max_vertices: int = ISO_MAX_VERTICES
) -> Permutation | None:
    """An isomorphism G -> H, verified edge by edge, or None."""
    if G.directed != H.directed:
        raise InvalidArgumentError("cannot compare a graph with a digraph")
    _require_vertex_bound(max(G.n, H.n), max_vertices)
    if G.n != H.n or G.edge_count != H.edge_count:
        return None
    target = H.search_graph()
    images = search_isomorphism(G.search_graph(), target, search_automorphisms(target))
    if images is None:
        return None
    perm = Permutation(images)
    if relabel(G, perm) != H:
        raise AssertionError("isomorphism search returned a map that does not preserve edges")
    return perm


def is_self_complementary(
    G: Graph, *, max_vertices: int = ISO_MAX_VERTICES
) -> tuple[bool, Permutation | None]:
    witness = are_isomorphic(G, complement(G), max_vertices=max_vertices)
    return witness is not None, witness


def delta_uv(G: Graph, u: int, v: int) -> int:
    """Vertices other than u, v adjacent to exactly one of them."""
    if G.directed:
        raise InvalidArgumentError("delta_uv is defined for undirected graphs only")
    if u == v:
        raise InvalidArgumentError("delta_uv needs two distinct vertices")
    return ((G.rows[u] ^ G.rows[v]) & ~(1 << u | 1 << v)).bit_count()


def min_delta(G: Graph) -> int:
    if G.n < 2:
        raise InvalidArgumentError("min_delta needs at least two vertices")
    return min(delta_uv(G, u, v) for u in range(G.n) for v in range(u + 1, G.n))


def is_delta_graph(G: Graph) -> bool:
    """min Delta_uv attains its upper bound floor((n-1)/2)."""
    return min_delta(G) == (G.n - 1) // 2
