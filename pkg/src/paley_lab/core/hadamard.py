"""Sign matrices, Hadamard constructions, Hadamard designs and simplex compounds."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import factorial

import numpy as np

from paley_lab.core.field import FiniteField, field_of_order, prime_power_parts
from paley_lab.core.graph import Graph
from paley_lab.core.residues import character_table, squares
from paley_lab.errors import InvalidArgumentError, ResourceLimitError

logger = logging.getLogger(__name__)

# Largest k accepted by paley_III (order 2**k)
PALEY3_MAX_K = 4

_SYLVESTER_SEED = np.array([[1, 1], [1, -1]], dtype=np.int64)
_ZERO_BLOCK = np.array([[1, -1], [-1, -1]], dtype=np.int64)


@dataclass(frozen=True, eq=False)
class SignMatrix:
    """A square matrix with entries in {-1, 0, +1}; the entries array is read-only."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.int64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] == 0:
            raise InvalidArgumentError(
                f"sign matrix must be square and non-empty, got shape {entries.shape}"
            )
        if not np.isin(entries, (-1, 0, 1)).all():
            raise InvalidArgumentError("sign matrix entries must lie in {-1, 0, +1}")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignMatrix):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> SignMatrix:
        return SignMatrix(-self.entries)

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])

    @property
    def has_zero(self) -> bool:
        return bool((self.entries == 0).any())

    @property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries.T))

    @property
    def is_skew_symmetric(self) -> bool:
        return bool(np.array_equal(self.entries, -self.entries.T))

    @property
    def is_normalized(self) -> bool:
        return bool((self.entries[0, :] == 1).all() and (self.entries[:, 0] == 1).all())

    def transpose(self) -> SignMatrix:
        return SignMatrix(self.entries.T)

    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in row) for row in self.entries]


def sign_matrix_from_rows(rows: Sequence[Sequence[int]]) -> SignMatrix:
    return SignMatrix(np.array(rows, dtype=np.int64))


@dataclass(frozen=True)
class HadamardCheck:
    """Outcome of is_hadamard; truthy when HH^T = mI."""

    is_hadamard: bool
    failing_pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.is_hadamard


def jacobsthal_matrix(F: FiniteField) -> SignMatrix:
    """Q with (u, v) entry chi(v - u)."""
    if F.p == 2:
        raise InvalidArgumentError(f"the Jacobsthal matrix needs odd q, got q={F.q}")
    table = character_table(F)
    return SignMatrix(
        np.array([[table[F.sub(v, u)] for v in range(F.q)] for u in range(F.q)], dtype=np.int64)
    )


def is_hadamard(H: SignMatrix) -> HadamardCheck:
    """Exact check of HH^T = mI; reports the first pair of non-orthogonal rows."""
    if H.has_zero:
        raise InvalidArgumentError("a Hadamard candidate must not contain 0 entries")
    # float64 is exact here: every entry of HH^T has absolute value at most m
    h = H.entries.astype(np.float64)
    gram = h @ h.T
    off = np.triu(gram != 0, k=1)
    if not off.any():
        return HadamardCheck(True)
    i, j = np.argwhere(off)[0]
    return HadamardCheck(False, (int(i), int(j)))


def _require_hadamard(H: SignMatrix, what: str) -> None:
    if H.has_zero or not is_hadamard(H):
        raise InvalidArgumentError(f"{what} needs a Hadamard matrix")


def sylvester(k: int) -> SignMatrix:
    """Order 2**k by repeated [[+,+],[+,-]] (x) H starting from (1)."""
    if k < 0:
        raise InvalidArgumentError(f"k must be non-negative, got {k}")
    H = np.ones((1, 1), dtype=np.int64)
    for _ in range(k):
        H = np.kron(_SYLVESTER_SEED, H)
    return SignMatrix(H)


def kronecker(H1: SignMatrix, H2: SignMatrix) -> SignMatrix:
    _require_hadamard(H1, "kronecker")
    _require_hadamard(H2, "kronecker")
    return SignMatrix(np.kron(H1.entries, H2.entries))


def _paley_field(q: int, residue: int, name: str) -> FiniteField:
    if prime_power_parts(q) is None or q % 2 == 0:
        raise InvalidArgumentError(f"{name} needs an odd prime power, got {q}")
    if q % 4 != residue:
        raise InvalidArgumentError(f"{name} needs q = {residue} mod 4, got q={q}")
    return field_of_order(q)


def paley_I(q: int) -> SignMatrix:
    """[[1, R], [R^T, Q - I]] of order q + 1, for q = 3 mod 4.

    Index 0 is the extra point; indices 1..q are field encodings 0..q-1.
    """
    F = _paley_field(q, 3, "Paley's first construction")
    Q = jacobsthal_matrix(F).entries
    H = np.ones((q + 1, q + 1), dtype=np.int64)
    H[1:, 1:] = Q - np.eye(q, dtype=np.int64)
    return SignMatrix(H)


def paley_II(q: int) -> SignMatrix:
    """Symmetric Hadamard matrix of order 2(q + 1), for q = 1 mod 4.

    B = [[0, R], [R^T, Q]]. Entries +-1 of B become +-[[+,+],[+,-]] and zeros
    become [[+,-],[-,-]].
    """
    F = _paley_field(q, 1, "Paley's second construction")
    Q = jacobsthal_matrix(F).entries
    B = np.zeros((q + 1, q + 1), dtype=np.int64)
    B[0, 1:] = 1
    B[1:, 0] = 1
    B[1:, 1:] = Q
    H = np.kron(B, _SYLVESTER_SEED) + np.kron((B == 0).astype(np.int64), _ZERO_BLOCK)
    return SignMatrix(H)


def _bits_to_signs(words: np.ndarray, m: int) -> np.ndarray:
    """Bit j of a word set means entry j is -1."""
    bits = (words[..., None] >> np.arange(m, dtype=np.int64)) & 1
    return 1 - 2 * bits


def paley_III(k: int, *, max_k: int = PALEY3_MAX_K) -> list[SignMatrix]:
    """Partition all 2**m sign vectors of length m = 2**k into 2**m/m Hadamard matrices.

    The rows of sylvester(k), as sign vectors, form a group under entrywise
    multiplication; each coset of it is the row set of one matrix.
    """
    if k < 2:
        raise InvalidArgumentError(f"k must be at least 2, got {k}")
    if k > max_k:
        raise ResourceLimitError("paley3 k", max_k, k)
    m = 1 << k
    weights = np.int64(1) << np.arange(m, dtype=np.int64)
    group = (sylvester(k).entries == -1).astype(np.int64) @ weights
    if len({int(a) ^ int(b) for a in group for b in group}) != m:
        raise AssertionError("Sylvester rows are not closed under entrywise product")

    seen = np.zeros(1 << m, dtype=bool)
    reps = []
    for x in range(1 << m):
        if not seen[x]:
            reps.append(x)
            seen[x ^ group] = True
    cosets = np.array(reps, dtype=np.int64)[:, None] ^ group[None, :]
    logger.debug("paley_III(k=%d): %d cosets of order %d", k, len(reps), m)
    return [SignMatrix(block) for block in _bits_to_signs(cosets, m)]


def normalize(H: SignMatrix) -> SignMatrix:
    """Negate rows to make column 0 positive, then columns to make row 0 positive."""
    _require_hadamard(H, "normalize")
    E = H.entries * H.entries[:, :1]
    E = E * E[:1, :]
    return SignMatrix(E)


@dataclass(frozen=True)
class IncidenceDesign:
    """Points 0..points-1 and blocks as sorted point tuples, blocks in sorted order."""

    points: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(tuple(sorted(int(x) for x in b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return (self.points + 1) // 4


@dataclass(frozen=True)
class DesignCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def make_design(points: int, blocks: Iterable[Iterable[int]]) -> IncidenceDesign:
    return IncidenceDesign(points, tuple(tuple(b) for b in blocks))


def design_parameters(D: IncidenceDesign) -> DesignCheck:
    """Verify the (4n-1, 2n-1, n-1) invariants exhaustively."""
    if D.points < 3 or (D.points + 1) % 4:
        return DesignCheck(False, f"{D.points} points is not of the form 4n-1")
    n = D.n
    if len(D.blocks) != D.points:
        return DesignCheck(False, f"{len(D.blocks)} blocks, expected {D.points}")
    for i, block in enumerate(D.blocks):
        if len(block) != 2 * n - 1:
            return DesignCheck(False, f"block {i} has size {len(block)}, expected {2 * n - 1}")
        if any(not 0 <= x < D.points for x in block):
            return DesignCheck(False, f"block {i} contains an unknown point")
    sets = [set(b) for b in D.blocks]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            meet = len(sets[i] & sets[j])
            if meet != n - 1:
                return DesignCheck(
                    False, f"blocks {i} and {j} meet in {meet} points, expected {n - 1}"
                )
    return DesignCheck(True)


def matrix_to_design(H: SignMatrix) -> IncidenceDesign:
    """Normalize, delete the first row and column, and read +1 entries as incidences."""
    _require_hadamard(H, "matrix_to_design")
    m = H.order
    if m < 4 or m % 4:
        raise InvalidArgumentError(f"a Hadamard design needs order m >= 4 with 4 | m, got {m}")
    core = normalize(H).entries[1:, 1:]
    return make_design(m - 1, (np.flatnonzero(row == 1).tolist() for row in core))


def design_to_matrix(D: IncidenceDesign) -> SignMatrix:
    """The normalized Hadamard matrix of order 4n whose design is D."""
    check = design_parameters(D)
    if not check:
        raise InvalidArgumentError(f"invalid Hadamard design: {check.reason}")
    m = D.points + 1
    E = np.ones((m, m), dtype=np.int64)
    E[1:, 1:] = -1
    for i, block in enumerate(D.blocks):
        E[i + 1, [x + 1 for x in block]] = 1
    return SignMatrix(E)


def qr_design(q: int) -> IncidenceDesign:
    """Points F_q, blocks the translates S + v of the residue set, for q = 3 mod 4."""
    F = _paley_field(q, 3, "the quadratic residue design")
    S = squares(F)
    return make_design(q, ([F.add(s, v) for s in S] for v in range(q)))


def pg_design(k: int) -> IncidenceDesign:
    """Points and hyperplanes of PG(k-1, 2).

    Point i is the non-zero vector i+1 in F_2^k; block a is the kernel of the
    functional v -> popcount(a & v) mod 2.
    """
    if k < 2:
        raise InvalidArgumentError(f"k must be at least 2, got {k}")
    size = (1 << k) - 1
    blocks = (
        [i for i in range(size) if (a & (i + 1)).bit_count() % 2 == 0] for a in range(1, size + 1)
    )
    return make_design(size, blocks)


def simplex_vertices(H: SignMatrix) -> list[tuple[int, ...]]:
    """Rows of a normalized Hadamard matrix with the first column deleted."""
    _require_hadamard(H, "simplex_vertices")
    if not H.is_normalized:
        raise InvalidArgumentError("simplex_vertices needs a normalized Hadamard matrix")
    return [row[1:] for row in H.rows()]


@dataclass(frozen=True)
class SimplexCompound:
    """Regular simplices inscribed in the cube {+-1}^dimension."""

    dimension: int
    simplices: tuple[frozenset[tuple[int, ...]], ...]

    @property
    def count(self) -> int:
        return len(self.simplices)

    @property
    def partitions_cube(self) -> bool:
        """The vertex sets are disjoint and cover every cube vertex."""
        total = sum(len(s) for s in self.simplices)
        union = frozenset().union(*self.simplices)
        return total == len(union) == 1 << self.dimension


def paley_III_compound(k: int, *, max_k: int = PALEY3_MAX_K) -> SimplexCompound:
    """Simplices from the Paley partition: row r gives the vertex r[0] * r[1:].

    A matrix and its negation give the same simplex, so there are 2**m/(2m).
    """
    m = 1 << k
    simplices: dict[frozenset[tuple[int, ...]], None] = {}
    for H in paley_III(k, max_k=max_k):
        vertices = frozenset(tuple(row[0] * x for x in row[1:]) for row in H.rows())
        simplices.setdefault(vertices, None)
    compound = SimplexCompound(m - 1, tuple(simplices))
    if compound.count != 1 << (m - k - 1):
        raise AssertionError(f"expected {1 << (m - k - 1)} simplices, got {compound.count}")
    return compound


@dataclass(frozen=True)
class CompoundCount:
    """Coxeter's counts: d1 = (4n-1)!/N and D = 2**(4n-3) * d1 / n."""

    n: int
    N: int
    d1: int
    D: int


def compound_counts(n: int, N: int) -> CompoundCount:
    if n < 1 or N < 1:
        raise InvalidArgumentError(f"n and N must be positive, got n={n} N={N}")
    group_order = factorial(4 * n - 1)
    if group_order % N:
        raise InvalidArgumentError(f"N={N} does not divide (4n-1)! = {group_order}")
    d1 = group_order // N
    numerator = (1 << (4 * n - 3)) * d1
    if numerator % n:
        raise InvalidArgumentError(f"n*N={n * N} does not divide 2^(4n-3)(4n-1)!")
    return CompoundCount(n, N, d1, numerator // n)


@dataclass(frozen=True)
class CoverageReport:
    """Orders m = 0 mod 4 up to limit reached by one Paley factor times a power of 2."""

    limit: int
    achievable: tuple[int, ...]
    exceptions: tuple[int, ...]


def _paley_base_orders(limit: int) -> set[int]:
    orders = {1}
    for q in range(3, limit, 2):
        if prime_power_parts(q) is None:
            continue
        base = q + 1 if q % 4 == 3 else 2 * (q + 1)
        if base <= limit:
            orders.add(base)
    return orders


def paley_coverage(limit: int) -> CoverageReport:
    """Which multiples of 4 up to limit are 2**a, 2**a(q+1) or 2**a*2(q+1)."""
    if limit < 4:
        raise InvalidArgumentError(f"limit must be at least 4, got {limit}")
    reached: set[int] = set()
    for base in _paley_base_orders(limit):
        m = base
        while m <= limit:
            reached.add(m)
            m *= 2
    multiples = range(4, limit + 1, 4)
    return CoverageReport(
        limit=limit,
        achievable=tuple(m for m in multiples if m in reached),
        exceptions=tuple(m for m in multiples if m not in reached),
    )


def compound_dimensions(limit: int) -> list[int]:
    """Dimensions m-1 of the cubes that carry a simplex compound from a known order m."""
    return [m - 1 for m in paley_coverage(limit).achievable]


def _require_monomial(P: SignMatrix, order: int, name: str) -> None:
    E = P.entries
    if P.order != order:
        raise InvalidArgumentError(f"{name} has order {P.order}, expected {order}")
    nonzero = E != 0
    if not (nonzero.sum(axis=0) == 1).all() or not (nonzero.sum(axis=1) == 1).all():
        raise InvalidArgumentError(f"{name} is not a signed permutation matrix")


def signed_permutation_matrix(
    images: Sequence[int], signs: Sequence[int] | None = None
) -> SignMatrix:
    """Row i has sign signs[i] in column images[i]."""
    m = len(images)
    E = np.zeros((m, m), dtype=np.int64)
    for i, j in enumerate(images):
        E[i, j] = 1 if signs is None else signs[i]
    return SignMatrix(E)


def is_hadamard_automorphism(H: SignMatrix, P: SignMatrix, Q: SignMatrix) -> bool:
    """P H Q^T = H for signed permutation matrices P and Q."""
    _require_monomial(P, H.order, "P")
    _require_monomial(Q, H.order, "Q")
    return bool(np.array_equal(P.entries @ H.entries @ Q.entries.T, H.entries))


def hadamard_graph(H: SignMatrix) -> Graph:
    """Normalize, drop the first row and column, and read -1 off the diagonal as adjacency.

    The result is a digraph when the core is not symmetric.
    """
    core = normalize(H).entries[1:, 1:]
    adjacency = (core == -1).astype(np.int64)
    np.fill_diagonal(adjacency, 0)
    return Graph.from_matrix(adjacency.tolist())
