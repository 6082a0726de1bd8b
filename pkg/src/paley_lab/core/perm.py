"""Permutations of {0..n-1}."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from math import lcm

from paley_lab.errors import InvalidArgumentError


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0..n-1}, stored as its image list."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidArgumentError(f"{list(images)!r} is not a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_function(cls, n: int, func: Callable[[int], int]) -> Permutation:
        return cls(tuple(func(x) for x in range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(n))
        for cycle in cycles:
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __str__(self) -> str:
        return self.cycle_notation()

    def compose(self, other: Permutation) -> Permutation:
        """self after other: x -> self(other(x))."""
        _same_degree(self, other)
        mine = self.images
        return Permutation(tuple(mine[x] for x in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def cycle_notation(self) -> str:
        """e.g. ``(0 1 2)(3 4)``; the identity prints as ``()``."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))


def _same_degree(a: Permutation, b: Permutation) -> None:
    if a.degree != b.degree:
        raise InvalidArgumentError(f"degree mismatch: {a.degree} != {b.degree}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a after b."""
    return a.compose(b)


def inverse(a: Permutation) -> Permutation:
    return a.inverse()
