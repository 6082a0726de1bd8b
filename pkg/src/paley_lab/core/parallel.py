"""Thread pool helper for running independent verification claims."""

from __future__ import annotations

import os
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Generic, TypeVar

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_WORKERS = min(os.cpu_count() or 4, 8)
MAX_WORKERS = 32

# Below this many items the pool costs more than it saves
MIN_PARALLEL_ITEMS = 2


@dataclass
class ParallelConfig:
    """Whether to use a pool, and how many threads it gets (clamped to 1..32)."""

    enabled: bool = True
    max_workers: int = DEFAULT_WORKERS

    def __post_init__(self) -> None:
        self.max_workers = max(1, min(self.max_workers, MAX_WORKERS))


@dataclass(frozen=True)
class Outcome(Generic[T, R]):
    """One item with either its result or the exception it raised."""

    item: T
    result: R | None
    error: Exception | None

    @property
    def ok(self) -> bool:
        return self.error is None


def _run(func: Callable[[T], R], item: T) -> Outcome[T, R]:
    try:
        return Outcome(item, func(item), None)
    except Exception as e:  # noqa: BLE001
        return Outcome(item, None, e)


def parallel_map_ordered(
    func: Callable[[T], R],
    items: Sequence[T],
    config: ParallelConfig | None = None,
    on_done: Callable[[Outcome[T, R]], None] | None = None,
) -> list[Outcome[T, R]]:
    """Apply func to every item and return the outcomes in input order.

    Args:
        func: Function to apply to each item.
        items: Items to process.
        config: Pool settings; a disabled config runs sequentially.
        on_done: Called once per item as soon as it finishes, in completion order.

    Returns:
        One Outcome per item, aligned with items.
    """
    config = config or ParallelConfig()
    outcomes: list[Outcome[T, R] | None] = [None] * len(items)

    if not config.enabled or len(items) < MIN_PARALLEL_ITEMS:
        for i, item in enumerate(items):
            outcomes[i] = _run(func, item)
            if on_done is not None:
                on_done(outcomes[i])  # type: ignore[arg-type]
    else:
        with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
            futures = {executor.submit(_run, func, item): i for i, item in enumerate(items)}
            for future in as_completed(futures):
                outcome = future.result()
                outcomes[futures[future]] = outcome
                if on_done is not None:
                    on_done(outcome)

    return [o for o in outcomes if o is not None]
