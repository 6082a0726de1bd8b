"""Exception hierarchy for Paley Lab."""

from __future__ import annotations


class PaleyLabError(Exception):
    """Base class for every error raised by the library."""


class InvalidArgumentError(PaleyLabError, ValueError):
    """An argument violates the precondition of an operation."""


class NotConnectedError(InvalidArgumentError):
    """A connection set does not generate the additive group of the field."""


class ResourceLimitError(PaleyLabError):
    """A desk-scale bound would be exceeded."""

    def __init__(self, limit_name: str, limit: int, requested: int) -> None:
        self.limit_name = limit_name
        self.limit = limit
        self.requested = requested
        super().__init__(f"{limit_name}={requested} exceeds the configured bound of {limit}")
