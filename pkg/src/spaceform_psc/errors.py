"""Exception types shared across the package."""

from __future__ import annotations


class SpaceFormError(Exception):
    """Base class for all errors raised by this package."""


class GroupSpecError(SpaceFormError, ValueError):
    """A group expression could not be parsed or names an invalid group."""


class GroupValidationError(SpaceFormError, ValueError):
    """A Cayley table failed one of the group axioms.

    ``kind`` is one of ``"format"``, ``"latin"``, ``"identity"``,
    ``"associativity"`` or ``"inverse"``.
    """

    def __init__(self, kind: str, message: str, witness: tuple[int, ...] | None = None):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


class BoundError(SpaceFormError):
    """A computation was asked to run above its configured order bound."""


class PreconditionError(SpaceFormError, ValueError):
    """An operation was called on input outside its domain."""
