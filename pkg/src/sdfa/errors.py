"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class SdfaError(Exception):
    """Base class for all package errors."""


class ConstructionError(SdfaError, ValueError):
    """A ring, hom, or module could not be built from the given data."""


class InputError(SdfaError, ValueError):
    """Caller-supplied data violates a precondition."""


class DomainError(SdfaError, ValueError):
    """An operation was applied outside the domain where it is defined."""


class InapplicableError(DomainError):
    """A structural criterion does not cover the given instance."""


class ResourceError(SdfaError):
    """A configured size cap was exceeded."""


class DefectError(SdfaError, AssertionError):
    """Two deciders that must agree returned different answers."""
