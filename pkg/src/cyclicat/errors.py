"""Exception hierarchy.

Every error raised by the package derives from :class:`CyclicatError`, which is
itself a :class:`ValueError`, so callers can catch input problems uniformly.
The class name doubles as the machine-readable reason reported by the CLI.
"""

from __future__ import annotations


class CyclicatError(ValueError):
    """Base class for all package errors."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index

    @property
    def kind(self) -> str:
        return type(self).__name__


class WrongLength(CyclicatError):
    pass


class OutOfRange(CyclicatError):
    pass


class NotMonotone(CyclicatError):
    pass


class IndexOutOfRange(CyclicatError):
    pass


class DegreeMismatch(CyclicatError):
    pass


class ResourceLimit(CyclicatError):
    pass


class WrapViolation(CyclicatError):
    pass


class NotNormalized(CyclicatError):
    pass


class IncompatibleFiberOrder(CyclicatError):
    pass


class AxiomFailure(CyclicatError):
    pass


class TruncationExceeded(CyclicatError):
    pass


class TruncationTooLow(CyclicatError):
    pass


class InvalidTriangulation(CyclicatError):
    pass


class NotAssociative(CyclicatError):
    pass


class NoIdentity(CyclicatError):
    pass


class InvalidPresheaf(CyclicatError):
    pass


#: Default cap on the size of any single enumeration.
MAX_ENUMERATION = 2_000_000


def check_limit(count: int, limit: int | None, what: str) -> None:
    bound = MAX_ENUMERATION if limit is None else limit
    if count > bound:
        raise ResourceLimit(f"{what}: {count} items exceeds limit {bound}")
