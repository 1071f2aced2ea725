"""Shared exception types."""


class PhasecatError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(PhasecatError, ValueError):
    """Malformed or mathematically inconsistent input."""


class CapExceededError(ValidationError):
    """A hard size cap (group order, object count, ...) was exceeded."""
