"""Shared exception types and the exhaustive-generation limit."""

# Exhaustive generators refuse sizes above this unless told otherwise.
DEFAULT_LIMIT = 12


class InvalidObjectError(ValueError):
    """A partition or path failed to parse or violates its invariants."""


class PreconditionError(ValueError):
    """A structurally valid object is outside the domain of an operation."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class LimitExceededError(ValueError):
    """An exhaustive generation request exceeds the configured limit."""
