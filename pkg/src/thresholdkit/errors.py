"""Shared exception types."""


class ValidationError(ValueError):
    """An input violates a documented precondition."""


class CapExceededError(ValidationError):
    """An exhaustive operation would exceed its hard size cap."""


class CounterexampleError(RuntimeError):
    """A structural guarantee failed on an input that was promised to satisfy it."""
