"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UsageError(ValueError):
    """An operation was called in a way its contract does not allow."""


class InvariantViolation(RuntimeError):
    """A construction that should always succeed did not.

    Raised instead of returning a partial result so that a failure of the
    underlying mathematics surfaces as a finding, never as silent garbage.
    """
