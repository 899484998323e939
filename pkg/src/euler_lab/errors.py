"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RangeError(DomainError):
    """A value or intermediate product exceeds the supported integer range."""


class UsageError(ValueError):
    """A request is malformed (bad range, bad flag combination)."""


class FactorizationTimeout(RuntimeError):
    """Factorization exceeded its time budget."""
