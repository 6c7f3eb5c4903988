"""Exception types raised by taxitrig."""


class TaxitrigError(Exception):
    """Base class for all taxitrig errors."""


class DomainError(TaxitrigError, ValueError):
    """An input lies outside the domain of an operation (e.g. a NaN angle)."""


class BackendMismatch(TaxitrigError, TypeError):
    """Arithmetic was attempted between exact and float scalars."""


class UsageError(TaxitrigError, ValueError):
    """An operation was asked for something it does not support."""


class OracleInapplicable(TaxitrigError, ArithmeticError):
    """The finite-difference oracle's preconditions do not hold at a point."""


class InvariantViolation(TaxitrigError, AssertionError):
    """An internal invariant failed; always indicates a bug."""
