"""Exceptions shared across the package."""


class NotACocycleError(ValueError):
    """Input matrix is not invertible over Q[t, t^-1]."""


class InternalInconsistencyError(RuntimeError):
    """Two exact computations that must agree failed to do so.

    Raised instead of preferring either result; signals a bound or
    bookkeeping bug, never bad input.
    """


class UnsupportedCaseError(ValueError):
    """Parameter combination outside the classified regimes."""
