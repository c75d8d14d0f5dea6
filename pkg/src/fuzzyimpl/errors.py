"""Exception types shared across the package."""

from __future__ import annotations


class FuzzyImplError(Exception):
    """Base class for all errors raised by fuzzyimpl."""


class ChainMismatchError(FuzzyImplError, ValueError):
    """Operands belong to different residuated chains."""


class UniverseMismatchError(FuzzyImplError, ValueError):
    """Operands are defined over different universes."""


class InvalidHedgeError(FuzzyImplError, ValueError):
    """A hedge table violates one of the hedge axioms."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("illegal hedge: " + "; ".join(self.violations))


class ParseError(FuzzyImplError, ValueError):
    """Malformed textual input (sets, theories, contexts, algebra headers)."""


class PreconditionError(FuzzyImplError, ValueError):
    """An operation was called on input violating its documented precondition."""


class CapacityError(FuzzyImplError):
    """An exhaustive enumeration would exceed the configured cap."""

    def __init__(self, required: int, cap: int, what: str = "candidate sets"):
        self.required = required
        self.cap = cap
        self.what = what
        super().__init__(f"enumeration of {required} {what} exceeds cap {cap}")
