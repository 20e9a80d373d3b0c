"""Exception hierarchy shared by all modules."""


class KAdjointError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(KAdjointError, ValueError):
    pass


class RangeError(KAdjointError, ValueError):
    pass


class InvalidHyperplaneError(KAdjointError, ValueError):
    pass


class DuplicateHyperplaneError(KAdjointError, ValueError):
    pass


class NonEssentialError(KAdjointError, ValueError):
    pass


class InvalidSubspaceError(KAdjointError, ValueError):
    pass


class ChainBudgetExceeded(KAdjointError, RuntimeError):
    """Raised when maximal-chain enumeration passes its cap."""

    def __init__(self, reached: int, cap: int):
        super().__init__(f"maximal chain count reached {reached}, exceeding cap {cap}")
        self.reached = reached
        self.cap = cap


class SamplingError(KAdjointError, RuntimeError):
    pass


class ConsistencyError(KAdjointError, AssertionError):
    """An identity that must hold exactly was found violated.

    Seeing this means either a bug or a counterexample to a proven
    statement; either way it is never silently swallowed.
    """
