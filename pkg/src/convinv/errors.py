"""Exception types shared across the package."""


class ConvinvError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(ConvinvError):
    """Operands belong to different fields."""


class RankDeficient(ConvinvError):
    """A generator matrix does not have full row rank over GF(q)[x]."""


class OrderOutOfRange(ConvinvError):
    """A subspace order r lies outside the valid range for the operation."""


class NoncatastrophicRequired(ConvinvError):
    """The operation is only defined for noncatastrophic codes."""


class MapInvalid(ConvinvError):
    """A code map's images do not define a module isomorphism."""


class BudgetExceeded(ConvinvError):
    """An exhaustive step would exceed the configured budget.

    ``needed`` is the size the step would require, ``limit`` the configured
    cap, so a caller can decide to raise the budget or switch modes.
    """

    def __init__(self, message: str, needed=None, limit=None):
        super().__init__(message)
        self.needed = needed
        self.limit = limit
