"""Exception hierarchy shared by the solver modules."""


class ScsrcError(Exception):
    """Base class for all solver errors."""


class InvalidInputError(ScsrcError, ValueError):
    """An input value violates its contract."""


class EmptyInstanceError(InvalidInputError):
    """The instance contains no usable strings."""


class InvalidCycleError(ScsrcError, ValueError):
    """A cycle cannot be turned into a representative."""


class InfeasibleError(ScsrcError):
    """No perfect matching exists."""


class TooSmallError(ScsrcError, ValueError):
    """The cycle-cover machinery needs at least two strings."""


class BudgetError(ScsrcError):
    """An exact oracle was asked to exceed its budget."""


class InvalidSolutionError(ScsrcError, ValueError):
    """A solution does not describe a valid superstring of its instance."""


class InternalInvariantError(ScsrcError, AssertionError):
    """A proven structural property failed; this signals a bug."""
