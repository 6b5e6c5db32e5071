"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """Bad input shape, size or kind."""


class DomainError(ValueError):
    """Parameter outside the region where a series or integral is defined."""


class PoleError(DomainError):
    """Evaluation requested at a pole."""


class PreconditionViolation(ValueError):
    """A hypothesis of the identity being checked does not hold."""


class NotInvertible(ZeroDivisionError):
    """Series or table has no inverse for the Dirichlet product."""


class ConsistencyError(ArithmeticError):
    """Two independent evaluation routes disagree beyond their error budgets."""


class NumericError(ArithmeticError):
    """A numerical procedure did not converge or produced a degenerate fit."""
