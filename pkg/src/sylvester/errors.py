"""Exception hierarchy shared by the package."""


class SylvesterError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(SylvesterError, ValueError):
    """Malformed user input (bad part lists, unknown group names, ...)."""


class DomainError(SylvesterError, ValueError):
    """Arguments outside the mathematical domain of an operation."""


class ConsistencyError(SylvesterError, ArithmeticError):
    """An exact computation produced a value that cannot be right.

    Raised when e.g. a Galois-invariant sum fails to be rational or a
    partition count comes out fractional or negative.  It always signals
    a bug or a bad input spec, never a user error.
    """


class NonRationalError(ConsistencyError):
    """A cyclotomic element expected to be rational has irrational part."""
