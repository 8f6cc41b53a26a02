class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InputError(ValueError):
    """A scenario file or field could not be parsed."""


class ValidationError(ValueError):
    """A parsed scenario violates one of its invariants."""


class ConvergenceError(ArithmeticError):
    pass


class BoundWarning(UserWarning):
    """Raised through :mod:`warnings` when a bound is evaluated outside its
    proven parameter range but is still computable."""
