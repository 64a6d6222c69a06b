"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates the precondition of an operation."""


class ResourceLimitError(DomainError):
    """A brute-force enumeration was asked for a size above its configured limit."""


class ConsistencyError(ArithmeticError):
    """An identity that must hold exactly did not (integrality, agreement of two forms, ...).

    Raised instead of rounding; seeing one means there is a bug.
    """
