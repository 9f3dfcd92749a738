"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition (parity, range, size)."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed the configured enumeration bounds."""


class InternalCheckError(RuntimeError):
    """A mathematically impossible intermediate state was detected.

    Raised, for example, when a graded character decomposes with a negative
    or non-integral multiplicity.  This always indicates a bug, never bad
    user input.
    """
