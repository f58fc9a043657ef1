"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input or violated precondition."""


class ResourceError(RuntimeError):
    """A search ran out of budget before it could certify a value.

    ``lower`` and ``upper`` carry the best bounds known when the search stopped.
    """

    def __init__(self, message, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class InvariantViolation(AssertionError):
    """A guaranteed bound failed to hold. Always an implementation bug."""
