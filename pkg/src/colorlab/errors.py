"""Exception types shared across the lab."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class GuardError(RuntimeError):
    """An exhaustive search was refused because it exceeds its size guard.

    Raised instead of returning a partial answer: a truncated search could
    report a wrong value.
    """


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class InvariantViolation(AssertionError):
    """Two routes that must agree did not; indicates a bug."""
