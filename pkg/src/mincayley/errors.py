"""Exception types shared across the library."""


class MinCayleyError(Exception):
    """Base class for all library errors."""


class GraphFormatError(MinCayleyError):
    """Malformed graph input.  Carries the byte offset of the offending token."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class DisconnectedGraphError(MinCayleyError):
    """Raised by operations that only make sense on connected graphs."""


class CycleCapExceeded(MinCayleyError):
    """Cycle enumeration hit the configured cap; the instance is too large."""

    def __init__(self, cap: int, stage: str = "cycle enumeration"):
        self.cap = cap
        self.stage = stage
        super().__init__(f"{stage}: more than {cap} cycles")


class SizeBoundExceeded(MinCayleyError):
    """An operation was asked to run beyond its implementation bound."""


class GroupSpecError(MinCayleyError):
    """Malformed group specification or table file."""


class GroupInvariantError(MinCayleyError):
    """Group parameters violate a structural invariant (e.g. k^r != 1 mod n)."""


class SearchBudgetExceeded(MinCayleyError):
    """A backtracking search ran out of its node budget before finishing."""
