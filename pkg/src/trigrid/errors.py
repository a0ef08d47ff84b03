"""Exception hierarchy shared by the whole package."""

from __future__ import annotations


class TrigridError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateCell(TrigridError):
    def __init__(self, cell):
        self.cell = cell
        super().__init__(f"duplicate cell {cell}")


class LineCountViolation(TrigridError):
    """A column, row or diagonal carries a number of points other than 0 or 2."""

    def __init__(self, direction: str, index: int, count: int):
        self.direction = direction
        self.index = index
        self.count = count
        super().__init__(f"{direction} {index} holds {count} points (must be 0 or 2)")


class DuplicatePoint(TrigridError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"duplicate point {point}")


class UnpairedPoint(TrigridError):
    """A vertical, horizontal or diagonal line carries a number of points other than 0 or 2."""

    def __init__(self, direction: str, value):
        self.direction = direction
        self.value = value
        super().__init__(f"{direction} line at {value} does not carry exactly two points")


class TooManyCrossings(TrigridError):
    def __init__(self, crossings: int, bound: int):
        self.crossings = crossings
        self.bound = bound
        super().__init__(f"diagram has {crossings} crossings, state sum bound is {bound}")


class InvalidParameter(TrigridError):
    pass


class LabelError(TrigridError):
    pass


class BudgetExceeded(TrigridError):
    def __init__(self, kind: str, used, budget):
        self.kind = kind
        self.used = used
        self.budget = budget
        super().__init__(f"{kind} budget exhausted ({used} of {budget})")


class SchemaError(TrigridError):
    """Structural problem in a diagram document; .location points at the field."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{message}" + (f" (at {location})" if location else ""))


class ValidationError(TrigridError):
    """A structurally well-formed document failed diagram validation."""

    def __init__(self, cause: TrigridError):
        self.cause = cause
        super().__init__(str(cause))
