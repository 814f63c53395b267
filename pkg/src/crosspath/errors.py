"""Exception types shared across the package."""

from __future__ import annotations


class CrosspathError(Exception):
    """Base class; every error carries a machine-readable ``code``."""

    code = "ERROR"

    def __init__(self, message: str = "", code: str | None = None):
        if code is not None:
            self.code = code
        super().__init__(f"{self.code}: {message}" if message else self.code)


class InvalidPlan(CrosspathError):
    """A stitch plan broke a legality rule at move ``index``."""

    def __init__(self, code: str, index: int | None, message: str = ""):
        self.index = index
        where = f"move {index}" if index is not None else "end of plan"
        super().__init__(f"{where}: {message}" if message else where, code)


class PlanOperationError(CrosspathError):
    """rotate_start / glue precondition failures."""


class ModelError(CrosspathError):
    code = "BAD_K"


class StitchError(CrosspathError):
    code = "START_NOT_IN_CONFIG"


class BudgetExceeded(CrosspathError):
    code = "BUDGET_EXCEEDED"


class PreconditionError(CrosspathError):
    code = "PRECONDITION"


class NotConstructible(CrosspathError):
    code = "NOT_CONSTRUCTIBLE"


class GridFormatError(CrosspathError):
    code = "BAD_CHARACTER"

    def __init__(self, line: int, column: int, char: str):
        self.line = line
        self.column = column
        super().__init__(f"unexpected {char!r} at line {line}, column {column}")


class SchemaViolation(CrosspathError):
    code = "SCHEMA_VIOLATION"

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
