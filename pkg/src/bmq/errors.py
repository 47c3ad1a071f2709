"""Exception types raised across the package."""


class BMQError(Exception):
    """Base class for all errors raised by bmq."""


class DiagramSyntaxError(BMQError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DiagramError(BMQError):
    """A diagram parsed but violates a structural invariant."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class DimensionError(BMQError, ValueError):
    pass


class DataError(BMQError):
    """Inconsistent data vector: mismatched biquandles, invalid maps, bad files."""


class BudgetExceeded(BMQError):
    """Path enumeration went past its resource budget."""
