"""Exception hierarchy shared by all lojax modules."""


class LojaxError(Exception):
    """Base class for every error raised by lojax."""


class DimensionMismatch(LojaxError, ValueError):
    pass


class SingularMatrix(LojaxError, ArithmeticError):
    pass


class NonPositiveEntry(LojaxError, ValueError):
    pass


class InvalidInput(LojaxError, ValueError):
    pass


class ParseError(LojaxError, ValueError):
    """Malformed input text.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ValidationError(LojaxError, ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(report.problems) or "invalid graph")


class GraphMismatch(LojaxError, ValueError):
    pass


class InvalidCycle(LojaxError, ValueError):
    pass


class NonTermination(LojaxError, RuntimeError):
    pass


class NonIntegerLength(LojaxError, ArithmeticError):
    pass


class BudgetExceeded(LojaxError, RuntimeError):
    pass


class SizeTooLarge(LojaxError, ValueError):
    pass


class NotQuasiHomogeneous(LojaxError, ValueError):
    def __init__(self, message, terms=()):
        self.terms = tuple(terms)
        super().__init__(message)


class UnknownEntry(LojaxError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown catalog entry"
