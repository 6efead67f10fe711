"""Exception and warning types shared across the toolkit."""


class FracHypError(Exception):
    """Base class for all toolkit errors."""


class InvalidParams(FracHypError, ValueError):
    pass


class EdgeSizeMismatch(InvalidParams):
    pass


class VertexOutOfRange(InvalidParams):
    pass


class SizeMismatch(InvalidParams):
    pass


class NotAMinusOne(InvalidParams):
    pass


class DivisibilityError(InvalidParams):
    pass


class FullPalette(FracHypError):
    pass


class ParseError(FracHypError, ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class BudgetExceeded(FracHypError):
    pass


class AttemptsExhausted(FracHypError):
    pass


class NotFound(FracHypError):
    pass


class Infeasible(FracHypError):
    pass


class RegimeWarning(UserWarning):
    """Parameters fall outside a theorem's hypothesis; values are still computed."""
