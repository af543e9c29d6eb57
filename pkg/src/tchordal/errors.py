"""Exception hierarchy shared by every module."""


class TChordalError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoopError(TChordalError):
    pass


class DigonError(TChordalError):
    pass


class VertexOutOfRangeError(TChordalError):
    pass


class InvalidParameterError(TChordalError, ValueError):
    pass


class ParseError(TChordalError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ClauseTooLargeError(ParseError):
    pass


class NotIndependentError(TChordalError):
    def __init__(self, message, arc=None):
        self.arc = arc
        super().__init__(message)


class UncoloredVertexError(TChordalError):
    pass


class BudgetExceededError(TChordalError):
    pass


class SizeCapExceededError(TChordalError):
    pass


class TooManyVariablesError(TChordalError):
    pass


class NotSatisfyingError(TChordalError):
    pass


class NotALongCycleError(TChordalError):
    pass
