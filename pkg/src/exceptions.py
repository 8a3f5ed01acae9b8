from typing import Any, Optional


class JsrError(Exception):
    exit_code: int = 1


class InputParseError(JsrError, ValueError):
    exit_code = 2


class NegativeEntryError(InputParseError):
    pass


class DimensionMismatchError(InputParseError):
    pass


class ConstantsUndefinedError(JsrError, ValueError):
    pass


class NotConnectedError(JsrError, ValueError):
    pass


class UnreachablePairError(JsrError, ValueError):
    pass


class OutOfRangeError(JsrError, ValueError):
    pass


class BudgetExceededError(JsrError, RuntimeError):
    exit_code = 3

    def __init__(self, message: str, length_reached: int, partial: Optional[Any] = None):
        super().__init__(message)
        self.length_reached = length_reached
        self.partial = partial


class InconsistentBoundsError(JsrError, RuntimeError):
    exit_code = 4


class EnclosureTooWideError(JsrError, ValueError):
    exit_code = 5


class EntryRangeViolationError(JsrError, RuntimeError):
    pass
