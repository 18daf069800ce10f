"""Exception types raised across the package."""


class UnilabelError(Exception):
    """Base class for all errors raised by unilabel."""


class DegreeExceeded(UnilabelError, ValueError):
    pass


class NotAcyclic(UnilabelError, ValueError):
    pass


class SizeGuard(UnilabelError, ValueError):
    """An input exceeds the cap of an exhaustive routine."""


class ParseError(UnilabelError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RetryExhausted(UnilabelError, RuntimeError):
    pass


class SchemeMismatch(UnilabelError, ValueError):
    pass


class PreconditionViolated(UnilabelError, ValueError):
    pass


class TargetOutOfRange(UnilabelError, ValueError):
    pass


class LengthOutOfRange(UnilabelError, ValueError):
    pass


class FamilyMismatch(UnilabelError, ValueError):
    pass


class MissingContext(UnilabelError, ValueError):
    pass
