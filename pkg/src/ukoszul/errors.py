"""Exception hierarchy shared by every module."""


class UKoszulError(Exception):
    """Base class for all errors raised by this package."""


class InputError(UKoszulError, ValueError):
    """Bad user-supplied data. The CLI maps these to exit code 2."""

    def __init__(self, message, *, line=None, offset=None):
        super().__init__(message)
        self.reason = message
        self.line = line
        self.offset = offset

    def __str__(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.offset is not None:
            where.append(f"byte {self.offset}")
        return f"{self.reason} ({', '.join(where)})" if where else self.reason


class LoopEdge(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class CapExceeded(InputError):
    pass


class MalformedGraph6(InputError):
    pass


class MalformedInput(InputError):
    pass


class WrongPatternKind(UKoszulError, ValueError):
    pass


class EquivalenceViolation(UKoszulError):
    """Two independently computed verdicts disagree. Always a bug."""

    def __init__(self, message, *, details=None):
        super().__init__(message)
        self.details = details or {}


class InternalInconsistency(UKoszulError):
    """A self-check inside the classifier failed."""
