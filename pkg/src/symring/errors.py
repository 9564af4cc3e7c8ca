"""Exception hierarchy shared across the package."""


class SymringError(Exception):
    """Base class for all errors raised by symring."""


class DegreeMismatchError(SymringError, ValueError):
    pass


class GuardError(SymringError):
    """A requested degree exceeds the configured enumeration guard."""

    def __init__(self, r, guard):
        super().__init__(f"degree {r} exceeds guard {guard}; pass force=True (--force) to override")
        self.r = r
        self.guard = guard


class NotASubgroupError(SymringError, ValueError):
    pass


class NotIdempotentError(SymringError, ValueError):
    pass


class NotPrimitiveError(SymringError, ValueError):
    pass


class ZeroProductError(SymringError, ArithmeticError):
    """e*a (or a*e) vanished, so the candidate ideal is annihilated."""


class ContainmentError(SymringError, ValueError):
    """The ideal of e already lies in the ideal of the second idempotent."""


class ShapeMismatchError(SymringError, ValueError):
    pass


class ParseError(SymringError, ValueError):
    def __init__(self, message, line=None, source=None):
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip())
        self.line = line
        self.source = source
