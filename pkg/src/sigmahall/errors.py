"""Exception hierarchy shared by every module."""


class SigmaHallError(Exception):
    """Base class for all library errors."""


class StructuralError(SigmaHallError):
    """Operands are incompatible (degree mismatch, foreign parent group, ...)."""


class PreconditionError(SigmaHallError):
    """An operation was called outside its documented precondition."""


class ConfigurationError(SigmaHallError):
    """Invalid group specification or sigma-partition."""


class ResourceLimitError(SigmaHallError):
    """A configured cap (degree, order, subgroup count) was exceeded.

    ``partial`` carries the count reached when the cap tripped, if known.
    """

    def __init__(self, message, *, limit=None, partial=None):
        super().__init__(message)
        self.limit = limit
        self.partial = partial


class ParseError(SigmaHallError):
    """Syntax or semantic error in a group or sigma file."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
        self.reason = message
