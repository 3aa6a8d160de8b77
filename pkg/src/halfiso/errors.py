"""Exception hierarchy shared by every halfiso module."""


class HalfIsoError(Exception):
    """Base class for all library errors."""


class SizeMismatchError(HalfIsoError, ValueError):
    pass


class TableFormatError(HalfIsoError, ValueError):
    """Malformed table file; ``line`` and ``column`` locate the fault (1-based)."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class PermutationFormatError(HalfIsoError, ValueError):
    pass


class CapExceededError(HalfIsoError):
    """A configured enumeration or search cap would be exceeded."""


class CommutativeInputError(HalfIsoError, ValueError):
    """The operation is only defined for noncommutative input."""


class PreconditionError(HalfIsoError, ValueError):
    pass


class UnknownTableError(HalfIsoError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown table"
