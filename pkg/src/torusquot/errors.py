"""Exception types shared across the package."""


class TorusQuotError(Exception):
    """Base class for every error this package raises deliberately."""


class InvalidInputError(TorusQuotError, ValueError):
    """A caller-supplied value violates an operation's preconditions."""


class NotAHomomorphismError(InvalidInputError):
    """Generator images do not extend to a representation of the group."""


class GroupTooLargeError(TorusQuotError):
    """Closure exceeded the configured element limit."""

    def __init__(self, limit: int):
        super().__init__(f"closure exceeded the element limit of {limit}")
        self.limit = limit


class InconsistentCharacterError(TorusQuotError):
    """A character-level computation produced a value outside its contract."""


class TableComputationError(TorusQuotError):
    """The character table algorithm failed for every admissible prime."""


class GroupFileError(TorusQuotError):
    """Positioned syntax or consistency error in a group file."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where = f" ({where})"
        super().__init__(message + where)
