"""Exception hierarchy.

Everything raised for bad data or violated domain preconditions derives from
:class:`InfoveilError`; the CLI maps those to exit code 2.
"""
from __future__ import annotations


class InfoveilError(Exception):
    """Base class for data and domain errors."""


class InvalidInputError(InfoveilError, ValueError):
    pass


class AlignmentError(InfoveilError, ValueError):
    pass


class DomainError(InfoveilError, ValueError):
    pass


class InsufficientDataError(InfoveilError, ValueError):
    pass


class DegenerateDataError(InfoveilError, ValueError):
    pass


class RankError(InfoveilError, ValueError):
    def __init__(self, message: str, column: str | None = None):
        super().__init__(message)
        self.column = column


class CoverageError(InfoveilError, ValueError):
    def __init__(self, message: str, required_start=None):
        super().__init__(message)
        self.required_start = required_start


class ConfigError(InfoveilError, ValueError):
    pass


class ParseError(InfoveilError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DataFormatError(InfoveilError, ValueError):
    """Malformed input file; carries file, 1-based line and column name."""

    def __init__(self, message: str, path=None, line: int | None = None, column: str | None = None):
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column!r}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.path = path
        self.line = line
        self.column = column


class ColumnLookupError(InfoveilError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
