"""Exception hierarchy; each class carries the CLI exit code it maps to."""


class QconicError(Exception):
    exit_code = 3

    def __init__(self, message: str, payload=None):
        super().__init__(message)
        self.message = message
        self.payload = payload


class ParseError(QconicError):
    exit_code = 1

    def __init__(self, message: str, line=None, column=None, payload=None):
        super().__init__(message, payload)
        self.line = line
        self.column = column


class DomainError(QconicError, ValueError):
    """Invalid input for a mathematical operation (zero input, non-central f, ...)."""

    exit_code = 2


class InconsistencyError(QconicError):
    """An internal cross-check failed; this indicates a bug or corrupted data."""

    exit_code = 3
