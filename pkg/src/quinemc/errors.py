class QMError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QMError, ValueError):
    pass


class ParseError(QMError, ValueError):
    """Malformed textual input.

    ``kind`` is a short machine-readable tag (``not_ascending``,
    ``out_of_range`` ...) and ``position`` the character offset (or line
    number for PLA input) where the problem was detected.
    """

    def __init__(self, kind: str, message: str, position: int | None = None):
        self.kind = kind
        self.message = message
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class GuardRefusal(QMError, RuntimeError):
    """A configured size cap was exceeded (oracle enumeration, max-vars)."""
