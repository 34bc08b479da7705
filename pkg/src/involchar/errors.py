"""Exception types shared across the package."""


class InvolcharError(Exception):
    """Base class for all package errors."""


class ParseError(InvolcharError, ValueError):
    """Malformed partition or cycle-notation text."""

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ContractError(InvolcharError, ValueError):
    """A precondition of an operation was violated by the caller."""


class ResourceLimitError(InvolcharError):
    """The requested size exceeds the configured maximum."""


class InvariantViolation(InvolcharError, AssertionError):
    """An internal structural guarantee failed; this indicates a bug."""


def check_limit(what, value, maximum):
    if maximum is not None and value > maximum:
        raise ResourceLimitError(f"{what}={value} exceeds configured maximum {maximum}")
