"""Exception hierarchy shared by every module."""


class HKTError(Exception):
    """Base class for engine errors."""


class StructureError(HKTError, ValueError):
    """Shapes, degrees or carriers do not fit together."""


class ParseError(HKTError, ValueError):
    """Input text or JSON does not match the expected schema."""

    def __init__(self, message, location=None):
        super().__init__(message if location is None else f"{location}: {message}")
        self.location = location


class PreconditionError(HKTError):
    """A check was refused because its input fails a precondition.

    ``report`` carries the witness explaining the refusal, when there is one.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
