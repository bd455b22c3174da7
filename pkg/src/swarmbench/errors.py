"""Exception types shared across the package."""


class SwarmbenchError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(SwarmbenchError):
    """A caller-supplied vector is malformed (wrong length or non-finite)."""


class EvaluationError(SwarmbenchError):
    """An objective or constraint produced a non-finite value."""

    def __init__(self, message: str, point=None):
        super().__init__(message)
        self.point = point


class InvalidConfigError(SwarmbenchError):
    """An engine or case configuration violates its invariants."""


class UnknownProblemError(SwarmbenchError):
    """A requested benchmark name is not in the registry."""
