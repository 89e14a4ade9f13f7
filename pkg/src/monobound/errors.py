"""Exception hierarchy shared across the package."""


class MonogamyError(Exception):
    """Base class for all errors raised by monobound."""


class InvalidInputError(MonogamyError, ValueError):
    """Input violates a structural requirement (shape, dimension, domain)."""


class NotPSDError(InvalidInputError):
    """Matrix has an eigenvalue below the PSD clamp threshold."""


class PreconditionError(MonogamyError, ValueError):
    """A theorem's hypothesis does not hold for the supplied measures."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DegenerateInputError(PreconditionError):
    """Measures vanish (or nearly so), making a ratio 0/0."""


class ConfigError(MonogamyError, ValueError):
    pass


class StateFileError(MonogamyError, ValueError):
    pass
