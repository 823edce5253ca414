"""Exception hierarchy shared by the library and the command line."""


class HoradamError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(HoradamError, ValueError):
    """Invalid parameters or malformed input (bad a, b, n, word, series...)."""


class ResourceLimitError(HoradamError):
    """A configured size cap would be exceeded."""


class TheoremViolation(HoradamError):
    """A structural statement that must hold was observed to fail."""


class InternalError(HoradamError, RuntimeError):
    """A construction produced an object that failed its own validation."""
