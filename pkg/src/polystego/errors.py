"""Exception hierarchy shared by the codec, file formats and CLI."""


class StegoError(Exception):
    """Base class for all package errors."""


class FormatError(StegoError):
    """A file or text representation could not be parsed."""


class UnsupportedFormatError(FormatError):
    pass


class CapacityError(StegoError):
    """Message length does not match the code's capacity (n - k)."""


class LengthMismatchError(StegoError):
    """Cover, modifier or cost map length disagrees with the code length."""


class StrategyError(StegoError):
    """The requested minimizer cannot be used with this code."""


class GuardError(StegoError):
    """A size guard was exceeded (exhaustive search or dense matrix too large)."""
