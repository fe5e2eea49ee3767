"""Exception types raised by inflectnet."""


class InflectnetError(Exception):
    """Base class for all package errors."""


class InputError(InflectnetError, ValueError):
    """Raw input could not be decoded or read."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class LexiconError(InflectnetError, ValueError):
    """A lexicon, paradigm or stem file is malformed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConfigurationError(InflectnetError, ValueError):
    """Inconsistent configuration, e.g. a stem naming an unknown paradigm."""


class DomainError(InflectnetError, ValueError):
    """Argument outside the mathematical domain of an operation."""
