"""Exception types shared across the package."""


class SenseGraphError(Exception):
    """Base class for all sensegraph errors."""


class NotFoundError(SenseGraphError, LookupError):
    """A corpus, interval, word, or graph element does not exist."""


class InvalidParamsError(SenseGraphError, ValueError):
    """An argument violates an operation's contract."""


class IngestError(SenseGraphError, ValueError):
    """A corpus input file is malformed; the message carries file and line."""
