"""Exception types shared across the package.

Everything derives from :class:`SortnetError`, itself a ``ValueError``, so
callers that do not care about the distinction can catch either.
"""


class SortnetError(ValueError):
    """Base class for all validation errors raised by this package."""


class IndexOutOfRange(SortnetError):
    """A line index lies outside the width it must stay below."""


class DuplicateLine(SortnetError):
    """A line appears in more than one comparator pair of a single layer."""


class DegeneratePair(SortnetError):
    """A comparator pair connects a line to itself."""


class InvalidConnector(SortnetError):
    """A connector's raw fields violate its structural invariants."""


class WidthMismatch(SortnetError):
    """Operands (connector, network, or value tuple) disagree on line count."""


class ZeroWidth(SortnetError):
    """An index or connector operation was requested over zero lines."""


class Overflow(SortnetError):
    """A requested power-of-two width exceeds the supported exponent guard."""


class WidthTooLarge(SortnetError):
    """Exhaustive enumeration was requested beyond the enumeration guard."""
