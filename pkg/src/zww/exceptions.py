class ZWWError(Exception):
    """Base class for errors raised by this package."""


class DomainError(ZWWError, ValueError):
    """An argument lies outside the range where the operation is defined."""


class CapExceededError(ZWWError, ValueError):
    """A requested word would be longer than the configured length cap."""


class ArithmeticOverflowError(ZWWError, OverflowError):
    """An exact result does not fit the fixed-width range it is reported in."""


class InexactDivisionError(ZWWError, ArithmeticError):
    """A closed form that must be integral left a remainder."""
