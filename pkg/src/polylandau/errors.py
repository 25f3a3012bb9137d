"""Exception types shared across the package."""


class PolyLandauError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PolyLandauError, ValueError):
    """An input lies outside the stated domain or violates a hypothesis."""


class BracketError(PolyLandauError):
    """A root bracket precondition failed; the message carries the endpoint values."""


class DegenerateResultError(PolyLandauError):
    """A covered-disk radius came out non-positive, so dependent quantities are undefined."""
