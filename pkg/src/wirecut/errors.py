"""Exception types shared across the toolkit."""


class WirecutError(Exception):
    """Base class for domain errors raised by this package."""


class InfeasibleBudgetError(WirecutError):
    """Side budget too small: every wire needs at least three sides."""


class ResourceLimitError(WirecutError):
    """Search space exceeds the built-in guard for desk-scale problems."""
