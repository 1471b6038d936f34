"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Malformed graph input; the message names the offending line or field."""


class CapExceededError(ValueError):
    """A size or budget cap would be exceeded; the message names the values."""
