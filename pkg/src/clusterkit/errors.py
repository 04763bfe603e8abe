"""Exception types shared across the package."""


class ClusterkitError(Exception):
    pass


class PreconditionError(ClusterkitError, ValueError):
    """An operation's input does not meet its stated requirements."""


class InvariantViolation(ClusterkitError, RuntimeError):
    """A self-check failed; signals an implementation or input inconsistency."""


class EnumerationBoundError(ClusterkitError, ValueError):
    """An exhaustive scan would exceed the configured bound."""
