"""Exceptions shared across the package."""


class TorbaseError(Exception):
    """Base class for all torbase errors."""


class ValidationError(TorbaseError, ValueError):
    """Bad user input: non-positive generators, malformed orders, etc."""

    exit_code = 2


class ResourceLimitError(TorbaseError):
    """A configured budget (candidate cap, cone cap, deadline) was exceeded."""

    exit_code = 3


class InternalConsistencyError(TorbaseError):
    """Two routes that must agree disagreed.  Always a bug, never user error."""

    exit_code = 4
