"""Exception types shared across the package."""


class YBXError(Exception):
    """Base class for all package errors."""


class NonBijectiveError(YBXError, ValueError):
    """An r-table is out of range or does not define a bijection of X x X."""


class GuardExceeded(YBXError, RuntimeError):
    """A word enumeration or orbit search grew past the configured size guard."""


class BoundExceeded(YBXError, ValueError):
    """A brute-force search was requested beyond its configured bound."""


class NotApplicable(YBXError, ValueError):
    """A check was invoked on an input outside its hypothesis."""
