"""Exception hierarchy shared by all rmlab modules."""


class RmlabError(Exception):
    """Base class for all rmlab errors."""


class ParameterError(RmlabError, ValueError):
    """Arguments are outside an operation's documented domain."""


class CapExceededError(RmlabError, RuntimeError):
    """A requested enumeration would exceed the configured cap."""


class ExactnessError(RmlabError, ArithmeticError):
    """An exact-integer identity failed (inexact division, negative count,
    or an inconsistent input distribution).  Never silently rounded."""
