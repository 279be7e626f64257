"""Exception types shared across the package."""


class QuasicodeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QuasicodeError, ValueError):
    """Operands outside an operation's domain (mixed algebras, zero where nonzero is required, ...)."""


class UnsupportedError(QuasicodeError, ValueError):
    """The requested mode or operation is not available for this algebra."""


class InvalidParameterError(QuasicodeError, ValueError):
    """A construction parameter violates its precondition."""


class DegenerateConstructionError(InvalidParameterError):
    """A construction parameter is formally admissible but produces a degenerate result."""


class InconsistencyError(QuasicodeError):
    """An oracle result or supplied table contradicts a structural guarantee."""


class InvalidIsometryError(QuasicodeError, ValueError):
    """A claimed isometry is not injective on the relevant support."""


class SpecFormatError(QuasicodeError, ValueError):
    """Malformed algebra spec file, vector file, or scalar literal."""
