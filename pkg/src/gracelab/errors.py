"""Exception hierarchy shared by every gracelab module."""


class GraceError(Exception):
    """Base class for all gracelab errors."""


class DomainSizeError(GraceError, ValueError):
    """Two objects that must live on the same Z_n do not."""


class SizeCapError(GraceError, ValueError):
    """Requested domain size exceeds the configured maximum."""


class LiteralParseError(GraceError, ValueError):
    """A function literal could not be parsed."""


class GroupAxiomError(GraceError, ValueError):
    """An element list is not closed under composition or inverse."""


class SingularMatrixError(GraceError, ArithmeticError):
    """The matrix has no inverse; ``determinant`` carries the exact value."""

    def __init__(self, message, determinant):
        super().__init__(message)
        self.determinant = determinant


class ConstructionUnavailableError(GraceError, ValueError):
    """The fixed-point swap has no qualifying vertex."""


class UndefinedLCMError(GraceError, ValueError):
    """LCM requested for an identically zero product."""


class PremiseError(GraceError, ValueError):
    """An operation was called outside its premise."""
