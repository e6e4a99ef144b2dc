"""Exception types shared across the package."""


class RefineMaskError(ValueError):
    """Base class for domain errors raised by this package."""


class ParseError(RefineMaskError):
    """Malformed rational, mask, or polynomial text."""


class NotRefinableError(RefineMaskError):
    """A mask or pair fails the arithmetic conditions of the refinement relation."""


class SingularMatrixError(RefineMaskError):
    """A linear system has no unique solution."""
