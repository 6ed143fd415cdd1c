"""Exception hierarchy shared by all modules."""


class AttoError(Exception):
    """Base class for every error raised by this package."""


class InvariantViolation(AttoError, ValueError):
    """A value failed one of its construction invariants."""


class RootFindingFailure(AttoError, ArithmeticError):
    pass


class QuadratureNotConverged(AttoError, ArithmeticError):
    pass


class BasisMismatch(AttoError, ValueError):
    pass


class PoleOnOrInsideDisk(AttoError, ValueError):
    pass


class SplitFailure(AttoError, ArithmeticError):
    """Analytic/coanalytic separation left a residue on the circle."""


class TruncationInsufficient(AttoError, ArithmeticError):
    """A truncated Fourier expansion has a tail above the admitted bound."""
