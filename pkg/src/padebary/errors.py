"""Exception hierarchy.

Two families matter to callers: :class:`NumericalFailure` (the inputs are
well formed but the requested object does not exist or cannot be computed
reliably) and :class:`InvalidInput` (the inputs violate a precondition).
The command line tool maps them to exit codes 2 and 3 respectively.
"""


class PadeError(Exception):
    """Base class for all errors raised by this package."""


class NumericalFailure(PadeError):
    pass


class InvalidInput(PadeError, ValueError):
    pass


class SingularMatrix(NumericalFailure):
    """A pivot fell below the singularity threshold."""


class NoConvergence(NumericalFailure):
    pass


class DegenerateDeterminant(NumericalFailure):
    pass


class DegenerateDenominator(NumericalFailure):
    """The denominator of an approximant vanishes at the origin."""


class ZeroAtOrigin(DegenerateDenominator):
    pass


class NonDistinctNodes(NumericalFailure):
    """Computed partial-fraction nodes are (numerically) repeated."""


class ZeroDerivative(NumericalFailure):
    pass


class InsufficientOrder(InvalidInput):
    """A series has too few coefficients for the requested operation."""


class InvalidDenominator(InvalidInput):
    pass


class InvalidNodes(InvalidInput):
    """Nodes are repeated, or zero where zero is not allowed."""


class ZeroNode(InvalidNodes):
    pass
