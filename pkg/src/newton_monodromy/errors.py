"""Exception hierarchy shared by every sub-package.

Library code raises these and never prints; the command line layer turns them
into report entries and a nonzero exit status.
"""


class MonodromyError(Exception):
    """Root of every error raised by the package."""


class InputError(MonodromyError, ValueError):
    """Malformed or inconsistent input: dimension mismatch, bad frame, unparsable text."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class NoSupportingFaceError(InputError):
    """A linear functional is unbounded below on a polyhedron."""


class HypothesisError(MonodromyError):
    """A decidable hypothesis (convenience, proper containment, dimension) fails."""

    def __init__(self, message, datum=None):
        super().__init__(message)
        self.datum = datum


class UnsupportedError(MonodromyError):
    """A request outside what the formulas cover, e.g. the eigenvalue 1."""


class DiagnosticError(MonodromyError):
    """An internal cross-check failed; certifies that an asserted hypothesis is violated."""

    def __init__(self, message, datum=None):
        super().__init__(message)
        self.datum = datum


class PolynomialityError(DiagnosticError):
    """Weighted lattice point counts are not reproduced by the fitted numerator."""


class UnimodalityError(DiagnosticError):
    """A symmetric polynomial failed to decompose with nonnegative increments."""


class TilingError(DiagnosticError):
    """Cells of a subdivision fail to tile their ambient polytope."""


class PosetError(InputError):
    """The g-polynomial recursion left a residual: the interval is not Eulerian."""
