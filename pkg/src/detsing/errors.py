"""Exception hierarchy for detsing.

Every failure mode the library reports deliberately is a subclass of
DetsingError, so callers (and the CLI) can map them onto stable exit codes.
"""


class DetsingError(Exception):
    """Base class for all library-raised errors."""


class ParseError(DetsingError):
    """Polynomial or descriptor text failed to parse."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class UnknownVariable(DetsingError):
    """A variable name is not declared in the target ring."""


class ZeroPolynomial(DetsingError):
    """Operation undefined for the zero polynomial."""


class NotZeroDimensional(DetsingError):
    """Counting requested on an ideal of positive dimension."""


class NotIsolated(DetsingError):
    """Jacobian ideal has positive dimension (non-isolated hypersurface singularity)."""


class InvalidType(DetsingError):
    """Determinantal type (m, n, t) out of range."""


class NotDeterminantal(DetsingError):
    """Minors ideal does not have the generic codimension."""


class DegenerateAfterRetries(DetsingError):
    """Random sampling budget exhausted without a valid object."""


class NotIsolatedCriticalLocus(DetsingError):
    """Chosen linear form has a non-isolated critical locus; resample."""


class WrongDimension(DetsingError):
    """Operation requires a variety of a specific dimension."""


class HypothesisViolation(DetsingError):
    """Preconditions of the requested identity/theorem do not hold."""


class InconclusiveVerdict(DetsingError):
    """Monte-Carlo verdict did not stabilize; distinct CLI exit status."""


class ResourceLimitExceeded(DetsingError):
    """A configured cap (basis size, degree, reductions) was hit.

    Hard failure by design: no silently truncated answers.
    """

    def __init__(self, what, limit):
        super().__init__(f"resource limit exceeded: {what} (limit {limit})")
        self.what = what
        self.limit = limit
