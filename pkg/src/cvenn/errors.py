"""Exception hierarchy.

Every domain failure derives from :class:`CvennError`; the command-line
front end prints the class name of the raised error on stderr.
"""


class CvennError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(CvennError, ValueError):
    pass


class ValidationError(CvennError, ValueError):
    """A matrix failed one of the density-matrix invariants."""


class NotHermitian(ValidationError):
    pass


class NotPositive(ValidationError):
    def __init__(self, message, min_eigenvalue=None):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


class TraceNotOne(ValidationError):
    pass


class NoConvergence(CvennError, RuntimeError):
    pass


class RankDeficient(CvennError, ValueError):
    pass


class ParameterOutOfRange(CvennError, ValueError):
    pass


class SamplingBudgetExhausted(CvennError, RuntimeError):
    pass


class DegenerateSeparation(CvennError, ValueError):
    pass


class NotRescalable(CvennError, TypeError):
    pass


class AnchorNotFeasible(CvennError, ValueError):
    pass


class NotConverged(CvennError, RuntimeError):
    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class PatternMismatch(CvennError, ValueError):
    pass


class UnequalDims(CvennError, ValueError):
    pass


class DegenerateObservable(CvennError, ValueError):
    pass


class ParseError(CvennError, ValueError):
    def __init__(self, message, line=None, field=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field {field!r}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.line = line
        self.field = field


class NotAWitnessWarning(UserWarning):
    """Raised (as a warning) when a constructed operator detects nothing."""
