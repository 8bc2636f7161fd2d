"""Exception types shared across the package."""


class EpsCertError(Exception):
    """Base class for every error raised by epscert."""


class ZeroDenominator(EpsCertError, ZeroDivisionError):
    """A linear fractional objective was evaluated where its denominator is 0."""


class DimensionMismatch(EpsCertError, ValueError):
    pass


class MalformedLP(EpsCertError, ValueError):
    pass


class NegativeEpsilon(EpsCertError, ValueError):
    pass


class InfeasibleCandidate(EpsCertError, ValueError):
    """The candidate point does not lie in the feasible set."""


class EmptyFeasibleSet(EpsCertError):
    pass


class DomainViolation(EpsCertError):
    """Some objective denominator is not positive at the candidate point."""


class DocumentError(EpsCertError, ValueError):
    """A problem document could not be parsed.

    ``position`` is either ``(line, column)`` for syntax errors or a
    JSON-path string such as ``objectives[1].a[0]`` for schema errors.
    """

    def __init__(self, message, position=None):
        self.position = position
        if isinstance(position, tuple):
            message = f"line {position[0]}, column {position[1]}: {message}"
        elif position:
            message = f"{position}: {message}"
        super().__init__(message)
