"""Error types raised by the library and mapped to CLI exit codes."""


class MetrofanError(ValueError):
    """Base class for every domain error."""

    kind = "error"
    exit_code = 1


class MetricParseError(MetrofanError):
    """A metric file or value could not be parsed."""

    kind = "parse"
    exit_code = 2


class InvalidMetricError(MetrofanError):
    """Some triangle inequality fails."""

    kind = "NOT_PSEUDOMETRIC"
    exit_code = 3


class ZeroDistanceError(MetrofanError):
    """A construction needs positive distances but got a pseudometric."""

    kind = "ZERO_DISTANCE"
    exit_code = 3


class NotStrictError(MetrofanError):
    """A strict metric was required."""

    kind = "NOT_STRICT"
    exit_code = 3


class DegenerateError(MetrofanError):
    """All points of a configuration coincide."""

    kind = "DEGENERATE"


class TooLargeError(MetrofanError):
    """The request is beyond what is computed exactly here."""

    kind = "TOO_LARGE"
    exit_code = 4


class ReproductionMismatch(MetrofanError):
    """A recomputed table entry differs from the published one."""

    kind = "mismatch"
    exit_code = 5


class InternalDisagreementError(MetrofanError):
    """Two independent routes to the same answer disagree."""

    kind = "INTERNAL_DISAGREEMENT"
