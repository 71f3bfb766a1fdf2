"""Exception hierarchy shared by every module."""


class ToricError(Exception):
    """Base class for all errors raised by toricap."""


class InvalidGeometry(ToricError, ValueError):
    """Degenerate edge, self-intersecting chain, or otherwise invalid profile."""


class ClassMismatch(ToricError):
    """The domain is not in the class an operation requires."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class HypothesisNotSatisfied(ToricError):
    """A formula's extra hypotheses fail; ``side`` names which one.

    ``lower``/``upper`` carry the interval that is still known.
    """

    def __init__(self, message, side, lower=None, upper=None):
        super().__init__(message)
        self.side = side
        self.lower = lower
        self.upper = upper


class DomainParseError(ToricError, ValueError):
    """Malformed domain description; ``field`` is a dotted path to the culprit."""

    def __init__(self, message, field=""):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
