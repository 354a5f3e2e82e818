"""Exceptions raised by SemiflowNet.

Every error derives from SemiflowNetError so callers can catch the whole
family at once. Conditions that are legitimate analysis outcomes
(infeasible decompositions, truncated graphs, unknown reachability) are
returned as values instead.
"""


class SemiflowNetError(Exception):
    """Base class for all SemiflowNet errors."""


class UnknownIdentifierError(SemiflowNetError, KeyError):
    """A place or transition identifier does not belong to the net."""

    def __init__(self, kind, identifier):
        self.kind = kind
        self.identifier = identifier
        super().__init__("unknown {} '{}'".format(kind, identifier))

    def __str__(self):
        return self.args[0]


class DimensionError(SemiflowNetError, ValueError):
    """Vectors or matrices do not have conforming dimensions."""


class InvalidNetError(SemiflowNetError, ValueError):
    """The net or marking violates a structural constraint."""


class NotEnabledError(SemiflowNetError):
    """A transition was fired from a marking that does not enable it."""

    def __init__(self, transition, place, required, available):
        self.transition = transition
        self.place = place
        self.required = required
        self.available = available
        super().__init__(
            "transition '{}' is not enabled: place '{}' holds {} token(s), "
            "{} required".format(transition, place, available, required))


class NotASemiflowError(SemiflowNetError, ValueError):
    """A vector that should be a non-negative semiflow is not one."""


class UnknownMarkingError(SemiflowNetError, KeyError):
    """A marking is not a state of the reachability graph."""

    def __str__(self):
        return self.args[0]


class ResourceLimitError(SemiflowNetError):
    """A configured resource cap was exceeded before an answer was found."""

    def __init__(self, message, limit=None):
        self.limit = limit
        super().__init__(message)


class NetParseError(SemiflowNetError):
    """The textual net description could not be parsed."""

    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__("line {}: {}".format(line, message))


class FixtureError(SemiflowNetError):
    """A shipped fixture net fails validation against its published
    semiflows.
    """
