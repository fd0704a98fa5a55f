"""Exception hierarchy for the degseq toolkit."""

from __future__ import annotations


class DegseqError(Exception):
    """Base class for all toolkit errors."""


class EmptyInput(DegseqError):
    """The degree-sequence text contained no tokens."""


class MalformedToken(DegseqError):
    def __init__(self, position: int, token: str):
        self.position = position
        self.token = token
        super().__init__(f"token #{position} is not a decimal integer: {token!r}")


class DegreeOutOfRange(DegseqError):
    def __init__(self, vertex: int, value: int, n: int):
        self.vertex = vertex
        self.value = value
        self.n = n
        super().__init__(
            f"degree {value} of vertex {vertex} outside [0, {n - 1}] for n = {n}"
        )


class SelfPair(DegseqError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"pair decrement requires two distinct vertices, got {vertex} twice")


class Underflow(DegseqError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"residual degree of vertex {vertex} is already 0")


class EmptyCandidates(DegseqError):
    """No admissible candidate exists for the active vertex."""


class NotGraphical(DegseqError):
    """The input degree sequence has no simple-graph realization."""


class InternalStuck(DegseqError):
    """Generation reached a state that a graphical sequence can never reach.

    Surfacing this means an internal invariant was violated, not a user error.
    """


class TooFewEdges(DegseqError):
    """Edge swapping needs at least two edges."""


class NoEdges(DegseqError):
    """Path statistics are undefined on an edgeless graph."""


class TooLarge(DegseqError):
    """Refusing a metric whose cost is super-linear at this input size."""


class Ungraphable(DegseqError):
    def __init__(self, params: str, attempts: int):
        self.params = params
        self.attempts = attempts
        super().__init__(
            f"no graphical sequence found for {params} after {attempts} redraws"
        )


class EquivalenceBreach(DegseqError):
    """A benchmark target produced different output at different worker counts."""
