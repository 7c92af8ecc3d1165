"""Exception hierarchy shared by every module."""


class ScrambleLabError(Exception):
    """Base class for all library errors."""


class GraphError(ScrambleLabError, ValueError):
    pass


class SelfLoop(GraphError):
    pass


class Disconnected(GraphError):
    pass


class BadIndex(GraphError):
    pass


class NoSuchEdge(GraphError):
    pass


class NotDegreeTwo(GraphError):
    pass


class NeighborsNotDistinct(GraphError):
    pass


class NotSimple(GraphError):
    pass


class NotABridge(GraphError):
    pass


class BadParams(ScrambleLabError, ValueError):
    pass


class InfeasibleSize(BadParams):
    pass


class FeasibilityCapExceeded(ScrambleLabError):
    """A search would exceed its configured size, node, or time budget."""


class CapExceeded(ScrambleLabError):
    """No witness exists within the caller-supplied cap."""


class EmptyCollection(ScrambleLabError, ValueError):
    pass


class EmptyEgg(ScrambleLabError, ValueError):
    pass


class DisconnectedEgg(ScrambleLabError, ValueError):
    pass


class PreconditionViolated(ScrambleLabError, ValueError):
    pass


class OrderTooSmall(PreconditionViolated):
    pass


class BadVertex(ScrambleLabError, ValueError):
    pass


class BadSet(ScrambleLabError, ValueError):
    pass


class NegativeOutsideSource(ScrambleLabError, ValueError):
    pass


class InvalidDecomposition(ScrambleLabError, ValueError):
    pass


class InvalidEmbedding(ScrambleLabError, ValueError):
    pass


class TooSmall(ScrambleLabError, ValueError):
    pass


class MissingInvariant(ScrambleLabError, KeyError):
    pass


class SetTooLarge(ScrambleLabError, ValueError):
    pass


class NoCaseMatches(ScrambleLabError):
    pass


class ParseError(ScrambleLabError, ValueError):
    pass
