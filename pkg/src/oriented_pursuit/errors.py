"""Exception hierarchy shared by every module of the toolkit."""


class PursuitError(Exception):
    """Base class for all toolkit errors."""


class GraphError(PursuitError, ValueError):
    """Malformed graph input."""


class InvalidVertexError(GraphError, IndexError):
    pass


class LoopError(GraphError):
    pass


class AntiParallelArcError(GraphError):
    pass


class DuplicateVertexError(GraphError):
    pass


class InvalidParameterError(PursuitError, ValueError):
    pass


class ResourceLimitError(PursuitError):
    """An exponential computation would exceed its configured cap or deadline."""


class NoStrategyError(PursuitError):
    """Strategy requested for a game the cops cannot win."""


class RuleViolationError(PursuitError):
    """A player attempted an illegal move."""


class WitnessInvalidError(PursuitError, ValueError):
    """A retract witness does not certify its condition on the given graph."""
