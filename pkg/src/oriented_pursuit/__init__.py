"""Exact Cops and Robber solving on oriented graphs, with retracts and subdivisions."""

from .errors import (
    AntiParallelArcError,
    DuplicateVertexError,
    InvalidParameterError,
    InvalidVertexError,
    LoopError,
    NoStrategyError,
    PursuitError,
    ResourceLimitError,
    RuleViolationError,
    WitnessInvalidError,
)
from .game import (
    GameSpec,
    MoveModel,
    Strategy,
    cop_move_relation,
    cop_number,
    cop_number_chain,
    extract_strategy,
    is_k_copwin,
    play,
    robber_move_relation,
    solve,
)
from .graph import (
    OrientedGraph,
    UndirectedGraph,
    degeneracy,
    domination_number,
    is_bipartite,
    is_connected,
    is_strongly_connected,
    is_tree,
    is_triangle_free,
    underlying,
)
from .retracts import (
    RetractKind,
    RetractWitness,
    apply_retract,
    find_corner,
    find_distributed_retract,
    find_strong_retract,
    find_weak_retract,
    not_copwin_condition,
    reduce,
)
from .subdivisions import SubdivisionResult, check_projection_observation, strong_subdivide, weak_subdivide

__version__ = "0.1.0"
