"""Exact Cops and Robber solver for oriented and undirected graphs.

The game is a reachability game on the finite arena of configurations
``(cops, robber, turn)``.  Cop tuples are sorted multisets; several cops
may share a vertex.  The cop-winning region and the number of rounds
needed to capture are computed by backward induction (an attractor
fixed point), vectorised over all cop tuples with numpy/scipy.

Rules fixed by this implementation:

* cops place first, then the robber; placing on a cop is a capture;
* cops move first each round, all cops move at once, each by at most one
  step of its move relation (staying is always allowed);
* capture is tested after every move of either side;
* an infinite play is a robber win.
"""
from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Optional, Protocol, Union

import numpy as np
import scipy.sparse as sp

from .errors import (
    InvalidParameterError,
    NoStrategyError,
    PursuitError,
    ResourceLimitError,
    RuleViolationError,
)
from .graph import OrientedGraph, UndirectedGraph

DEFAULT_ARENA_CAP = 50_000_000
# joint-move candidates materialised per chunk
_CHUNK = 4_000_000

Graph = Union[OrientedGraph, UndirectedGraph]


class MoveModel(enum.Enum):
    STRONG_COP = "strong"  # strong cops, weak robber
    NORMAL_COP = "normal"  # weak cops, weak robber
    WEAK_COP = "weak"  # weak cops, strong robber
    UNDIRECTED = "undirected"  # both strong: the classical game on the underlying graph

    @property
    def cops_strong(self) -> bool:
        return self in (MoveModel.STRONG_COP, MoveModel.UNDIRECTED)

    @property
    def robber_strong(self) -> bool:
        return self in (MoveModel.WEAK_COP, MoveModel.UNDIRECTED)

    @classmethod
    def parse(cls, value) -> "MoveModel":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidParameterError(
                f"unknown move model {value!r}; expected strong|normal|weak|undirected"
            ) from None


ORIENTED_MODELS = (MoveModel.STRONG_COP, MoveModel.NORMAL_COP, MoveModel.WEAK_COP)


def _moves(g: Graph, strong: bool, v: int) -> frozenset:
    if isinstance(g, UndirectedGraph) or strong:
        return g.closed_neighbors(v)
    return g.closed_out_neighbors(v)


def _check_model(g: Graph, model: MoveModel) -> None:
    if isinstance(g, UndirectedGraph) and model is not MoveModel.UNDIRECTED:
        raise InvalidParameterError(f"model {model.value!r} needs an oriented graph")


def cop_move_relation(g: Graph, model, v: int) -> frozenset:
    """Vertices a single cop on `v` may occupy after its move."""
    model = MoveModel.parse(model)
    _check_model(g, model)
    return _moves(g, model.cops_strong, v)


def robber_move_relation(g: Graph, model, v: int) -> frozenset:
    model = MoveModel.parse(model)
    _check_model(g, model)
    return _moves(g, model.robber_strong, v)


@dataclass(frozen=True)
class GameSpec:
    graph: Graph
    k: int
    model: MoveModel = MoveModel.NORMAL_COP

    def __post_init__(self):
        object.__setattr__(self, "model", MoveModel.parse(self.model))
        _check_model(self.graph, self.model)
        if self.graph.n < 1:
            raise InvalidParameterError("the game needs at least one vertex")
        if not 1 <= self.k <= self.graph.n:
            raise InvalidParameterError(f"cop count must be in 1..{self.graph.n}, got {self.k}")

    def arena_size(self) -> int:
        n = self.graph.n
        return math.comb(n + self.k - 1, self.k) * n * 2


@dataclass(frozen=True)
class Configuration:
    cops: tuple
    robber: int
    turn: str  # "cops" or "robber": whose move is next

    @property
    def captured(self) -> bool:
        return self.robber in self.cops

    def to_dict(self, g: Graph) -> dict:
        return {
            "cops": [g.names[c] for c in self.cops],
            "robber": g.names[self.robber],
            "turn": self.turn,
        }


def _colex_keys(tuples: np.ndarray, n: int) -> np.ndarray:
    """Rank sorted k-multisets of ``range(n)`` (rows of `tuples`) injectively."""
    k = tuples.shape[1]
    top = n + k
    table = np.zeros((top + 1, k + 1), dtype=np.int64)
    for m in range(top + 1):
        for i in range(k + 1):
            table[m, i] = math.comb(m, i)
    keys = np.zeros(tuples.shape[0], dtype=np.int64)
    for i in range(k):
        keys += table[tuples[:, i] + i, i + 1]
    return keys


@dataclass
class Solution:
    """Solved arena for one `GameSpec`.

    ``cop_rank[c, r]`` is the number of cop moves needed to capture from
    the cop-turn configuration (tuple ``c``, robber ``r``), ``-1`` when the
    robber escapes forever.  ``robber_rank`` is the same for robber-turn
    configurations.
    """

    spec: GameSpec
    tuples: np.ndarray
    cop_rank: np.ndarray
    robber_rank: np.ndarray
    joint_moves: sp.csr_matrix
    copwin: bool
    start: Optional[tuple]
    start_rank: Optional[int]
    canonical: bool = True
    _row_of: dict = field(default_factory=dict, repr=False)

    def row(self, cops) -> int:
        key = tuple(sorted(cops)) if self.canonical else tuple(cops)
        if not self._row_of:
            self._row_of.update({tuple(int(x) for x in t): i for i, t in enumerate(self.tuples)})
        return self._row_of[key]

    def rank(self, cops, robber: int, turn: str = "cops") -> int:
        if robber in cops:
            return 0
        table = self.cop_rank if turn == "cops" else self.robber_rank
        return int(table[self.row(cops), robber])


def solve(
    spec: GameSpec,
    arena_cap: int = DEFAULT_ARENA_CAP,
    deadline: Optional[float] = None,
    canonical: bool = True,
    capture_on_robber_move: bool = True,
) -> Solution:
    """Compute the cop-winning region of `spec` by backward induction.

    `canonical=False` indexes cops by ordered tuples instead of sorted
    multisets (a slower, symmetry-free arena used for cross-checks).
    `capture_on_robber_move=False` is a deliberately broken rule used by
    the verification harness to prove its checks can fail: a robber
    stepping onto a cop escapes instead of being caught.
    """
    g, k, model = spec.graph, spec.k, spec.model
    n = g.n
    if canonical:
        n_tuples = math.comb(n + k - 1, k)
    else:
        n_tuples = n**k
    if n_tuples * n * 2 > arena_cap:
        raise ResourceLimitError(
            f"arena of {n_tuples * n * 2} configurations exceeds cap {arena_cap} "
            f"(n={n}, k={k})"
        )
    _tick(deadline)

    it = combinations_with_replacement(range(n), k) if canonical else product(range(n), repeat=k)
    tuples = np.array(list(it), dtype=np.int64).reshape(n_tuples, k)
    if canonical:
        keys = _colex_keys(tuples, n)
    else:
        keys = np.zeros(n_tuples, dtype=np.int64)
        for i in range(k):
            keys = keys * n + tuples[:, i]
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]

    cop_opts = [sorted(_moves(g, model.cops_strong, v)) for v in range(n)]
    width = max(len(o) for o in cop_opts)
    # pad with the vertex itself: staying is always legal, duplicates are harmless
    opts = np.array([o + [v] * (width - len(o)) for v, o in enumerate(cop_opts)], dtype=np.int64)

    rows_all, cols_all = [], []
    per_chunk = max(1, _CHUNK // max(1, n_tuples))
    choices = list(product(range(width), repeat=k))
    row_ids = np.arange(n_tuples, dtype=np.int64)
    for start in range(0, len(choices), per_chunk):
        _tick(deadline)
        block = choices[start:start + per_chunk]
        cand = np.stack([opts[tuples[:, j][:, None], np.array([c[j] for c in block])[None, :]]
                         for j in range(k)], axis=-1)  # (n_tuples, len(block), k)
        cand = cand.reshape(-1, k)
        if canonical:
            cand = np.sort(cand, axis=1)
            ckeys = _colex_keys(cand, n)
        else:
            ckeys = np.zeros(cand.shape[0], dtype=np.int64)
            for i in range(k):
                ckeys = ckeys * n + cand[:, i]
        targets = order[np.searchsorted(sorted_keys, ckeys)]
        rows_all.append(np.repeat(row_ids, len(block)))
        cols_all.append(targets)
    rows = np.concatenate(rows_all)
    cols = np.concatenate(cols_all)
    joint = sp.csr_matrix(
        (np.ones(rows.shape[0], dtype=np.float32), (rows, cols)), shape=(n_tuples, n_tuples)
    )
    joint.sum_duplicates()
    joint.data[:] = 1.0
    joint.sort_indices()

    robber_moves = np.zeros((n, n), dtype=np.float32)
    for v in range(n):
        for w in _moves(g, model.robber_strong, v):
            robber_moves[v, w] = 1.0

    captured = np.zeros((n_tuples, n), dtype=bool)
    for j in range(k):
        captured[row_ids, tuples[:, j]] = True

    cop_rank = np.full((n_tuples, n), -1, dtype=np.int32)
    robber_rank = np.full((n_tuples, n), -1, dtype=np.int32)
    robber_rank[captured] = 0
    r_won = captured.copy()
    if capture_on_robber_move:
        cop_rank[captured] = 0
        c_won = captured.copy()
        frozen = np.zeros_like(captured)
    else:
        c_won = np.zeros_like(captured)
        frozen = captured

    m = 0
    while True:
        m += 1
        _tick(deadline)
        c_new = (joint @ r_won.astype(np.float32)) > 0
        c_new &= ~c_won
        c_new &= ~frozen
        cop_rank[c_new] = m
        c_won |= c_new
        escapes = ((~c_won).astype(np.float32) @ robber_moves.T) > 0
        r_new = ~escapes & ~r_won
        robber_rank[r_new] = m
        r_won |= r_new
        if not c_new.any() and not r_new.any():
            break

    placed = c_won | captured
    winning_rows = np.flatnonzero(placed.all(axis=1))
    copwin = winning_rows.size > 0
    start = start_rank = None
    if copwin:
        ranks = np.where(captured, 0, cop_rank)[winning_rows].max(axis=1)
        best = int(np.argmin(ranks))  # first minimum is lexicographically least
        start = tuple(int(x) for x in tuples[winning_rows[best]])
        start_rank = int(ranks[best])
    return Solution(spec, tuples, cop_rank, robber_rank, joint, copwin, start, start_rank, canonical)


def _tick(deadline: Optional[float]) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise ResourceLimitError("solver deadline exceeded")


def is_k_copwin(spec: GameSpec, **options) -> bool:
    return solve(spec, **options).copwin


def cop_number(g: Graph, model, max_k: Optional[int] = None, start_k: int = 1, **options) -> int:
    """Least k such that k cops win; k = n always wins."""
    model = MoveModel.parse(model)
    if isinstance(g, OrientedGraph) and model is MoveModel.UNDIRECTED:
        g = g.underlying()
    top = g.n if max_k is None else min(max_k, g.n)
    for k in range(max(1, start_k), top + 1):
        if is_k_copwin(GameSpec(g, k, model), **options):
            return k
    if max_k is not None and top < g.n:
        raise ResourceLimitError(f"no win with at most {max_k} cops")
    raise PursuitError("k = n cops failed to win; solver bug")  # pragma: no cover


def cop_number_chain(g: OrientedGraph, **options) -> tuple[int, int, int]:
    """``(c_s, c_n, c_w)``, each computed independently; raises if the chain breaks."""
    cs, cn, cw = (cop_number(g, m, **options) for m in ORIENTED_MODELS)
    if not cs <= cn <= cw:
        raise PursuitError(f"cop number chain violated: c_s={cs}, c_n={cn}, c_w={cw}")
    return cs, cn, cw


@dataclass
class Strategy:
    """Winning cop strategy: an initial placement and a move for every
    winning cop-turn configuration, each with its rounds-to-capture rank."""

    spec: GameSpec
    initial: tuple
    start_rank: int
    moves: dict  # (cops, robber) -> next cops
    ranks: dict  # (cops, robber) -> rank, cop-turn configurations

    def move(self, cops, robber: int) -> tuple:
        try:
            return self.moves[(tuple(sorted(cops)), robber)]
        except KeyError:
            raise NoStrategyError(f"no winning move from cops={cops}, robber={robber}") from None

    def rank(self, cops, robber: int) -> Optional[int]:
        if robber in cops:
            return 0
        return self.ranks.get((tuple(sorted(cops)), robber))

    def to_dict(self) -> dict:
        g = self.spec.graph
        names = g.names
        records = []
        for (cops, robber), nxt in sorted(self.moves.items()):
            records.append({
                "configuration": {"cops": [names[c] for c in cops], "robber": names[robber]},
                "move": [names[c] for c in nxt],
                "rank": self.ranks[(cops, robber)],
            })
        return {
            "model": self.spec.model.value,
            "k": self.spec.k,
            "initial": [names[c] for c in self.initial],
            "start_rank": self.start_rank,
            "moves": records,
        }


def extract_strategy(spec: GameSpec, solution: Optional[Solution] = None, **options) -> Strategy:
    """Rank-minimal strategy; ties go to the lexicographically least cop tuple."""
    sol = solution if solution is not None else solve(spec, **options)
    if not sol.copwin:
        raise NoStrategyError(f"{spec.k} cop(s) cannot win under model {spec.model.value!r}")
    n = spec.graph.n
    inf = np.iinfo(np.int32).max
    after_cops = np.where(sol.robber_rank >= 0, sol.robber_rank, inf)
    moves, ranks = {}, {}
    joint = sol.joint_moves
    for row in range(sol.tuples.shape[0]):
        todo = np.flatnonzero(sol.cop_rank[row] > 0)
        if todo.size == 0:
            continue
        cols = joint.indices[joint.indptr[row]:joint.indptr[row + 1]]
        sub = after_cops[cols][:, todo]
        best = cols[np.argmin(sub, axis=0)]
        cops = tuple(int(x) for x in sol.tuples[row])
        for r, b in zip(todo.tolist(), best.tolist()):
            moves[(cops, r)] = tuple(int(x) for x in sol.tuples[b])
            ranks[(cops, r)] = int(sol.cop_rank[row, r])
    return Strategy(spec, sol.start, sol.start_rank, moves, ranks)


class RobberPolicy(Protocol):
    def place(self, spec: GameSpec, cops: tuple) -> int: ...

    def move(self, spec: GameSpec, cops: tuple, robber: int, options: frozenset) -> int: ...


class LazyRobber:
    """Places on the least free vertex and never moves."""

    def place(self, spec, cops):
        free = [v for v in range(spec.graph.n) if v not in cops]
        return free[0] if free else 0

    def move(self, spec, cops, robber, options):
        return robber


class GreedyRobber:
    """Steps to the option the fewest cops can reach next turn."""

    def _threat(self, spec, cops, v):
        if v in cops:
            return len(cops) + 1
        return sum(v in cop_move_relation(spec.graph, spec.model, c) for c in cops)

    def place(self, spec, cops):
        return min(range(spec.graph.n), key=lambda v: (self._threat(spec, cops, v), v))

    def move(self, spec, cops, robber, options):
        return min(sorted(options), key=lambda v: (self._threat(spec, cops, v), v))


class RandomRobber:
    def __init__(self, seed: int = 0):
        self.rng = np.random.default_rng(seed)

    def place(self, spec, cops):
        return int(self.rng.integers(spec.graph.n))

    def move(self, spec, cops, robber, options):
        opts = sorted(options)
        return opts[int(self.rng.integers(len(opts)))]


class AdversarialRobber:
    """Always picks a successor of maximal rank under the given strategy."""

    def __init__(self, strategy: Strategy):
        self.strategy = strategy

    def _value(self, cops, v):
        if v in cops:
            return -1
        r = self.strategy.rank(cops, v)
        return math.inf if r is None else r

    def place(self, spec, cops):
        return max(range(spec.graph.n), key=lambda v: (self._value(cops, v), -v))

    def move(self, spec, cops, robber, options):
        return max(sorted(options), key=lambda v: (self._value(cops, v), -v))


@dataclass
class Transcript:
    configurations: list  # of Configuration, in play order
    rounds: int  # cop moves made

    @property
    def captured(self) -> bool:
        return bool(self.configurations) and self.configurations[-1].captured

    def to_json_lines(self, g: Graph) -> str:
        import json

        return "".join(json.dumps(c.to_dict(g)) + "\n" for c in self.configurations)


def play(spec: GameSpec, strategy: Strategy, robber_policy: RobberPolicy, max_rounds: Optional[int] = None) -> Transcript:
    """Simulate `strategy` against `robber_policy` until capture.

    Configurations are recorded after placement and after every move.
    """
    g = spec.graph
    limit = strategy.start_rank if max_rounds is None else max_rounds
    cops = tuple(strategy.initial)
    robber = robber_policy.place(spec, cops)
    if not (isinstance(robber, (int, np.integer)) and 0 <= robber < g.n):
        raise RuleViolationError(f"robber placed on invalid vertex {robber!r}")
    robber = int(robber)
    history = [Configuration(cops, robber, "cops")]
    rounds = 0
    while not history[-1].captured:
        if rounds >= limit:
            raise NoStrategyError(f"no capture within {limit} rounds; strategy is not winning")
        cops = strategy.move(cops, robber)
        rounds += 1
        history.append(Configuration(cops, robber, "robber"))
        if history[-1].captured:
            break
        options = robber_move_relation(g, spec.model, robber)
        nxt = robber_policy.move(spec, cops, robber, options)
        if nxt not in options:
            raise RuleViolationError(
                f"robber may not move from {g.names[robber]!r} to {nxt!r} under {spec.model.value!r}"
            )
        robber = int(nxt)
        history.append(Configuration(cops, robber, "cops"))
    return Transcript(history, rounds)
