"""Single-vertex retracts of oriented and undirected graphs.

Four kinds of removable vertex ``v`` with its certificate ``covers``:

* strong: adjacent ``u`` with ``N[v] ⊆ N[u]`` (direction-blind neighborhoods);
* distributed: in-neighbors ``u_1..u_p`` with ``N+(v) ⊆ N+(u_i)`` for each i
  and ``N-(v) ⊆ N-[u_1] ∪ ... ∪ N-[u_p]``;
* weak: in-neighbor ``u`` with ``N(v) ⊆ N+[u]``;
* corner: undirected ``u ≠ v`` with ``N[v] ⊆ N[u]``.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Optional, Union

from .errors import InvalidParameterError, WitnessInvalidError
from .graph import OrientedGraph, UndirectedGraph

Graph = Union[OrientedGraph, UndirectedGraph]


class RetractKind(enum.Enum):
    STRONG = "strong"
    DISTRIBUTED = "distributed"
    WEAK = "weak"
    CORNER = "corner"

    @classmethod
    def parse(cls, value) -> "RetractKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidParameterError(
                f"unknown retract kind {value!r}; expected strong|distributed|weak|corner"
            ) from None


@dataclass(frozen=True)
class RetractWitness:
    kind: RetractKind
    removed: int
    covers: tuple

    def to_dict(self, g: Graph) -> dict:
        return {
            "kind": self.kind.value,
            "removed": g.names[self.removed],
            "covers": [g.names[u] for u in self.covers],
        }


def _strong_ok(g: OrientedGraph, v: int, u: int) -> bool:
    return u != v and u in g.neighbors(v) and g.closed_neighbors(v) <= g.closed_neighbors(u)


def _weak_ok(g: OrientedGraph, v: int, u: int) -> bool:
    return g.has_arc(u, v) and g.neighbors(v) <= g.closed_out_neighbors(u)


def _corner_ok(g: UndirectedGraph, v: int, u: int) -> bool:
    return u != v and g.closed_neighbors(v) <= g.closed_neighbors(u)


def _distributed_ok(g: OrientedGraph, v: int, covers) -> bool:
    if not covers:
        return False
    out_v = g.out_neighbors(v)
    union = set()
    for u in covers:
        if not g.has_arc(u, v) or not out_v <= g.out_neighbors(u):
            return False
        union |= g.closed_in_neighbors(u)
    return g.in_neighbors(v) <= union


def find_strong_retract(g: OrientedGraph) -> Optional[RetractWitness]:
    for v in range(g.n):
        for u in sorted(g.neighbors(v)):
            if _strong_ok(g, v, u):
                return RetractWitness(RetractKind.STRONG, v, (u,))
    return None


def find_distributed_retract(g: OrientedGraph) -> Optional[RetractWitness]:
    # The per-cover condition is independent of the other covers and the union
    # condition is monotone, so the maximal cover set decides existence.
    for v in range(g.n):
        out_v = g.out_neighbors(v)
        covers = tuple(u for u in sorted(g.in_neighbors(v)) if out_v <= g.out_neighbors(u))
        if covers and _distributed_ok(g, v, covers):
            return RetractWitness(RetractKind.DISTRIBUTED, v, covers)
    return None


def find_weak_retract(g: OrientedGraph) -> Optional[RetractWitness]:
    for v in range(g.n):
        for u in sorted(g.in_neighbors(v)):
            if _weak_ok(g, v, u):
                return RetractWitness(RetractKind.WEAK, v, (u,))
    return None


def find_corner(g: UndirectedGraph) -> Optional[RetractWitness]:
    for v in range(g.n):
        for u in sorted(g.neighbors(v)):
            if _corner_ok(g, v, u):
                return RetractWitness(RetractKind.CORNER, v, (u,))
    return None


_FINDERS = {
    RetractKind.STRONG: find_strong_retract,
    RetractKind.DISTRIBUTED: find_distributed_retract,
    RetractKind.WEAK: find_weak_retract,
    RetractKind.CORNER: find_corner,
}


def find_retract(g: Graph, kind) -> Optional[RetractWitness]:
    kind = RetractKind.parse(kind)
    _check_graph_kind(g, kind)
    if g.n < 2:
        return None
    return _FINDERS[kind](g)


def _check_graph_kind(g: Graph, kind: RetractKind) -> None:
    if kind is RetractKind.CORNER:
        if not isinstance(g, UndirectedGraph):
            raise InvalidParameterError("corners are defined on undirected graphs")
    elif not isinstance(g, OrientedGraph):
        raise InvalidParameterError(f"{kind.value} retracts are defined on oriented graphs")


def is_valid_witness(g: Graph, w: RetractWitness) -> bool:
    try:
        _check_graph_kind(g, w.kind)
    except InvalidParameterError:
        return False
    if not (0 <= w.removed < g.n) or any(not 0 <= u < g.n for u in w.covers):
        return False
    v = w.removed
    if w.kind is RetractKind.DISTRIBUTED:
        return _distributed_ok(g, v, w.covers)
    if len(w.covers) != 1:
        return False
    u = w.covers[0]
    if w.kind is RetractKind.STRONG:
        return _strong_ok(g, v, u)
    if w.kind is RetractKind.WEAK:
        return _weak_ok(g, v, u)
    return _corner_ok(g, v, u)


def apply_retract(g: Graph, w: RetractWitness):
    """Delete ``w.removed`` after revalidating the witness; returns ``(graph, old->new ids)``."""
    if not is_valid_witness(g, w):
        raise WitnessInvalidError(f"witness {w} does not hold on this graph")
    return g.delete_vertex(w.removed)


def reduce(g: Graph, kind) -> tuple[Graph, list]:
    """Apply retracts of `kind` until none is left.

    Returns the residue and the witnesses in removal order; each witness is
    expressed in the ids of the graph it was found in.
    """
    kind = RetractKind.parse(kind)
    _check_graph_kind(g, kind)
    steps = []
    while g.n >= 2:
        w = _FINDERS[kind](g)
        if w is None:
            break
        steps.append(w)
        g, _ = apply_retract(g, w)
    return g, steps


def reduction_records(g: Graph, witnesses: list) -> list[dict]:
    """Replay `witnesses` on `g` and describe each step by vertex names."""
    records = []
    for w in witnesses:
        records.append(w.to_dict(g))
        g, _ = apply_retract(g, w)
    return records


def reduction_to_json(g: Graph, witnesses: list) -> str:
    return json.dumps(reduction_records(g, witnesses), ensure_ascii=False)


def not_copwin_condition(g: OrientedGraph) -> bool:
    """True when every arc uv has some out-neighbor of v outside N+(u)."""
    if not g.arcs:
        raise InvalidParameterError("condition needs at least one arc")
    return all(g.out_neighbors(v) - g.out_neighbors(u) for u, v in g.arcs)
