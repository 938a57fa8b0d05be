"""Strong and weak t-subdivisions with their projections back to the input.

Strong: every undirected edge ``uv`` becomes the two directed paths
``u, v^u_1, ..., v^u_{t-1}, v`` and ``v, u^v_1, ..., u^v_{t-1}, u``.
Weak: every arc ``uv`` becomes the single path ``u, v^u_1, ..., v^u_{t-1}, v``.
A new vertex ``x^y_i`` projects to ``x``; original vertices project to
themselves.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Union

from .errors import InvalidParameterError
from .graph import OrientedGraph, UndirectedGraph
from .io import graph_to_dict


class SubdivisionKind(enum.Enum):
    STRONG = "strong"
    WEAK = "weak"


@dataclass(frozen=True)
class VertexRole:
    """Original vertex (``owner`` only) or new vertex ``owner^counterpart_index``."""

    owner: int
    counterpart: int = -1
    index: int = 0

    @property
    def is_original(self) -> bool:
        return self.index == 0


@dataclass(frozen=True)
class SubdivisionResult:
    kind: SubdivisionKind
    t: int
    source: Union[UndirectedGraph, OrientedGraph]
    graph: OrientedGraph
    projection: tuple  # subdivided id -> original id
    roles: tuple  # of VertexRole

    def to_dict(self) -> dict:
        data = graph_to_dict(self.graph)
        names, orig = self.graph.names, self.source.names
        data["projection"] = {names[x]: orig[p] for x, p in enumerate(self.projection)}
        roles = {}
        for x, role in enumerate(self.roles):
            if role.is_original:
                roles[names[x]] = {"kind": "original"}
            else:
                roles[names[x]] = {
                    "kind": "new",
                    "owner": orig[role.owner],
                    "counterpart": orig[role.counterpart],
                    "index": role.index,
                }
        data["roles"] = roles
        return data


def _new_name(names, owner: int, other: int, i: int) -> str:
    return f"{names[owner]}^{names[other]}_{i}"


def _build(source, kind, t, paths) -> SubdivisionResult:
    names = list(source.names)
    projection = list(range(source.n))
    roles = [VertexRole(v) for v in range(source.n)]
    arcs = []
    for u, v in paths:
        prev = u
        for i in range(1, t):
            x = len(names)
            names.append(_new_name(source.names, v, u, i))
            projection.append(v)
            roles.append(VertexRole(v, u, i))
            arcs.append((prev, x))
            prev = x
        arcs.append((prev, v))
    graph = OrientedGraph(len(names), arcs, names)
    return SubdivisionResult(kind, t, source, graph, tuple(projection), tuple(roles))


def strong_subdivide(g: UndirectedGraph, t: int) -> SubdivisionResult:
    if not isinstance(g, UndirectedGraph):
        raise InvalidParameterError("strong subdivision takes an undirected graph")
    if t < 2:
        raise InvalidParameterError(f"strong subdivision needs t >= 2, got {t}")
    paths = []
    for u, v in g.sorted_edges():
        paths.append((u, v))
        paths.append((v, u))
    return _build(g, SubdivisionKind.STRONG, t, paths)


def weak_subdivide(g: OrientedGraph, t: int) -> SubdivisionResult:
    if not isinstance(g, OrientedGraph):
        raise InvalidParameterError("weak subdivision takes an oriented graph")
    if t < 1:
        raise InvalidParameterError(f"weak subdivision needs t >= 1, got {t}")
    return _build(g, SubdivisionKind.WEAK, t, g.sorted_arcs())


def _within(g: OrientedGraph, x: int, depth: int) -> set:
    """Vertices reachable from `x` by a directed walk of at most `depth` arcs."""
    dist = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if dist[u] == depth:
            continue
        for w in g.out_neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return set(dist)


def check_projection_observation(r: SubdivisionResult, kind=None) -> bool:
    """Exhaustively check the projection property for every short directed path.

    Strong: a path of length <= t from x to y forces f(x), f(y) to be equal or
    adjacent in the input.  Weak: it forces g(y) into N+[g(x)].
    """
    if kind is not None:
        kind = SubdivisionKind(kind) if not isinstance(kind, SubdivisionKind) else kind
        if kind is not r.kind:
            raise InvalidParameterError(f"result is a {r.kind.value} subdivision, not {kind.value}")
    src, proj = r.source, r.projection
    for x in range(r.graph.n):
        fx = proj[x]
        for y in _within(r.graph, x, r.t):
            fy = proj[y]
            if r.kind is SubdivisionKind.STRONG:
                if fy not in src.closed_neighbors(fx) or fx not in src.closed_neighbors(fy):
                    return False
            elif fy not in src.closed_out_neighbors(fx):
                return False
    return True
