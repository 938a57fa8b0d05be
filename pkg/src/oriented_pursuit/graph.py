"""Immutable oriented and undirected graph values.

Vertices are dense integer ids ``0..n-1`` with a side table of unique
display names.  Graphs never change after construction; every
transformation returns a new graph.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    AntiParallelArcError,
    DuplicateVertexError,
    InvalidVertexError,
    LoopError,
    ResourceLimitError,
)

DOMINATION_VERTEX_CAP = 24


def _normalize_names(n: int, names: Optional[Sequence[str]]) -> tuple:
    if names is None:
        return tuple(str(i) for i in range(n))
    names = tuple(str(x) for x in names)
    if len(names) != n:
        raise ValueError(f"expected {n} vertex names, got {len(names)}")
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateVertexError(f"duplicate vertex name {name!r}")
        seen.add(name)
    return names


class _Graph:
    __slots__ = ("n", "names", "_index")

    def _check(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v!r} out of range for n={self.n}")
        return v

    def vertices(self) -> range:
        return range(self.n)

    def index(self, name: str) -> int:
        """Return the id of the vertex called `name`."""
        try:
            return self._index[name]
        except KeyError:
            raise InvalidVertexError(f"unknown vertex {name!r}") from None

    def name(self, v: int) -> str:
        return self.names[self._check(v)]

    def __len__(self) -> int:
        return self.n


class OrientedGraph(_Graph):
    """Finite simple digraph without loops or anti-parallel arcs.

    Repeated arcs in the same direction collapse to one.  Loops raise
    `LoopError`, opposite arc pairs raise `AntiParallelArcError`.
    """

    __slots__ = ("arcs", "_out", "_in", "_hash")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = (), names: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = int(n)
        self.names = _normalize_names(self.n, names)
        self._index = {name: i for i, name in enumerate(self.names)}
        out = [set() for _ in range(self.n)]
        inn = [set() for _ in range(self.n)]
        arc_set = set()
        for u, v in arcs:
            u, v = self._check(int(u)), self._check(int(v))
            if u == v:
                raise LoopError(f"loop at vertex {self.names[u]!r}")
            if (v, u) in arc_set:
                raise AntiParallelArcError(
                    f"anti-parallel arcs between {self.names[u]!r} and {self.names[v]!r}"
                )
            arc_set.add((u, v))
            out[u].add(v)
            inn[v].add(u)
        self.arcs = frozenset(arc_set)
        self._out = tuple(frozenset(s) for s in out)
        self._in = tuple(frozenset(s) for s in inn)
        self._hash = None

    @classmethod
    def from_names(cls, vertices: Sequence[str], arcs: Iterable[tuple[str, str]]) -> "OrientedGraph":
        names = _normalize_names(len(vertices), vertices)
        index = {name: i for i, name in enumerate(names)}
        try:
            id_arcs = [(index[str(u)], index[str(v)]) for u, v in arcs]
        except KeyError as exc:
            raise InvalidVertexError(f"arc references unknown vertex {exc.args[0]!r}") from None
        return cls(len(names), id_arcs, names)

    def __eq__(self, other):
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return self.n == other.n and self.names == other.names and self.arcs == other.arcs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.names, self.arcs))
        return self._hash

    def __repr__(self):
        return f"OrientedGraph(n={self.n}, arcs={sorted(self.arcs)})"

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    # neighborhoods
    def out_neighbors(self, v: int) -> frozenset:
        return self._out[self._check(v)]

    def in_neighbors(self, v: int) -> frozenset:
        return self._in[self._check(v)]

    def closed_out_neighbors(self, v: int) -> frozenset:
        return self.out_neighbors(v) | {v}

    def closed_in_neighbors(self, v: int) -> frozenset:
        return self.in_neighbors(v) | {v}

    def neighbors(self, v: int) -> frozenset:
        """Direction-blind open neighborhood N(v) = N+(v) | N-(v)."""
        return self._out[self._check(v)] | self._in[v]

    def closed_neighbors(self, v: int) -> frozenset:
        return self.neighbors(v) | {v}

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sources(self) -> frozenset:
        return frozenset(v for v in range(self.n) if not self._in[v])

    def sinks(self) -> frozenset:
        return frozenset(v for v in range(self.n) if not self._out[v])

    def dominating_vertex(self) -> Optional[int]:
        """Smallest v with N+[v] = V, or None."""
        for v in range(self.n):
            if len(self._out[v]) == self.n - 1:
                return v
        return None

    def underlying(self) -> "UndirectedGraph":
        return UndirectedGraph(self.n, self.arcs, self.names)

    def is_strongly_connected(self) -> bool:
        if self.n == 0:
            return True
        return (
            len(_reach(self._out, 0)) == self.n
            and len(_reach(self._in, 0)) == self.n
        )

    def delete_vertex(self, v: int) -> tuple["OrientedGraph", dict]:
        """Return ``(G - v, old_id -> new_id)``."""
        self._check(v)
        mapping = {u: (u if u < v else u - 1) for u in range(self.n) if u != v}
        arcs = [(mapping[a], mapping[b]) for a, b in self.arcs if v not in (a, b)]
        names = [self.names[u] for u in range(self.n) if u != v]
        return OrientedGraph(self.n - 1, arcs, names), mapping


class UndirectedGraph(_Graph):
    """Finite simple undirected graph."""

    __slots__ = ("edges", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), names: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = int(n)
        self.names = _normalize_names(self.n, names)
        self._index = {name: i for i, name in enumerate(self.names)}
        adj = [set() for _ in range(self.n)]
        edge_set = set()
        for u, v in edges:
            u, v = self._check(int(u)), self._check(int(v))
            if u == v:
                raise LoopError(f"loop at vertex {self.names[u]!r}")
            edge_set.add((min(u, v), max(u, v)))
            adj[u].add(v)
            adj[v].add(u)
        self.edges = frozenset(edge_set)
        self._adj = tuple(frozenset(s) for s in adj)
        self._hash = None

    @classmethod
    def from_names(cls, vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> "UndirectedGraph":
        names = _normalize_names(len(vertices), vertices)
        index = {name: i for i, name in enumerate(names)}
        try:
            id_edges = [(index[str(u)], index[str(v)]) for u, v in edges]
        except KeyError as exc:
            raise InvalidVertexError(f"edge references unknown vertex {exc.args[0]!r}") from None
        return cls(len(names), id_edges, names)

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.names == other.names and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.names, self.edges))
        return self._hash

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, edges={sorted(self.edges)})"

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[self._check(v)]

    def closed_neighbors(self, v: int) -> frozenset:
        return self._adj[self._check(v)] | {v}

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def underlying(self) -> "UndirectedGraph":
        return self

    def delete_vertex(self, v: int) -> tuple["UndirectedGraph", dict]:
        self._check(v)
        mapping = {u: (u if u < v else u - 1) for u in range(self.n) if u != v}
        edges = [(mapping[a], mapping[b]) for a, b in self.edges if v not in (a, b)]
        names = [self.names[u] for u in range(self.n) if u != v]
        return UndirectedGraph(self.n - 1, edges, names), mapping


def _reach(adj: Sequence[frozenset], start: int) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def underlying(g) -> UndirectedGraph:
    return g.underlying()


def is_connected(g) -> bool:
    """Connectivity of the underlying graph (weak connectivity for digraphs)."""
    h = g.underlying()
    if h.n == 0:
        return True
    return len(_reach(h._adj, 0)) == h.n


def is_strongly_connected(g: OrientedGraph) -> bool:
    return g.is_strongly_connected()


def is_triangle_free(g) -> bool:
    h = g.underlying()
    for u, v in h.edges:
        if h._adj[u] & h._adj[v]:
            return False
    return True


def is_tree(g) -> bool:
    h = g.underlying()
    return h.n >= 1 and len(h.edges) == h.n - 1 and is_connected(h)


def is_bipartite(g) -> bool:
    h = g.underlying()
    color = [-1] * h.n
    for s in range(h.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in h._adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def degeneracy(g) -> int:
    """Largest minimum degree seen while repeatedly peeling a min-degree vertex."""
    h = g.underlying()
    deg = {v: len(h._adj[v]) for v in range(h.n)}
    alive = set(range(h.n))
    best = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        alive.remove(v)
        for w in h._adj[v]:
            if w in alive:
                deg[w] -= 1
    return best


def domination_number(g, cap: int = DOMINATION_VERTEX_CAP) -> int:
    """Size of a minimum dominating set by increasing-size subset search.

    Exponential in ``n``; graphs with more than `cap` vertices raise
    `ResourceLimitError`.
    """
    h = g.underlying()
    if h.n > cap:
        raise ResourceLimitError(f"domination search limited to {cap} vertices, got {h.n}")
    if h.n == 0:
        return 0
    closed = [(1 << v) | sum(1 << w for w in h._adj[v]) for v in range(h.n)]
    full = (1 << h.n) - 1
    for size in range(1, h.n + 1):
        for subset in combinations(range(h.n), size):
            covered = 0
            for v in subset:
                covered |= closed[v]
            if covered == full:
                return size
    return h.n  # unreachable: V dominates itself
