"""Graph families, seeded random instances and exhaustive labeled enumeration.

Random families draw from numpy's PCG64 generator seeded with the spec's
64-bit seed, so a ``(family, n, seed)`` triple always yields the same graph.
"""
from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Union

import numpy as np

from .errors import InvalidParameterError, ResourceLimitError
from .graph import OrientedGraph, UndirectedGraph, is_connected
from .io import dumps

ENUMERATION_CAP = {False: 7, True: 5}


class Family(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    RANDOM_TREE = "random-tree"
    RANDOM_GRAPH = "random-graph"
    RANDOM_BIPARTITE = "random-bipartite"
    TOURNAMENT = "tournament"
    RANDOM_ORIENTATION = "random-orientation"


@dataclass(frozen=True)
class GeneratorSpec:
    family: Family
    n: int
    seed: int = 0
    p: float = 0.5
    of: Optional["GeneratorSpec"] = None  # base family for RANDOM_ORIENTATION

    def __post_init__(self):
        if not isinstance(self.family, Family):
            try:
                object.__setattr__(self, "family", Family(self.family))
            except ValueError:
                raise InvalidParameterError(f"unknown family {self.family!r}") from None
        if self.n < 2:
            raise InvalidParameterError(f"n must be at least 2, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidParameterError(f"p must lie in [0, 1], got {self.p}")
        if not 0 <= self.seed < 2**64:
            raise InvalidParameterError("seed must be a 64-bit unsigned integer")
        if self.family is Family.RANDOM_ORIENTATION:
            if self.of is None:
                raise InvalidParameterError("random orientation needs a base spec")
            if self.of.family in (Family.TOURNAMENT, Family.RANDOM_ORIENTATION):
                raise InvalidParameterError("random orientation needs an undirected base")

    def to_dict(self) -> dict:
        data = {"family": self.family.value, "n": self.n, "seed": self.seed, "p": self.p}
        if self.of is not None:
            data["of"] = self.of.to_dict()
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "GeneratorSpec":
        of = data.get("of")
        return cls(
            Family(data["family"]),
            int(data["n"]),
            int(data.get("seed", 0)),
            float(data.get("p", 0.5)),
            cls.from_dict(of) if of is not None else None,
        )


def _prufer_tree(n: int, rng) -> list[tuple[int, int]]:
    if n == 2:
        return [(0, 1)]
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return edges


def generate(spec: GeneratorSpec) -> Union[UndirectedGraph, OrientedGraph]:
    n = spec.n
    rng = np.random.default_rng(spec.seed)
    f = spec.family
    if f is Family.PATH:
        return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])
    if f is Family.CYCLE:
        if n < 3:
            raise InvalidParameterError("a simple cycle needs n >= 3")
        return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])
    if f is Family.COMPLETE:
        return UndirectedGraph(n, combinations(range(n), 2))
    if f is Family.STAR:
        return UndirectedGraph(n, [(0, i) for i in range(1, n)])
    if f is Family.RANDOM_TREE:
        return UndirectedGraph(n, _prufer_tree(n, rng))
    if f is Family.RANDOM_GRAPH:
        pairs = list(combinations(range(n), 2))
        keep = rng.random(len(pairs)) < spec.p
        return UndirectedGraph(n, [e for e, k in zip(pairs, keep) if k])
    if f is Family.RANDOM_BIPARTITE:
        half = n // 2
        pairs = [(u, v) for u in range(half) for v in range(half, n)]
        keep = rng.random(len(pairs)) < spec.p
        return UndirectedGraph(n, [e for e, k in zip(pairs, keep) if k])
    if f is Family.TOURNAMENT:
        return _orient(UndirectedGraph(n, combinations(range(n), 2)), rng)
    base = generate(spec.of)
    return _orient(base, rng)


def _orient(g: UndirectedGraph, rng) -> OrientedGraph:
    edges = g.sorted_edges()
    flips = rng.integers(0, 2, size=len(edges))
    arcs = [(v, u) if flip else (u, v) for (u, v), flip in zip(edges, flips)]
    return OrientedGraph(g.n, arcs, g.names)


def sha256_of(g) -> str:
    return hashlib.sha256(dumps(g).encode("utf-8")).hexdigest()


def enumerate_connected(n: int, oriented: bool = False) -> Iterator:
    """Every connected graph on labeled vertices ``0..n-1`` exactly once.

    Order: edge subsets by increasing bitmask over the lexicographic pair
    list, then (oriented) orientations by increasing flip mask.
    """
    cap = ENUMERATION_CAP[bool(oriented)]
    if n > cap:
        raise ResourceLimitError(f"enumeration capped at n <= {cap} for oriented={oriented}")
    if n < 1:
        return
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = UndirectedGraph(n, edges)
        if not is_connected(g):
            continue
        if not oriented:
            yield g
            continue
        for flips in range(1 << len(edges)):
            arcs = [(v, u) if flips >> i & 1 else (u, v) for i, (u, v) in enumerate(edges)]
            yield OrientedGraph(n, arcs)


# named instances

def path(n: int) -> UndirectedGraph:
    return generate(GeneratorSpec(Family.PATH, n))


def cycle(n: int) -> UndirectedGraph:
    return generate(GeneratorSpec(Family.CYCLE, n))


def complete(n: int) -> UndirectedGraph:
    return generate(GeneratorSpec(Family.COMPLETE, n))


def star(leaves: int) -> UndirectedGraph:
    return generate(GeneratorSpec(Family.STAR, leaves + 1))


def paw() -> UndirectedGraph:
    """Triangle 0-1-2 with a pendant vertex 3 on 0."""
    return UndirectedGraph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def petersen() -> UndirectedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return UndirectedGraph(10, outer + spokes + inner)


def directed_cycle(n: int) -> OrientedGraph:
    return OrientedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def directed_path(n: int) -> OrientedGraph:
    return OrientedGraph(n, [(i, i + 1) for i in range(n - 1)])


def transitive_triangle() -> OrientedGraph:
    """u -> v, u -> w, v -> w."""
    return OrientedGraph.from_names(["u", "v", "w"], [("u", "v"), ("u", "w"), ("v", "w")])
