"""Theorem checks over graph corpora.

Every check recomputes cop numbers with the exact solver and compares them
with a proved relation.  The relations are theorems, so a failing check
points at a bug in this toolkit, not in the mathematics.
"""
from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union

from . import generators as gen
from .errors import PursuitError, ResourceLimitError
from .game import DEFAULT_ARENA_CAP, MoveModel, cop_number
from .graph import (
    OrientedGraph,
    UndirectedGraph,
    degeneracy,
    is_bipartite,
    is_connected,
    is_tree,
    is_triangle_free,
)
from .io import graph_to_dict, load
from .retracts import RetractKind, apply_retract, find_retract, reduce
from .subdivisions import check_projection_observation, strong_subdivide, weak_subdivide

CORPUS_ENV = "ORIENTED_PURSUIT_CORPUS"
SUBDIVISION_MAX_K = 3

S, N, W, U = MoveModel.STRONG_COP, MoveModel.NORMAL_COP, MoveModel.WEAK_COP, MoveModel.UNDIRECTED


@dataclass
class CheckResult:
    id: str
    status: str = "pass"  # pass | fail | skip
    instances: int = 0
    skipped: int = 0
    witness: Optional[dict] = None

    def passed(self) -> None:
        self.instances += 1

    def fail(self, witness: dict) -> None:
        self.instances += 1
        if self.status != "fail":
            self.status = "fail"
            self.witness = witness

    def skip(self, witness: Optional[dict] = None) -> None:
        self.instances += 1
        self.skipped += 1
        if self.status == "pass":
            self.status = "skip"
            self.witness = witness

    def to_dict(self) -> dict:
        data = {"check": self.id, "status": self.status, "instances": self.instances}
        if self.skipped:
            data["skipped"] = self.skipped
        if self.witness is not None:
            data["witness"] = self.witness
        return data


class Oracle:
    """Memoising front end to the solver shared by all checks of a run."""

    def __init__(
        self,
        arena_cap: int = DEFAULT_ARENA_CAP,
        max_k: Optional[int] = None,
        timeout_seconds: Optional[float] = None,
        capture_on_robber_move: bool = True,
    ):
        self.arena_cap = arena_cap
        self.max_k = max_k
        self.timeout_seconds = timeout_seconds
        self.capture_on_robber_move = capture_on_robber_move
        self._cache: dict = {}
        self.subdivisions: list = []

    def cop_number(self, g, model: MoveModel, max_k: Optional[int] = None) -> int:
        if self.max_k is not None:
            max_k = self.max_k if max_k is None else min(max_k, self.max_k)
        key = (g, model)
        hit = self._cache.get(key)
        if hit is not None:
            if isinstance(hit, tuple):  # a lower bound from an earlier capped search
                if max_k is not None and hit[0] > max_k:
                    raise ResourceLimitError(f"cop number exceeds {max_k}")
            else:
                return hit
        deadline = None
        if self.timeout_seconds is not None:
            deadline = time.monotonic() + self.timeout_seconds
        try:
            value = cop_number(
                g, model, max_k=max_k, arena_cap=self.arena_cap, deadline=deadline,
                capture_on_robber_move=self.capture_on_robber_move,
            )
        except ResourceLimitError:
            if max_k is not None:
                self._cache[key] = (max_k + 1,)
            raise
        self._cache[key] = value
        return value

    def c(self, g: UndirectedGraph, max_k=None) -> int:
        return self.cop_number(g, U, max_k)

    def chain(self, g: OrientedGraph, max_k=None) -> tuple:
        return tuple(self.cop_number(g, m, max_k) for m in (S, N, W))

    def strong_subdivision(self, g: UndirectedGraph, t: int):
        r = strong_subdivide(g, t)
        self.subdivisions.append(r)
        return r

    def weak_subdivision(self, g: OrientedGraph, t: int):
        r = weak_subdivide(g, t)
        self.subdivisions.append(r)
        return r


def corner_copwin(g: UndirectedGraph) -> bool:
    """Classical cop-win test by corner dismantling (connected graphs)."""
    residue, _ = reduce(g, RetractKind.CORNER)
    return residue.n <= 1


def _many(x) -> list:
    if isinstance(x, (OrientedGraph, UndirectedGraph, int)):
        return [x]
    return list(x)


def _gjson(g) -> dict:
    return graph_to_dict(g)


def check_eq1(corpus, oracle: Optional[Oracle] = None) -> CheckResult:
    """c_s <= c_n <= c_w on every oriented graph."""
    oracle = oracle or Oracle()
    res = CheckResult("model-chain")
    for g in _many(corpus):
        try:
            cs, cn, cw = oracle.chain(g)
        except ResourceLimitError:
            res.skip({"graph": _gjson(g)})
            continue
        if cs <= cn <= cw <= g.n:
            res.passed()
        else:
            res.fail({"graph": _gjson(g), "c_s": cs, "c_n": cn, "c_w": cw})
    return res


_RETRACT_CHECK = {
    RetractKind.STRONG: ("strong-retract-invariance", S),
    RetractKind.DISTRIBUTED: ("distributed-retract-invariance", N),
    RetractKind.WEAK: ("weak-retract-copwin", W),
}


def check_retract_invariance(corpus, kind, oracle: Optional[Oracle] = None) -> CheckResult:
    """Cop number preserved by a retract of the matching kind.

    Strong retracts preserve c_s and distributed retracts c_n exactly; weak
    retracts preserve only whether one weak cop wins.
    """
    oracle = oracle or Oracle()
    kind = RetractKind.parse(kind)
    check_id, model = _RETRACT_CHECK[kind]
    res = CheckResult(check_id)
    for g in _many(corpus):
        w = find_retract(g, kind)
        if w is None:
            continue
        h, _ = apply_retract(g, w)
        try:
            before, after = oracle.cop_number(g, model), oracle.cop_number(h, model)
        except ResourceLimitError:
            res.skip({"graph": _gjson(g)})
            continue
        ok = (before == 1) == (after == 1) if kind is RetractKind.WEAK else before == after
        if ok:
            res.passed()
        else:
            res.fail({
                "graph": _gjson(g), "witness": w.to_dict(g),
                f"c_{model.value}": before, f"c_{model.value}_retract": after,
            })
    return res


def check_not_copwin(corpus, oracle: Optional[Oracle] = None) -> CheckResult:
    """Graphs meeting the escape condition need at least two normal cops."""
    from .retracts import not_copwin_condition

    oracle = oracle or Oracle()
    res = CheckResult("not-copwin-condition")
    for g in _many(corpus):
        if not g.arcs or not not_copwin_condition(g):
            continue
        try:
            cn = oracle.cop_number(g, N, max_k=2)
        except ResourceLimitError:
            cn = 3  # more than two cops needed: still >= 2
        if cn >= 2:
            res.passed()
        else:
            res.fail({"graph": _gjson(g), "c_n": cn})
    return res


def check_strong_subdiv_bounds(graphs, ts=(2, 3), oracle: Optional[Oracle] = None) -> CheckResult:
    """c(G) <= c_s(S_t(G)) <= c_n(S_t(G)) <= c(G) + 1."""
    oracle = oracle or Oracle()
    res = CheckResult("strong-subdivision-bounds")
    for g in _many(graphs):
        for t in _many(ts):
            s = oracle.strong_subdivision(g, t).graph
            try:
                c = oracle.c(g)
                cs = oracle.cop_number(s, S, max_k=SUBDIVISION_MAX_K)
                cn = oracle.cop_number(s, N, max_k=SUBDIVISION_MAX_K)
            except ResourceLimitError:
                res.skip({"graph": _gjson(g), "t": t})
                continue
            if c <= cs <= cn <= c + 1:
                res.passed()
            else:
                res.fail({"graph": _gjson(g), "t": t, "c": c, "c_s": cs, "c_n": cn})
    return res


def check_weak_cop_bound_s2(graphs, oracle: Optional[Oracle] = None) -> CheckResult:
    """c(G) <= c_w(S_2(G)) <= c(G) + 2."""
    oracle = oracle or Oracle()
    res = CheckResult("weak-cop-strong-subdivision-bound")
    for g in _many(graphs):
        s = oracle.strong_subdivision(g, 2).graph
        try:
            c = oracle.c(g)
            cw = oracle.cop_number(s, W, max_k=c + 3)
        except ResourceLimitError:
            res.skip({"graph": _gjson(g)})
            continue
        if c <= cw <= c + 2:
            res.passed()
        else:
            res.fail({"graph": _gjson(g), "c": c, "c_w": cw})
    return res


def check_triangle_free_equality(graphs, ts=(2, 3), oracle: Optional[Oracle] = None) -> CheckResult:
    """c(G) = c_s(S_t(G)) for triangle-free G; other graphs are ignored."""
    oracle = oracle or Oracle()
    res = CheckResult("triangle-free-equality")
    for g in _many(graphs):
        if not is_triangle_free(g):
            continue
        for t in _many(ts):
            s = oracle.strong_subdivision(g, t).graph
            try:
                c = oracle.c(g)
                cs = oracle.cop_number(s, S, max_k=SUBDIVISION_MAX_K)
            except ResourceLimitError:
                res.skip({"graph": _gjson(g), "t": t})
                continue
            if c == cs:
                res.passed()
            else:
                res.fail({"graph": _gjson(g), "t": t, "c": c, "c_s": cs})
    return res


def check_tree_characterization(graphs, ts=(2,), oracle: Optional[Oracle] = None) -> CheckResult:
    """One strong cop wins on S_t(G) exactly when G is a tree."""
    oracle = oracle or Oracle()
    res = CheckResult("tree-characterization")
    for g in _many(graphs):
        for t in _many(ts):
            s = oracle.strong_subdivision(g, t).graph
            try:
                win = oracle.cop_number(s, S, max_k=1) == 1
            except ResourceLimitError:
                win = False
            if win == is_tree(g):
                res.passed()
            else:
                res.fail({"graph": _gjson(g), "t": t, "strong_copwin": win, "tree": is_tree(g)})
    return res


def check_copwin_triangle_claim(graphs, oracle: Optional[Oracle] = None) -> CheckResult:
    """Cop-win non-trees contain a triangle.

    Cop-win is decided twice, by the solver and by corner dismantling; any
    disagreement is itself a failure.
    """
    oracle = oracle or Oracle()
    res = CheckResult("copwin-triangle")
    for g in _many(graphs):
        try:
            solver_win = oracle.c(g, max_k=1) == 1
        except ResourceLimitError:
            solver_win = False
        dismantle_win = corner_copwin(g) if is_connected(g) else solver_win
        if solver_win != dismantle_win:
            res.fail({"graph": _gjson(g), "solver_copwin": solver_win, "dismantlable": dismantle_win})
            continue
        if solver_win and not is_tree(g) and is_triangle_free(g):
            res.fail({"graph": _gjson(g), "copwin": True, "tree": False, "triangle_free": True})
            continue
        res.passed()
    return res


def check_weak_subdiv_monotone(corpus, ts=(2, 3), oracle: Optional[Oracle] = None) -> CheckResult:
    """Each of c_s, c_n, c_w of W_t(G) is at least the value on G."""
    oracle = oracle or Oracle()
    res = CheckResult("weak-subdivision-monotone")
    for g in _many(corpus):
        for t in _many(ts):
            w = oracle.weak_subdivision(g, t).graph
            try:
                before = oracle.chain(g)
                after = tuple(oracle.cop_number(w, m) for m in (S, N, W))
            except ResourceLimitError:
                res.skip({"graph": _gjson(g), "t": t})
                continue
            if all(a >= b for a, b in zip(after, before)):
                res.passed()
            else:
                res.fail({"graph": _gjson(g), "t": t, "original": before, "subdivided": after})
    return res


def check_projection_observations(results) -> CheckResult:
    res = CheckResult("projection-observations")
    for r in results:
        if check_projection_observation(r):
            res.passed()
        else:
            res.fail({"kind": r.kind.value, "t": r.t, "source": _gjson(r.source)})
    return res


def check_subdivision_structure(graphs) -> CheckResult:
    """S_2(G) has a bipartite, 2-degenerate underlying graph, strongly connected for connected G."""
    res = CheckResult("subdivision-structure")
    for g in _many(graphs):
        if not g.edges:
            continue
        s = strong_subdivide(g, 2).graph
        h = s.underlying()
        ok = is_bipartite(h) and degeneracy(h) <= 2
        if is_connected(g):
            ok = ok and s.is_strongly_connected()
        if ok:
            res.passed()
        else:
            res.fail({"graph": _gjson(g), "bipartite": is_bipartite(h), "degeneracy": degeneracy(h)})
    return res


def _undirected_subdivide(g: UndirectedGraph, t: int) -> UndirectedGraph:
    edges, n = [], g.n
    for u, v in g.sorted_edges():
        prev = u
        for _ in range(t - 1):
            edges.append((prev, n))
            prev, n = n, n + 1
        edges.append((prev, v))
    return UndirectedGraph(n, edges)


def check_undirected_subdivision_probe(graphs, ts=(2, 3), oracle: Optional[Oracle] = None) -> CheckResult:
    """Experimental: equal-length subdivision of a triangle-free graph keeps c(G)."""
    oracle = oracle or Oracle()
    res = CheckResult("undirected-subdivision-probe")
    for g in _many(graphs):
        if not is_triangle_free(g):
            continue
        for t in _many(ts):
            try:
                before = oracle.c(g)
                after = oracle.c(_undirected_subdivide(g, t), max_k=SUBDIVISION_MAX_K)
            except ResourceLimitError:
                res.skip({"graph": _gjson(g), "t": t})
                continue
            if before == after:
                res.passed()
            else:
                res.fail({"graph": _gjson(g), "t": t, "c": before, "c_subdivided": after})
    return res


# corpus

@dataclass
class Corpus:
    named_undirected: list = field(default_factory=list)
    random_undirected: list = field(default_factory=list)
    named_oriented: list = field(default_factory=list)
    random_oriented: list = field(default_factory=list)
    retract_instances: list = field(default_factory=list)
    undirected_max_n: int = 0
    tree_max_n: int = 0
    oriented_max_n: int = 0

    @property
    def empty(self) -> bool:
        lists = (self.named_undirected, self.random_undirected, self.named_oriented,
                 self.random_oriented, self.retract_instances)
        return not any(lists) and max(self.undirected_max_n, self.tree_max_n, self.oriented_max_n) < 2

    def connected_undirected(self, max_n: int) -> list:
        return [g for n in range(2, max_n + 1) for g in gen.enumerate_connected(n)]

    def connected_oriented(self, max_n: int) -> list:
        return [g for n in range(2, max_n + 1) for g in gen.enumerate_connected(n, oriented=True)]


def default_corpus_dir() -> Path:
    env = os.environ.get(CORPUS_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("oriented_pursuit") / "corpus"))


class ManifestError(PursuitError):
    pass


def load_manifest(path: Union[str, Path]) -> Corpus:
    """Read a corpus manifest, checking each fixture file against its sha256."""
    path = Path(path)
    if path.is_dir():
        path = path / "manifest.json"
    data = json.loads(path.read_text(encoding="utf-8"))
    corpus = Corpus()
    enum_ = data.get("enumerations", {})
    corpus.undirected_max_n = int(enum_.get("undirected_max_n", 0))
    corpus.tree_max_n = int(enum_.get("tree_max_n", 0))
    corpus.oriented_max_n = int(enum_.get("oriented_max_n", 0))
    groups = {
        "named": (corpus.named_undirected, corpus.named_oriented),
        "random": (corpus.random_undirected, corpus.random_oriented),
        "retract": (None, corpus.retract_instances),
    }
    for entry in data.get("entries", []):
        file = path.parent / entry["file"]
        g = load(file)
        digest = gen.sha256_of(g)
        if entry.get("sha256") and entry["sha256"] != digest:
            raise ManifestError(f"{file}: sha256 mismatch")
        und, ori = groups[entry.get("group", "named")]
        target = ori if isinstance(g, OrientedGraph) else und
        if target is None:
            raise ManifestError(f"{file}: group {entry.get('group')!r} takes oriented graphs only")
        target.append(g)
    return corpus


@dataclass
class Report:
    results: list

    @property
    def failed(self) -> bool:
        return any(r.status == "fail" for r in self.results)

    def to_json_lines(self) -> str:
        return "".join(json.dumps(r.to_dict(), sort_keys=False) + "\n" for r in self.results)

    def summary(self) -> str:
        width = max((len(r.id) for r in self.results), default=5)
        lines = [f"{'check':<{width}}  status  instances  skipped"]
        for r in self.results:
            lines.append(f"{r.id:<{width}}  {r.status:<6}  {r.instances:>9}  {r.skipped:>7}")
        return "\n".join(lines) + "\n"


def run_all(corpus: Union[Corpus, str, Path, None], probe: bool = False, oracle: Optional[Oracle] = None) -> Report:
    """Run every check; report order is fixed regardless of corpus contents."""
    if corpus is None:
        corpus = default_corpus_dir()
    if not isinstance(corpus, Corpus):
        corpus = load_manifest(corpus)
    if corpus.empty:
        return Report([])
    oracle = oracle or Oracle()
    oriented = corpus.connected_oriented(corpus.oriented_max_n) + corpus.named_oriented + corpus.random_oriented
    small_oriented = corpus.connected_oriented(corpus.oriented_max_n) + corpus.named_oriented
    named = corpus.named_undirected
    all_und = corpus.connected_undirected(corpus.undirected_max_n)
    trees = corpus.connected_undirected(corpus.tree_max_n)

    results = [
        check_eq1(oriented, oracle),
        check_retract_invariance(small_oriented + corpus.retract_instances, RetractKind.STRONG, oracle),
        check_retract_invariance(small_oriented + corpus.retract_instances, RetractKind.DISTRIBUTED, oracle),
        check_retract_invariance(oriented, RetractKind.WEAK, oracle),
        check_not_copwin(oriented + corpus.retract_instances, oracle),
        check_strong_subdiv_bounds(named, (2, 3), oracle),
        check_weak_cop_bound_s2(named, oracle),
        check_triangle_free_equality(named + corpus.random_undirected, (2, 3), oracle),
        check_tree_characterization(trees + named, (2,), oracle),
        check_tree_characterization(named, (3,), oracle),
        check_copwin_triangle_claim(all_und + named, oracle),
        check_weak_subdiv_monotone(small_oriented, (2, 3), oracle),
    ]
    results[9].id = "tree-characterization-t3"
    results.append(check_projection_observations(oracle.subdivisions))
    results.append(check_subdivision_structure(all_und + named + corpus.random_undirected))
    if probe:
        results.append(check_undirected_subdivision_probe(named, (2, 3), oracle))
    return Report(results)
