"""Command-line interface: ``oriented-pursuit <command> ...``.

Output is JSON on stdout unless ``--human`` is given.  Exit codes: 0 ok,
1 failed verification or a lost game under ``--expect-win``, 2 usage or
input error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import generators as gen
from .errors import GraphError, InvalidParameterError, PursuitError, ResourceLimitError
from .game import DEFAULT_ARENA_CAP, GameSpec, MoveModel, cop_number, extract_strategy, solve
from .graph import (
    OrientedGraph,
    degeneracy,
    is_bipartite,
    is_connected,
    is_tree,
    is_triangle_free,
)
from .io import dumps, graph_to_dict, load, to_dot
from .retracts import RetractKind, find_retract, not_copwin_condition, reduce, reduction_records
from .subdivisions import strong_subdivide, weak_subdivide
from .verify import Oracle, default_corpus_dir, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj, human: bool, text: Optional[str] = None) -> None:
    if human and text is not None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _load(args):
    try:
        return load(args.graph, directed=not args.undirected)
    except OSError as exc:
        raise GraphError(f"cannot read {args.graph}: {exc.strerror or exc}") from None


def _solver_options(args) -> dict:
    opts = {"arena_cap": args.arena_cap}
    if args.timeout_seconds is not None:
        opts["deadline"] = time.monotonic() + args.timeout_seconds
    return opts


def cmd_solve(args) -> int:
    g = _load(args)
    model = MoveModel.parse(args.model)
    if isinstance(g, OrientedGraph) and model is MoveModel.UNDIRECTED:
        g = g.underlying()
    opts = _solver_options(args)
    if args.chain:
        if not isinstance(g, OrientedGraph):
            raise UsageError("--chain needs an oriented graph")
        values = [cop_number(g, m, max_k=args.max_k, **opts) for m in ("strong", "normal", "weak")]
        out = dict(zip(("c_s", "c_n", "c_w"), values))
        _emit(out, args.human, f"c_s = {values[0]}, c_n = {values[1]}, c_w = {values[2]}")
        return EXIT_OK
    if args.number or args.k is None:
        c = cop_number(g, model, max_k=args.max_k, **opts)
        _emit({"cop_number": c}, args.human, f"{model.value} cop number: {c}")
        return EXIT_OK
    spec = GameSpec(g, args.k, model)
    sol = solve(spec, **opts)
    out = {"model": model.value, "k": args.k, "copwin": sol.copwin}
    if sol.copwin:
        out["start"] = [g.names[c] for c in sol.start]
        out["start_rank"] = sol.start_rank
        if args.strategy:
            out["strategy"] = extract_strategy(spec, sol).to_dict()
    text = f"{args.k} {model.value} cop(s): {'win' if sol.copwin else 'lose'}"
    if sol.copwin:
        text += f", place on {out['start']}, capture within {sol.start_rank} round(s)"
    _emit(out, args.human, text)
    if args.expect_win and not sol.copwin:
        return EXIT_FAIL
    return EXIT_OK


def cmd_retract(args) -> int:
    g = _load(args)
    kind = RetractKind.parse(args.kind)
    if args.reduce:
        residue, steps = reduce(g, kind)
        out = {"steps": reduction_records(g, steps), "residue": graph_to_dict(residue)}
        text = f"removed {len(steps)} vertices; residue has {residue.n}"
    else:
        w = find_retract(g, kind)
        out = {"witness": w.to_dict(g) if w else None}
        if isinstance(g, OrientedGraph) and g.arcs:
            out["not_copwin_condition"] = not_copwin_condition(g)
        text = "no retract" if w is None else f"remove {g.names[w.removed]} covered by {[g.names[u] for u in w.covers]}"
    _emit(out, args.human, text)
    return EXIT_OK


def cmd_subdivide(args) -> int:
    g = _load(args)
    if args.strong is not None:
        if isinstance(g, OrientedGraph):
            raise UsageError("--strong takes an undirected graph")
        r = strong_subdivide(g, args.strong)
    else:
        if not isinstance(g, OrientedGraph):
            raise UsageError("--weak takes an oriented graph")
        r = weak_subdivide(g, args.weak)
    if args.dot:
        sys.stdout.write(to_dot(r.graph))
    else:
        _emit(r.to_dict(), args.human, f"{r.graph.n} vertices, {len(r.graph.arcs)} arcs")
    return EXIT_OK


def cmd_generate(args) -> int:
    of = None
    if args.family == gen.Family.RANDOM_ORIENTATION.value:
        of = gen.GeneratorSpec(gen.Family(args.of), args.n, args.seed, args.p)
    spec = gen.GeneratorSpec(gen.Family(args.family), args.n, args.seed, args.p, of)
    g = gen.generate(spec)
    text = dumps(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        _emit({"spec": spec.to_dict(), "file": args.output, "sha256": gen.sha256_of(g)}, False)
    else:
        sys.stdout.write(text + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.manifest is None and not args.default:
        raise UsageError("verify needs a manifest path or --default")
    source = default_corpus_dir() if args.default else args.manifest
    oracle = Oracle(
        arena_cap=args.arena_cap, max_k=args.max_k, timeout_seconds=args.timeout_seconds,
        capture_on_robber_move=not args.mutate_capture,
    )
    report = run_all(source, probe=args.probe, oracle=oracle)
    if args.human:
        sys.stdout.write(report.summary())
    else:
        sys.stdout.write(report.to_json_lines())
    return EXIT_FAIL if report.failed else EXIT_OK


def cmd_info(args) -> int:
    g = _load(args)
    if args.dot:
        sys.stdout.write(to_dot(g))
        return EXIT_OK
    h = g.underlying()
    out = {
        "directed": isinstance(g, OrientedGraph),
        "vertices": g.n,
        "edges": len(h.edges),
        "connected": is_connected(g),
        "tree": is_tree(g),
        "bipartite": is_bipartite(g),
        "triangle_free": is_triangle_free(g),
        "degeneracy": degeneracy(g),
    }
    if isinstance(g, OrientedGraph):
        dom = g.dominating_vertex()
        out.update({
            "strongly_connected": g.is_strongly_connected(),
            "sources": sorted(g.names[v] for v in g.sources()),
            "sinks": sorted(g.names[v] for v in g.sinks()),
            "dominating_vertex": None if dom is None else g.names[dom],
        })
    text = "\n".join(f"{k}: {v}" for k, v in out.items())
    _emit(out, args.human, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oriented-pursuit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="graph file (.json canonical, otherwise edge list)")
        p.add_argument("--undirected", action="store_true", help="read an edge list as undirected")
        p.add_argument("--human", action="store_true")
        return p

    def limits(p):
        p.add_argument("--arena-cap", type=int, default=DEFAULT_ARENA_CAP)
        p.add_argument("--max-k", type=int, default=None)
        p.add_argument("--timeout-seconds", type=float, default=None)

    p = graph_cmd("solve", "decide k-cop win or compute cop numbers")
    p.add_argument("--model", default="normal", choices=[m.value for m in MoveModel])
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("-k", type=int)
    mode.add_argument("--number", action="store_true")
    mode.add_argument("--chain", action="store_true")
    p.add_argument("--strategy", action="store_true", help="include the winning strategy")
    p.add_argument("--expect-win", action="store_true")
    limits(p)
    p.set_defaults(func=cmd_solve)

    p = graph_cmd("retract", "find or exhaustively apply retracts")
    p.add_argument("--kind", required=True, choices=[k.value for k in RetractKind])
    p.add_argument("--reduce", action="store_true")
    p.set_defaults(func=cmd_retract)

    p = graph_cmd("subdivide", "strong or weak t-subdivision")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--strong", type=int, metavar="T")
    which.add_argument("--weak", type=int, metavar="T")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("generate", help="emit a generated graph as canonical JSON")
    p.add_argument("--family", required=True, choices=[f.value for f in gen.Family])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-p", type=float, default=0.5)
    p.add_argument("--of", default="random-graph", help="base family for random-orientation")
    p.add_argument("--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run the verification checks over a corpus")
    p.add_argument("manifest", nargs="?")
    p.add_argument("--default", action="store_true", help="use the bundled corpus, or $ORIENTED_PURSUIT_CORPUS when set")
    p.add_argument("--probe", action="store_true", help="also run experimental probes")
    p.add_argument("--human", action="store_true")
    p.add_argument("--mutate-capture", action="store_true", help=argparse.SUPPRESS)
    limits(p)
    p.set_defaults(func=cmd_verify)

    p = graph_cmd("info", "structural summary of a graph")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, GraphError, InvalidParameterError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PursuitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
