"""Graph file formats: canonical JSON, plain edge lists, DOT export."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import GraphError
from .graph import OrientedGraph, UndirectedGraph

Graph = Union[OrientedGraph, UndirectedGraph]


def graph_to_dict(g: Graph) -> dict:
    names = g.names
    if isinstance(g, OrientedGraph):
        pairs = g.sorted_arcs()
    else:
        pairs = g.sorted_edges()
    return {
        "directed": isinstance(g, OrientedGraph),
        "vertices": list(names),
        "arcs": [[names[u], names[v]] for u, v in pairs],
    }


def graph_from_dict(data: dict) -> Graph:
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    try:
        directed = data["directed"]
        vertices = data["vertices"]
        arcs = data["arcs"]
    except KeyError as exc:
        raise GraphError(f"graph JSON missing key {exc.args[0]!r}") from None
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphError("'vertices' must be a list of names")
    pairs = []
    for arc in arcs:
        if not (isinstance(arc, (list, tuple)) and len(arc) == 2):
            raise GraphError(f"malformed arc {arc!r}")
        pairs.append((str(arc[0]), str(arc[1])))
    cls = OrientedGraph if directed else UndirectedGraph
    return cls.from_names(vertices, pairs)


def dumps(g: Graph) -> str:
    """Canonical JSON text; emit -> parse -> emit is byte-identical."""
    return json.dumps(graph_to_dict(g), ensure_ascii=False)


def loads(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    return graph_from_dict(data)


def parse_edge_list(text: str, directed: bool) -> Graph:
    """One ``u v`` pair per line; ``#`` starts a comment; a lone name adds an isolated vertex."""
    names: list[str] = []
    seen: set[str] = set()
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) > 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        for p in parts:
            if p not in seen:
                seen.add(p)
                names.append(p)
        if len(parts) == 2:
            pairs.append((parts[0], parts[1]))
    cls = OrientedGraph if directed else UndirectedGraph
    return cls.from_names(names, pairs)


def load(path: Union[str, Path], directed: bool = True) -> Graph:
    """Read a graph file. ``.json`` is the canonical format, anything else an edge list."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return loads(text)
    return parse_edge_list(text, directed)


def save(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(g) + "\n", encoding="utf-8")


def to_dot(g: Graph, name: str = "G") -> str:
    directed = isinstance(g, OrientedGraph)
    op = "->" if directed else "--"
    lines = [f"{'digraph' if directed else 'graph'} {json.dumps(name)} {{"]
    for v in g.names:
        lines.append(f"  {json.dumps(v)};")
    pairs = g.sorted_arcs() if directed else g.sorted_edges()
    for u, v in pairs:
        lines.append(f"  {json.dumps(g.names[u])} {op} {json.dumps(g.names[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
