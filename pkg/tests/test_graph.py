import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import oriented_graphs, undirected_graphs
from oracles import bfs_reach
from oriented_pursuit import generators as gen
from oriented_pursuit.errors import (
    AntiParallelArcError,
    DuplicateVertexError,
    InvalidVertexError,
    LoopError,
    ResourceLimitError,
)
from oriented_pursuit.graph import (
    OrientedGraph,
    UndirectedGraph,
    degeneracy,
    domination_number,
    is_bipartite,
    is_connected,
    is_tree,
    is_triangle_free,
)
from oriented_pursuit.subdivisions import strong_subdivide


def test_out_neighbors(arc, dc3):
    assert arc.out_neighbors(0) == {1}
    assert arc.out_neighbors(1) == set()
    assert dc3.out_neighbors(2) == {0}


def test_neighborhood_variants(dc3):
    assert dc3.in_neighbors(0) == {2}
    assert dc3.closed_out_neighbors(0) == {0, 1}
    assert dc3.closed_in_neighbors(0) == {0, 2}
    assert dc3.neighbors(0) == {1, 2}
    assert dc3.closed_neighbors(0) == {0, 1, 2}


def test_out_of_range_vertex(arc):
    with pytest.raises(InvalidVertexError):
        arc.out_neighbors(2)
    with pytest.raises(InvalidVertexError):
        arc.in_neighbors(-1)


def test_construction_rejects_loops_and_antiparallel_pairs():
    with pytest.raises(LoopError):
        OrientedGraph(2, [(1, 1)])
    with pytest.raises(AntiParallelArcError):
        OrientedGraph(2, [(0, 1), (1, 0)])
    with pytest.raises(DuplicateVertexError):
        OrientedGraph(2, [], ["a", "a"])
    with pytest.raises(InvalidVertexError):
        OrientedGraph.from_names(["a"], [("a", "b")])


def test_parallel_same_direction_arcs_collapse():
    g = OrientedGraph(2, [(0, 1), (0, 1)])
    assert g.arcs == {(0, 1)}


def test_underlying():
    dc3 = gen.directed_cycle(3)
    assert dc3.underlying().edges == gen.complete(3).edges
    assert OrientedGraph(2, [(0, 1)]).underlying().edges == {(0, 1)}
    assert OrientedGraph(2).underlying().edges == frozenset()


def test_underlying_preserves_names(transitive):
    assert transitive.underlying().names == ("u", "v", "w")


def test_connectivity():
    assert is_connected(gen.path(3))
    assert not gen.directed_path(3).is_strongly_connected()
    assert gen.directed_cycle(3).is_strongly_connected()


def test_strong_subdivision_of_triangle_is_strongly_connected():
    s = strong_subdivide(gen.complete(3), 2).graph
    arcs = sorted(s.arcs)
    assert all(len(bfs_reach(s.n, arcs, v)) == s.n for v in range(s.n))
    assert all(len(bfs_reach(s.n, arcs, v, reverse=True)) == s.n for v in range(s.n))
    assert s.is_strongly_connected()


def test_triangle_free():
    assert is_triangle_free(gen.cycle(4))
    assert not is_triangle_free(gen.complete(3))
    pete = gen.petersen()
    brute = not any(
        pete.has_edge(a, b) and pete.has_edge(b, c) and pete.has_edge(a, c)
        for a in range(10) for b in range(a + 1, 10) for c in range(b + 1, 10)
    )
    assert brute and is_triangle_free(pete)


def test_tree():
    assert is_tree(gen.path(4))
    assert not is_tree(gen.cycle(4))
    assert is_tree(gen.star(5))


def test_degeneracy():
    assert degeneracy(gen.path(5)) == 1
    assert degeneracy(gen.cycle(5)) == 2
    for g in (gen.complete(2), gen.complete(3), gen.paw(), gen.cycle(5), gen.complete(5)):
        assert degeneracy(strong_subdivide(g, 2).graph) == 2


def test_bipartite():
    assert is_bipartite(gen.cycle(4))
    assert not is_bipartite(gen.cycle(5))
    s = strong_subdivide(gen.complete(3), 2)
    # originals on one side, path midpoints on the other
    for u, v in s.graph.arcs:
        assert s.roles[u].is_original != s.roles[v].is_original
    assert is_bipartite(s.graph)


def test_dominating_vertex(transitive, dc3, arc):
    assert transitive.dominating_vertex() == transitive.index("u")
    assert dc3.dominating_vertex() is None
    assert arc.dominating_vertex() == 0


def test_sources_and_sinks(dc3):
    p = gen.directed_path(3)
    assert p.sources() == {0} and p.sinks() == {2}
    assert dc3.sources() == set() and dc3.sinks() == set()
    lone = OrientedGraph(1)
    assert lone.sources() == {0} and lone.sinks() == {0}


def test_domination_number():
    assert domination_number(gen.complete(3)) == 1
    c4 = gen.cycle(4)
    assert not any(c4.closed_neighbors(v) == set(range(4)) for v in range(4))
    assert domination_number(c4) == 2
    assert domination_number(gen.star(5)) == 1
    with pytest.raises(ResourceLimitError):
        domination_number(gen.path(30))


def test_delete_vertex_recompacts_ids(transitive):
    h, mapping = transitive.delete_vertex(transitive.index("v"))
    assert h.names == ("u", "w")
    assert h.arcs == {(0, 1)}
    assert mapping == {0: 0, 2: 1}


@given(oriented_graphs())
def test_no_vertex_is_both_in_and_out_neighbor(g):
    for v in g.vertices():
        assert not g.out_neighbors(v) & g.in_neighbors(v)


@given(oriented_graphs())
def test_underlying_has_one_edge_per_arc(g):
    assert len(g.underlying().edges) == len(g.arcs)


@settings(max_examples=60)
@given(undirected_graphs(min_n=2))
def test_predicates_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    assert is_connected(g) == nx.is_connected(h)
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert is_tree(g) == nx.is_tree(h)
    assert is_triangle_free(g) == (sum(nx.triangles(h).values()) == 0)
    assert degeneracy(g) == max(nx.core_number(h).values())


@settings(max_examples=30)
@given(undirected_graphs(min_n=2, max_n=7))
def test_trees_are_one_degenerate(g):
    if is_tree(g):
        assert degeneracy(g) == 1
