from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oriented_pursuit import generators as gen
from oriented_pursuit.errors import InvalidParameterError, ResourceLimitError
from oriented_pursuit.generators import Family, GeneratorSpec, enumerate_connected, generate
from oriented_pursuit.graph import OrientedGraph, is_triangle_free, is_tree
from oriented_pursuit.io import dumps


def test_cycle():
    assert generate(GeneratorSpec(Family.CYCLE, 4)).edges == {(0, 1), (1, 2), (2, 3), (0, 3)}


def test_tournament_on_three_vertices():
    seen = set()
    for seed in range(20):
        g = generate(GeneratorSpec(Family.TOURNAMENT, 3, seed))
        assert dumps(g) == dumps(generate(GeneratorSpec(Family.TOURNAMENT, 3, seed)))
        seen.add("cyclic" if g.is_strongly_connected() else "transitive")
    assert seen == {"cyclic", "transitive"}


@settings(max_examples=30)
@given(st.integers(2, 12), st.integers(0, 2**64 - 1))
def test_random_tree(n, seed):
    assert is_tree(generate(GeneratorSpec(Family.RANDOM_TREE, n, seed)))


@settings(max_examples=30)
@given(st.integers(2, 10), st.integers(0, 2**32), st.floats(0, 1))
def test_random_bipartite_is_triangle_free(n, seed, p):
    assert is_triangle_free(generate(GeneratorSpec(Family.RANDOM_BIPARTITE, n, seed, p)))


@settings(max_examples=30)
@given(st.sampled_from(list(Family)), st.integers(3, 9), st.integers(0, 2**32))
def test_deterministic(family, n, seed):
    of = GeneratorSpec(Family.RANDOM_GRAPH, n, seed) if family is Family.RANDOM_ORIENTATION else None
    spec = GeneratorSpec(family, n, seed, 0.4, of)
    assert dumps(generate(spec)) == dumps(generate(GeneratorSpec.from_dict(spec.to_dict())))


def test_random_orientation_keeps_the_base_edges():
    base = GeneratorSpec(Family.RANDOM_GRAPH, 7, 11, 0.6)
    g = generate(GeneratorSpec(Family.RANDOM_ORIENTATION, 7, 3, of=base))
    assert isinstance(g, OrientedGraph)
    assert g.underlying().edges == generate(base).edges


def test_invalid_specs():
    with pytest.raises(InvalidParameterError):
        GeneratorSpec(Family.PATH, 1)
    with pytest.raises(InvalidParameterError):
        GeneratorSpec(Family.RANDOM_GRAPH, 4, p=1.5)
    with pytest.raises(InvalidParameterError):
        GeneratorSpec(Family.RANDOM_ORIENTATION, 4)
    with pytest.raises(InvalidParameterError):
        GeneratorSpec("nope", 4)
    with pytest.raises(InvalidParameterError):
        generate(GeneratorSpec(Family.CYCLE, 2))


def _count_connected_by_filtering(n):
    pairs = list(combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        count += nx.is_connected(h)
    return count


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_connected_counts(n):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == _count_connected_by_filtering(n)
    assert len({g.edges for g in graphs}) == len(graphs)


def test_small_enumeration_examples():
    assert [g.edges for g in enumerate_connected(2)] == [{(0, 1)}]
    assert [g.arcs for g in enumerate_connected(2, oriented=True)] == [{(0, 1)}, {(1, 0)}]
    assert len(list(enumerate_connected(3))) == 4
    # labeled connected graphs on four vertices
    assert len(list(enumerate_connected(4))) == 38


def test_oriented_enumeration_counts():
    for n in (3, 4):
        expected = sum(2 ** len(g.edges) for g in enumerate_connected(n))
        oriented = list(enumerate_connected(n, oriented=True))
        assert len(oriented) == expected
        assert len({g.arcs for g in oriented}) == expected


def test_enumeration_caps():
    with pytest.raises(ResourceLimitError):
        next(enumerate_connected(8))
    with pytest.raises(ResourceLimitError):
        next(enumerate_connected(6, oriented=True))


def test_named_instances():
    assert gen.petersen().n == 10 and len(gen.petersen().edges) == 15
    assert gen.paw().degree(0) == 3
    assert gen.star(4).n == 5
