from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from oracles import naive_connected_subsets
from onelap.graph import (DisconnectedGraphError, Graph, GraphFormatError, boundary_size,
                          complete_graph, connected_components, enumerate_connected_subsets,
                          generate, load_graph, path_graph, subset_volume)


def test_load_graph_degrees():
    G = load_graph("5\n1 2\n1 3\n2 3\n3 4\n3 5")
    assert G.degrees == (2, 2, 4, 1, 1)


def test_load_k2_with_comments():
    G = load_graph("# tiny\n2\n\n# edge\n1 2\n")
    assert G.degrees == (1, 1) and G.volume == 2


@pytest.mark.parametrize("text, line, fragment", [
    ("3\n1 2\n1 2", 3, "duplicate"),
    ("3\n1 2\n2 1", 3, "duplicate"),
    ("3\n2 2", 2, "self-loop"),
    ("3\n1 4", 2, "out of range"),
    ("3\n1 x", 2, "non-integer"),
    ("3\n1 2 3", 2, "expected"),
    ("three\n1 2", 1, "vertex count"),
])
def test_load_graph_errors(text, line, fragment):
    with pytest.raises(GraphFormatError) as exc:
        load_graph(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_load_graph_empty():
    with pytest.raises(GraphFormatError):
        load_graph("# nothing\n")


def test_generate_families():
    K4 = generate("complete", 4)
    assert len(K4.edges) == 6 and set(K4.degrees) == {3}
    assert generate("path", 4).degrees == (1, 2, 2, 1)
    assert set(generate("cycle", 5).degrees) == {2}


def test_generate_named():
    G6 = generate("named", "G6")
    assert (G6.n, len(G6.edges)) == (6, 10)
    assert G6.degrees == (5, 4, 3, 3, 3, 2)
    G10 = generate("named", "EX_10G")
    assert (G10.n, len(G10.edges)) == (10, 14)
    for name in ("EX_5G", "EX_7G", "EX_9G", "EX_5ORDER"):
        assert generate("named", name).is_connected


@pytest.mark.parametrize("family, param", [("path", 1), ("cycle", 2), ("complete", 1),
                                           ("named", "G7"), ("star", 4)])
def test_generate_errors(family, param):
    with pytest.raises(ValueError):
        generate(family, param)


def test_boundary_and_volume():
    K4, P4 = complete_graph(4), path_graph(4)
    assert boundary_size(K4, {1, 2}) == 4
    assert boundary_size(P4, {1, 2}) == 1
    assert subset_volume(K4, {1, 2}) == 6
    assert subset_volume(P4, {1, 2}) == 3
    assert subset_volume(P4, set()) == 0


@pytest.mark.parametrize("S", [set(), {1, 2, 3, 4}])
def test_boundary_rejects_trivial(S):
    with pytest.raises(ValueError):
        boundary_size(path_graph(4), S)


def test_components():
    assert connected_components(path_graph(5), {1, 2, 4, 5}) == [(1, 2), (4, 5)]
    assert connected_components(complete_graph(4), {1, 3}) == [(1, 3)]
    assert connected_components(path_graph(5), range(1, 6)) == [(1, 2, 3, 4, 5)]


def test_enumeration_examples(G6):
    assert list(enumerate_connected_subsets(path_graph(3), 2)) == [{1}, {2}, {3}]
    assert list(enumerate_connected_subsets(path_graph(2), 1)) == [{1}, {2}]
    subsets = set(enumerate_connected_subsets(G6, 10))
    assert frozenset({1, 3, 6}) in subsets
    assert frozenset({1, 2, 5}) not in subsets


def test_enumeration_rejects_bad_cap():
    with pytest.raises(ValueError):
        list(enumerate_connected_subsets(path_graph(3), 0))


def test_disconnected_graph_constructible():
    G = Graph(4, frozenset({(1, 2), (3, 4)}))
    assert not G.is_connected
    with pytest.raises(DisconnectedGraphError):
        G.require_connected()


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8))
def test_enumeration_matches_naive_filter(G):
    for cap in (G.volume, Fraction(G.volume, 2)):
        fast = list(enumerate_connected_subsets(G, cap))
        assert len(fast) == len(set(fast))
        assert fast == sorted(fast, key=lambda s: (len(s), sorted(s)))
        assert set(fast) == set(naive_connected_subsets(G, cap))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8))
def test_complement_symmetries(G):
    V = frozenset(G.vertices)
    for mask in range(1, (1 << G.n) - 1, max(1, (1 << G.n) // 40)):
        S = frozenset(v for v in V if mask >> (v - 1) & 1)
        assert boundary_size(G, S) == boundary_size(G, V - S) >= 1
        assert subset_volume(G, S) + subset_volume(G, V - S) == G.volume
        pieces = connected_components(G, S)
        assert sorted(v for p in pieces for v in p) == sorted(S)
