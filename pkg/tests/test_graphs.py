import random
from math import comb

import networkx as nx
import pytest

from bettigraph.errors import RangeError, ValidationError
from bettigraph.exact import eta_vector
from bettigraph.graphs import (Graph, complete_graph, component_count, components,
                               cycle_graph, empty_graph, fan_triangulation, format_edge_list,
                               format_graph6, froberg_vector, is_chordal, is_connected,
                               move_vertex, parse_edge_list, parse_graph6, path_graph,
                               snake_triangulation, to_networkx, tree_from_pruefer)
from conftest import brute_froberg, random_graph


def test_component_count_examples():
    c4 = cycle_graph(4)
    assert component_count(c4, [1, 3]) == 2
    k5 = complete_graph(5)
    assert all(component_count(k5, w) == 1 for w in ([1], [2, 4], [1, 2, 3, 4, 5]))
    g = Graph(4, [(1, 2), (3, 4)])
    assert component_count(g, [1, 2, 3]) == 2
    assert component_count(g, []) == 0
    with pytest.raises(ValidationError):
        component_count(g, [5])


def test_is_chordal_examples():
    assert not is_chordal(cycle_graph(4))
    assert is_chordal(path_graph(6))
    assert is_chordal(Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]))


def test_is_chordal_against_networkx():
    rng = random.Random(1)
    for _ in range(400):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert is_chordal(g) == nx.is_chordal(to_networkx(g))


def test_froberg_examples():
    assert froberg_vector(empty_graph(6)) == [15, 40, 45, 24, 5]
    for n in range(1, 9):
        g = Graph(n + 1, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])
        assert froberg_vector(g) == eta_vector(n)
    assert froberg_vector(path_graph(4)) == [3, 2, 0]
    assert froberg_vector(complete_graph(7)) == [0] * 6
    assert froberg_vector(Graph(1)) == []


def test_froberg_against_brute_force():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8))
        assert froberg_vector(g) == brute_froberg(g)


def test_froberg_guard():
    with pytest.raises(RangeError):
        froberg_vector(Graph(23))


def test_move_vertex_examples():
    assert move_vertex(path_graph(4), 3, 2).edges() == [(1, 2), (2, 3), (2, 4)]
    g = move_vertex(Graph(4, [(1, 2), (3, 4)]), 1, 3)
    assert g.edges() == [(2, 3), (3, 4)]
    assert g.degree(1) == 0
    star = Graph(4, [(1, 2), (1, 3), (1, 4)])
    assert move_vertex(star, 2, 1) == star
    with pytest.raises(ValidationError):
        move_vertex(star, 2, 2)


def test_move_vertex_keeps_edge_count_and_input():
    rng = random.Random(9)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 9))
        before = g.edges()
        v, w = rng.sample(range(1, g.k + 1), 2)
        h = move_vertex(g, v, w)
        assert h.num_edges == g.num_edges
        assert g.edges() == before


def test_moves_preserve_invariants_exhaustive(chordal_graphs_upto7):
    """Moves along an edge (connected case) or across components
    (disconnected case) keep chordality and the Froberg vector."""
    checked = 0
    for g in chordal_graphs_upto7:
        omega = froberg_vector(g)
        connected = is_connected(g)
        comp_of = {}
        for i, c in enumerate(components(g)):
            for v in g.vertices:
                if c >> (v - 1) & 1:
                    comp_of[v] = i
        for v in g.vertices:
            for w in g.vertices:
                if v == w:
                    continue
                if connected and not g.has_edge(v, w):
                    continue
                if not connected and comp_of[v] == comp_of[w]:
                    continue
                h = move_vertex(g, v, w)
                assert is_chordal(h)
                assert froberg_vector(h) == omega
                checked += 1
    assert checked > 5000


def test_trees():
    rng = random.Random(2024)
    for n in range(1, 12):
        for _ in range(5):
            g = tree_from_pruefer([rng.randint(1, n + 1) for _ in range(n - 1)])
            assert nx.is_tree(to_networkx(g))
            assert froberg_vector(g) == [i * comb(n, i + 1) for i in range(1, n + 1)]


@pytest.mark.parametrize("make", [fan_triangulation, snake_triangulation])
def test_maximal_outerplanar(make):
    for n in range(2, 12):
        g = make(n + 1)
        assert g.num_edges == 2 * (n + 1) - 3
        assert froberg_vector(g) == [i * comb(n - 1, i + 1) for i in range(1, n + 1)]


def test_edge_list_roundtrip():
    g = Graph(5, [(1, 2), (2, 5), (3, 4)])
    text = format_edge_list(g)
    assert text.splitlines()[0] == "n 5"
    assert parse_edge_list(text) == g
    assert parse_edge_list("# comment\nn 3\n\n1 2  # edge\n") == Graph(3, [(1, 2)])


@pytest.mark.parametrize("bad", ["", "3\n1 2", "n 3\n1 4", "n 3\n1 1", "n 3\n1 2 3", "n x"])
def test_edge_list_errors(bad):
    with pytest.raises(ValidationError):
        parse_edge_list(bad)


def test_graph6_roundtrip():
    rng = random.Random(4)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 10))
        assert parse_graph6(format_graph6(g)) == g
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)
    with pytest.raises(ValidationError):
        parse_graph6("!!!")


def test_graph_validation():
    with pytest.raises(RangeError):
        Graph(0)
    with pytest.raises(RangeError):
        Graph(26)
    with pytest.raises(ValidationError):
        Graph(3, [(1, 1)])
