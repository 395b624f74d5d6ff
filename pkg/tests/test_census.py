import random

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from bettigraph.census import (Classification, canonical_form, census_row, census_table,
                               classify, enumerate_graphs, format_csv, format_table,
                               is_isomorphic, refine)
from bettigraph.errors import RangeError
from bettigraph.graphs import (Graph, complete_graph, cycle_graph, from_networkx, path_graph,
                               to_networkx)
from conftest import random_graph

# graphs up to isomorphism on k vertices (OEIS A000088)
TOTALS = [1, 2, 4, 11, 34, 156, 1044, 12346]


@pytest.fixture(scope="module")
def atlas():
    by_k = {}
    for h in graph_atlas_g()[1:]:
        by_k.setdefault(h.number_of_nodes(), []).append(h)
    return by_k


@pytest.mark.parametrize("k", range(1, 8))
def test_enumeration_counts(k):
    assert len(list(enumerate_graphs(k))) == TOTALS[k - 1]


@pytest.mark.parametrize("k", range(1, 8))
def test_enumeration_matches_atlas(k, atlas):
    ours = {cg.key for cg in enumerate_graphs(k)}
    theirs = {canonical_form(from_networkx(h)).key for h in atlas[k]}
    assert ours == theirs


@pytest.mark.parametrize("k", range(1, 8))
def test_chordal_counts_against_networkx(k, atlas):
    row = census_row(k)
    assert row.chordal == sum(nx.is_chordal(h) for h in atlas[k])
    assert row.total == len(atlas[k])


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(12)
    for _ in range(200):
        k = rng.randint(1, 9)
        g = random_graph(rng, k, rng.random())
        perm = list(range(1, k + 1))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_form(g).key == canonical_form(h).key
        assert canonical_form(g).graph == canonical_form(h).graph
        assert is_isomorphic(g, h)


def test_is_isomorphic_against_networkx():
    rng = random.Random(13)
    for _ in range(300):
        k = rng.randint(1, 7)
        g, h = random_graph(rng, k), random_graph(rng, k)
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_networkx(g), to_networkx(h))


def test_refine_is_equitable():
    g = Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
    cells = refine(g)
    assert sorted(v for c in cells for v in c) == list(range(5))
    for c in cells:
        for d in cells:
            counts = {sum(g.masks[v] >> u & 1 for u in d) for v in c}
            assert len(counts) == 1


def test_classify():
    assert classify(path_graph(4)) is Classification.CHORDAL
    assert classify(complete_graph(5)) is Classification.CHORDAL
    assert classify(cycle_graph(4)) is Classification.NOT_CHORDAL
    assert classify(Graph(1)) is Classification.CHORDAL
    assert str(Classification.FALSE_CHORDAL) == "FalseChordal"


def test_false_chordal_on_six_vertices():
    fc = [cg.graph for cg in enumerate_graphs(6)
          if classify(cg.graph) is Classification.FALSE_CHORDAL]
    assert len(fc) == 1
    assert not nx.is_chordal(to_networkx(fc[0]))


def test_table_small():
    rows = census_table(5)
    assert [r.chordal for r in rows] == [1, 2, 4, 10, 27]
    assert [r.not_chordal for r in rows] == [0, 0, 0, 1, 7]
    assert format_csv(rows).splitlines()[0] == "vertices,chordal,false_chordal,not_chordal"
    assert format_csv(rows).splitlines()[4] == "4,10,0,1"
    assert "False chordal" in format_table(rows)


def test_guards():
    with pytest.raises(RangeError):
        census_table(9)
    with pytest.raises(RangeError):
        list(enumerate_graphs(0))


@pytest.mark.slow
def test_eight_vertices():
    row = census_row(8)
    assert row.total == TOTALS[7]
    # chordal graphs up to isomorphism, OEIS A048192
    assert row.chordal == 2119
