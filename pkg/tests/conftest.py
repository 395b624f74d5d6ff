import itertools

import networkx as nx
import pytest

from bettigraph import _kernels_py
from bettigraph.census import enumerate_graphs
from bettigraph.graphs import Graph, is_chordal, to_networkx

try:
    from bettigraph import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

BACKENDS = [_kernels_py] + ([_kernels_c] if _kernels_c is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def backend(request):
    return request.param


def brute_froberg(g: Graph) -> list[int]:
    """Sum of (components - 1) over (i+1)-subsets, via networkx."""
    h = to_networkx(g)
    out = []
    for size in range(2, g.k + 1):
        out.append(sum(nx.number_connected_components(h.subgraph(w)) - 1
                       for w in itertools.combinations(h.nodes, size)))
    return out


def random_graph(rng, k, p=0.4) -> Graph:
    return Graph(k, [(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)
                     if rng.random() < p])


@pytest.fixture(scope="session")
def chordal_graphs_upto7():
    return [cg.graph for k in range(1, 8) for cg in enumerate_graphs(k)
            if is_chordal(cg.graph)]
