import itertools
import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from bettigraph import _kernels_py, kernels
from conftest import BACKENDS, brute_froberg, random_graph


@st.composite
def adjacency(draw, max_k=9):
    k = draw(st.integers(0, max_k))
    pairs = list(itertools.combinations(range(k), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    adj = [0] * k
    for u, v in chosen:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def test_component_count(backend):
    # two disjoint edges {0,1}, {2,3}
    adj = [0b10, 0b1, 0b1000, 0b100]
    assert backend.component_count(adj, 0b0111) == 2
    assert backend.component_count(adj, 0) == 0
    assert backend.component_count(adj, 0b1111) == 2


def test_froberg_against_networkx(backend):
    rng = random.Random(7)
    for k in range(1, 9):
        for _ in range(10):
            g = random_graph(rng, k)
            assert backend.froberg_sums(list(g.masks), k) == brute_froberg(g)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
@settings(max_examples=200, deadline=None)
@given(adjacency())
def test_backends_agree(adj):
    k = len(adj)
    fast = BACKENDS[1]
    assert fast.froberg_sums(adj, k) == _kernels_py.froberg_sums(adj, k)
    cells = [list(range(k))] if k else []
    assert fast.min_code(adj, cells) == _kernels_py.min_code(adj, cells)


def test_min_code_is_minimum_over_permutations(backend):
    rng = random.Random(3)
    for k in range(1, 7):
        for _ in range(5):
            g = random_graph(rng, k)
            adj = list(g.masks)
            code, order = backend.min_code(adj, [list(range(k))])

            def code_of(perm):
                c = 0
                for j in range(1, k):
                    for i in range(j):
                        c = (c << 1) | (adj[perm[i]] >> perm[j] & 1)
                return c

            assert code == min(code_of(p) for p in itertools.permutations(range(k)))
            assert code_of(order) == code


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
def test_large_froberg_agrees():
    rng = random.Random(11)
    g = random_graph(rng, 13, 0.3)
    assert BACKENDS[1].froberg_sums(list(g.masks), 13) == _kernels_py.froberg_sums(list(g.masks), 13)


def test_pure_backend_forced_by_environment():
    env = dict(os.environ, BETTIGRAPH_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from bettigraph import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
