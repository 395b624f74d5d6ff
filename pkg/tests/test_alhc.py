import itertools
import random

import pytest

from bettigraph.alhc import (alhc_to_omega, count_alhc, decompose_module, is_alhc, iter_alhc,
                             omega_to_alhc, omega_to_lambda)
from bettigraph.errors import NotInCone, RangeError, ValidationError
from bettigraph.exact import psi_inverse, psi_matrix, vecmat
from bettigraph.threshold import omega_to_threshold, threshold_omega


def brute_alhc(n, t):
    """Every integer vector in the box, filtered by the chain of ratios."""
    out = []
    for v in itertools.product(*(range(i * t + 1) for i in range(1, n + 1))):
        if all(v[i] * (i + 2) >= v[i + 1] * (i + 1) for i in range(n - 1)):
            out.append(v)
    return out


def test_is_alhc():
    assert is_alhc([1, 2, 3, 1, 0], 1)
    assert not is_alhc([1, 3], 1)
    assert not is_alhc([2], 1)
    assert is_alhc([2, 4, 6], 2)
    assert not is_alhc([1, -1], 1)


def test_example_map():
    assert omega_to_lambda([7, 11, 6, 1, 0]) == [1, 2, 3, 1, 0]
    assert alhc_to_omega([1, 2, 3, 1, 0]) == [7, 11, 6, 1, 0]
    img = omega_to_alhc([7, 11, 6, 1, 0])
    assert img.valid and str(img) == "1,2,3,1,0"
    assert not omega_to_alhc([2, 0, 0]).valid


def test_maps_match_psi():
    rng = random.Random(2)
    for n in range(1, 10):
        w = [rng.randint(-20, 40) for _ in range(n)]
        assert omega_to_lambda(w) == vecmat(w, psi_inverse(n))
        assert alhc_to_omega(w) == vecmat(w, psi_matrix(n))
        assert alhc_to_omega(omega_to_lambda(w)) == w


@pytest.mark.parametrize("n,t", [(n, t) for n in range(1, 6) for t in range(0, 4)])
def test_iter_and_count_against_brute_force(n, t):
    brute = brute_alhc(n, t)
    assert list(iter_alhc(n, t)) == brute
    assert count_alhc(n, t) == len(brute)


def test_count_formula_and_guard():
    for n in range(1, 13):
        for t in range(0, 9):
            assert count_alhc(n, t) == (t + 1) ** n
    with pytest.raises(RangeError):
        count_alhc(13, 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_bijection(n):
    words = ["".join("ID"[m >> i & 1] for i in range(n)) for m in range(2 ** n - 1)]
    omegas = {tuple(threshold_omega(s)) for s in words}
    points = set(iter_alhc(n, 1, first=1))
    assert len(omegas) == len(points) == 2 ** n - 1
    assert {tuple(omega_to_lambda(w)) for w in omegas} == points
    assert {omega_to_threshold(alhc_to_omega(p)) for p in points} == set(words)


def test_module_example():
    # IIDI + IDDD
    words = decompose_module([8, 11, 6, 1], 2)
    assert len(words) == 2
    assert [sum(x) for x in zip(*(threshold_omega(w) for w in words))] == [8, 11, 6, 1]


def test_module_single_summand():
    assert decompose_module([7, 11, 6, 1, 0], 1) == ["IIDID"]


def test_module_rejects():
    with pytest.raises(NotInCone):
        decompose_module([2, 0, 0], 1)
    with pytest.raises(NotInCone):
        decompose_module([7, 11, 6, 1, 0], 2)
    with pytest.raises(ValidationError):
        decompose_module([1], 0)
    with pytest.raises(ValidationError):
        decompose_module([], 1)


def test_module_random():
    rng = random.Random(8)
    for _ in range(200):
        n, m = rng.randint(1, 8), rng.randint(1, 5)
        pieces = []
        for _ in range(m):
            mask = rng.randrange(2 ** n - 1)
            pieces.append(threshold_omega("".join("ID"[mask >> i & 1] for i in range(n))))
        omega = [sum(x) for x in zip(*pieces)]
        stats = {}
        words = decompose_module(omega, m, stats)
        assert len(words) == m
        assert all(len(w) == n for w in words)
        assert stats.get("backtracks", 0) >= 0
