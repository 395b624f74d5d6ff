"""Threshold graphs: construction from I/D words, the recursive Betti
vector, its inversion, and the rewrite to a threshold representative.
"""
from __future__ import annotations

from typing import Callable, Sequence

from bettigraph.errors import NotChordal, NotRealizable, RangeError, ValidationError
from bettigraph.exact import eta_vector
from bettigraph.graphs import (Graph, _bits, components, distances_from, froberg_vector,
                               is_chordal, move_vertex)

MAX_LENGTH = 24


def _check_word(s: str) -> str:
    if not isinstance(s, str) or set(s) - {"I", "D"}:
        raise ValidationError(f"threshold sequence must be a word over I/D, got {s!r}")
    if len(s) > MAX_LENGTH:
        raise RangeError(f"threshold sequence longer than {MAX_LENGTH}")
    return s


def build_graph(s: str) -> Graph:
    """Start from vertex 1; step ``t`` adds vertex ``t + 1``, isolated (I) or dominating (D)."""
    _check_word(s)
    edges = []
    for t, op in enumerate(s, start=2):
        if op == "D":
            edges.extend((u, t) for u in range(1, t))
    return Graph(len(s) + 1, edges)


def add_isolated(omega: Sequence[int]) -> list[int]:
    """Betti vector after adding an isolated vertex to a graph on ``len+1`` vertices.

    ``omega . Lambda + eta_k`` with ``k = len(omega) + 1``.
    """
    k = len(omega) + 1
    shifted = list(omega) + [0]
    for j in range(1, k):
        shifted[j] += omega[j - 1]
    return [a + b for a, b in zip(shifted, eta_vector(k))]


def add_dominating(omega: Sequence[int]) -> list[int]:
    return list(omega) + [0]


def threshold_omega(s: str) -> list[int]:
    _check_word(s)
    omega: list[int] = []
    for op in s:
        omega = add_isolated(omega) if op == "I" else add_dominating(omega)
    return omega


def _undo_isolated(omega: list[int]) -> list[int] | None:
    k = len(omega)
    diff = [a - b for a, b in zip(omega, eta_vector(k))]
    # (omega - eta_k) . Lambda^{-1}, i.e. alternating prefix sums
    prev = []
    acc = 0
    for j in range(k - 1):
        acc = diff[j] - acc
        prev.append(acc)
    if any(x < 0 for x in prev):
        return None
    if add_isolated(prev) != omega:
        return None
    return prev


def reduction_chain(omega: Sequence[int]) -> tuple[str, list[list[int]]]:
    """Invert the recursion step by step.

    Returns the threshold word and the chain of vectors visited, starting at
    ``omega`` and ending at ``[]``.  Raises :class:`NotRealizable`.
    """
    cur = [int(x) for x in omega]
    if len(cur) == 0:
        raise ValidationError("omega must have length >= 1")
    if any(x != y for x, y in zip(cur, omega)):
        raise NotRealizable(f"{list(omega)} has non-integer entries")
    if len(cur) > MAX_LENGTH:
        raise RangeError(f"omega longer than {MAX_LENGTH}")
    chain = [list(cur)]
    ops: list[str] = []
    while cur:
        if not any(cur):
            ops.extend("D" * len(cur))
            while cur:
                cur = cur[:-1]
                chain.append(list(cur))
            break
        if cur[-1] == 0:
            ops.append("D")
            cur = cur[:-1]
        else:
            prev = _undo_isolated(cur)
            if prev is None:
                raise NotRealizable(
                    f"{list(omega)} is not the Betti vector of a 2-linear quotient "
                    f"(stuck at {cur})")
            ops.append("I")
            cur = prev
        chain.append(list(cur))
    return "".join(reversed(ops)), chain


def omega_to_threshold(omega: Sequence[int]) -> str:
    """The unique threshold word whose Betti vector is ``omega``."""
    return reduction_chain(omega)[0]


def is_threshold(g: Graph) -> bool:
    """Peel isolated or dominating vertices until one vertex is left."""
    alive = (1 << g.k) - 1
    while alive & (alive - 1):
        for v in _bits(alive):
            nb = g.masks[v - 1] & alive
            if nb == 0 or nb == alive & ~(1 << (v - 1)):
                alive &= ~(1 << (v - 1))
                break
        else:
            return False
    return True


def threshold_rewrite(g: Graph, trace: Callable[[Graph], None] | None = None
                      ) -> tuple[str, Graph]:
    """Rewrite a chordal graph into a threshold graph with the same Froberg vector.

    Each round fixes a pivot ``v`` among the still-active vertices and
    applies moves until ``v`` is dominating or isolated there, then retires
    ``v``.  Retired vertices stay dominating/isolated for the rest of the
    run, so the moves can act on the whole graph.  ``trace`` sees every
    intermediate graph.  Returns the word and the final (threshold) graph on
    the original labels.
    """
    if not is_chordal(g):
        raise NotChordal("threshold representative requires a chordal graph")
    active = (1 << g.k) - 1
    ops: list[str] = []
    while active & (active - 1):
        # pivot: lowest label among the active vertices of maximum active degree
        v = max(_bits(active), key=lambda x: (bin(g.masks[x - 1] & active).count("1"), -x))
        comps = components(g, active)
        if len(comps) == 1:
            while True:
                dist = distances_from(g, v, active)
                far = [u for u, d in dist.items() if d == 2]
                if not far:
                    break
                u = min(far)
                w = min(_bits(g.masks[v - 1] & g.masks[u - 1] & active))
                g = move_vertex(g, w, v)
                if trace is not None:
                    trace(g)
            ops.append("D")
        else:
            own = next(c for c in comps if c >> (v - 1) & 1)
            w = min(_bits(active & ~own))
            g = move_vertex(g, v, w)
            if trace is not None:
                trace(g)
            ops.append("I")
        active &= ~(1 << (v - 1))
    return "".join(reversed(ops)), g


def threshold_representative(g: Graph) -> str:
    """Threshold word with the same vertex count and Froberg vector as ``g``."""
    return threshold_rewrite(g)[0]


def checked_rewrite(g: Graph) -> tuple[str, Graph, int]:
    """:func:`threshold_rewrite` asserting chordality and the Froberg vector
    at every intermediate graph.  Returns the word, final graph, step count."""
    target = froberg_vector(g)
    steps = 0

    def check(h: Graph) -> None:
        nonlocal steps
        steps += 1
        if not is_chordal(h):
            raise AssertionError(f"intermediate graph lost chordality: {h}")
        if froberg_vector(h) != target:
            raise AssertionError(f"intermediate graph changed its Froberg vector: {h}")

    word, final = threshold_rewrite(g, check)
    return word, final, steps
