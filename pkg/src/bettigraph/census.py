"""Isomorph-free enumeration of small graphs and the chordal /
false-chordal / not-chordal census.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from bettigraph import kernels
from bettigraph.bscore import chordality_certificate
from bettigraph.errors import RangeError
from bettigraph.graphs import FROBERG_MAX, Graph, froberg_vector, is_chordal

ENUM_MAX = 8
CANON_MAX = 11


def refine(g: Graph) -> list[list[int]]:
    """Equitable ordered partition of the 0-based vertices.

    Cells are split by the multiset of neighbouring cell indices and sorted
    by that signature, so the ordering does not depend on labels.
    """
    k = g.k
    color = [0] * k
    ncolors = 1
    nbrs = [[u for u in range(k) if g.masks[v] >> u & 1] for v in range(k)]
    while True:
        sig = [(color[v], tuple(sorted(color[u] for u in nbrs[v]))) for v in range(k)]
        keys = sorted(set(sig))
        if len(keys) == ncolors:
            break
        index = {s: i for i, s in enumerate(keys)}
        color = [index[s] for s in sig]
        ncolors = len(keys)
    cells: list[list[int]] = [[] for _ in range(ncolors)]
    for v in range(k):
        cells[color[v]].append(v)
    return cells


@dataclass(frozen=True, order=True)
class CanonicalGraph:
    k: int
    key: int
    graph: Graph

    def __repr__(self) -> str:
        return f"CanonicalGraph(k={self.k}, key={self.key:#x})"


def canonical_form(g: Graph) -> CanonicalGraph:
    """Relabel ``g`` so its upper-triangle code is least among orderings
    compatible with :func:`refine`.  Isomorphic graphs get equal keys."""
    if g.k > CANON_MAX:
        raise RangeError(f"canonical form supports at most {CANON_MAX} vertices")
    code, order = kernels.min_code(list(g.masks), refine(g))
    new_label = [0] * g.k
    for pos, v in enumerate(order):
        new_label[v] = pos + 1
    return CanonicalGraph(g.k, code, g.relabel(new_label))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.k == h.k and canonical_form(g).key == canonical_form(h).key


@lru_cache(maxsize=None)
def _level(k: int) -> tuple[CanonicalGraph, ...]:
    if k == 1:
        return (canonical_form(Graph(1)),)
    seen: dict[int, CanonicalGraph] = {}
    # every graph on k vertices is some graph on k-1 vertices plus one more vertex
    for rep in _level(k - 1):
        base = list(rep.graph.masks) + [0]
        for nb in range(1 << (k - 1)):
            masks = list(base)
            masks[k - 1] = nb
            for u in range(k - 1):
                if nb >> u & 1:
                    masks[u] |= 1 << (k - 1)
            cf = canonical_form(Graph.from_masks(masks))
            seen.setdefault(cf.key, cf)
    return tuple(seen[key] for key in sorted(seen))


def enumerate_graphs(k: int) -> Iterator[CanonicalGraph]:
    """One canonical representative per isomorphism class, ordered by key."""
    if not (isinstance(k, int) and 1 <= k <= ENUM_MAX):
        raise RangeError(f"enumeration guard: 1 <= k <= {ENUM_MAX}")
    return iter(_level(k))


class Classification(str, enum.Enum):
    CHORDAL = "chordal"
    FALSE_CHORDAL = "false_chordal"
    NOT_CHORDAL = "not_chordal"

    def __str__(self) -> str:
        return {"chordal": "Chordal", "false_chordal": "FalseChordal",
                "not_chordal": "NotChordal"}[self.value]


def classify(g: Graph) -> Classification:
    if g.k > FROBERG_MAX:
        raise RangeError(f"classify needs the Froberg vector; k={g.k} > {FROBERG_MAX}")
    if is_chordal(g):
        return Classification.CHORDAL
    if g.k >= 2 and chordality_certificate(froberg_vector(g)).admissible:
        return Classification.FALSE_CHORDAL
    return Classification.NOT_CHORDAL


@dataclass(frozen=True)
class CensusRow:
    k: int
    chordal: int
    false_chordal: int
    not_chordal: int  # includes the false chordal graphs

    @property
    def total(self) -> int:
        return self.chordal + self.not_chordal


def census_row(k: int) -> CensusRow:
    counts = {c: 0 for c in Classification}
    for cg in enumerate_graphs(k):
        counts[classify(cg.graph)] += 1
    fc = counts[Classification.FALSE_CHORDAL]
    return CensusRow(k, counts[Classification.CHORDAL], fc,
                     counts[Classification.NOT_CHORDAL] + fc)


def census_table(kmax: int = 7) -> list[CensusRow]:
    if not (isinstance(kmax, int) and 1 <= kmax <= ENUM_MAX):
        raise RangeError(f"census guard: 1 <= kmax <= {ENUM_MAX}")
    return [census_row(k) for k in range(1, kmax + 1)]


def format_table(rows: list[CensusRow]) -> str:
    labels = [("Chordal", "chordal"), ("False chordal", "false_chordal"),
              ("Not chordal", "not_chordal")]
    lw = max(len(lab) for lab, _ in labels)
    cells = [[str(getattr(r, attr)) for r in rows] for _, attr in labels]
    cw = max([len(str(r.k)) for r in rows] + [len(c) for row in cells for c in row])
    head = " " * lw + " | " + " ".join(str(r.k).rjust(cw) for r in rows)
    lines = [head, "-" * len(head)]
    for (lab, _), row in zip(labels, cells):
        lines.append(lab.rjust(lw) + " | " + " ".join(c.rjust(cw) for c in row))
    return "\n".join(lines)


def format_csv(rows: list[CensusRow]) -> str:
    out = ["vertices,chordal,false_chordal,not_chordal"]
    out += [f"{r.k},{r.chordal},{r.false_chordal},{r.not_chordal}" for r in rows]
    return "\n".join(out) + "\n"
