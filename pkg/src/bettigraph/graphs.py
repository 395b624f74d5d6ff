"""Simple graphs on vertices 1..k, chordality, the Froberg vector, and
the neighbourhood-moving rewrite ``G_{v->w}``.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from bettigraph import kernels
from bettigraph.errors import RangeError, ValidationError

MAX_VERTICES = 25
FROBERG_MAX = 22


class Graph:
    """Immutable simple undirected graph on vertices ``1..k``.

    Stored as one adjacency bitmask per vertex; bit ``u - 1`` of
    ``masks[v - 1]`` is set when ``uv`` is an edge.
    """

    __slots__ = ("k", "masks")

    def __init__(self, k: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(k, int) or not 1 <= k <= MAX_VERTICES:
            raise RangeError(f"vertex count must be in 1..{MAX_VERTICES}, got {k!r}")
        masks = [0] * k
        for u, v in edges:
            if not (1 <= u <= k and 1 <= v <= k):
                raise ValidationError(f"edge {u} {v} has a vertex outside 1..{k}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        self.k = k
        self.masks = tuple(masks)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = tuple(masks)
        g = object.__new__(cls)
        g.k = len(masks)
        g.masks = masks
        return g

    # -- basic queries -----------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.k + 1)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 1 <= v <= self.k):
            raise ValidationError(f"vertex {v!r} outside 1..{self.k}")

    def neighbors(self, v: int) -> set[int]:
        self._check(v)
        return set(_bits(self.masks[v - 1]))

    def degree(self, v: int) -> int:
        self._check(v)
        return bin(self.masks[v - 1]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.masks[u - 1] >> (v - 1) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in _bits(self.masks[u - 1]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(bin(m).count("1") for m in self.masks) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.masks == other.masks

    def __hash__(self) -> int:
        return hash(self.masks)

    def __repr__(self) -> str:
        return f"Graph({self.k}, {self.edges()})"

    # -- derived graphs ----------------------------------------------------

    def subset_mask(self, w: Iterable[int]) -> int:
        m = 0
        for v in w:
            self._check(v)
            m |= 1 << (v - 1)
        return m

    def induced(self, w: Iterable[int]) -> "Graph":
        """``G[W]`` relabelled to ``1..|W|`` preserving order."""
        keep = sorted(set(w))
        for v in keep:
            self._check(v)
        pos = {v: i for i, v in enumerate(keep)}
        masks = []
        for v in keep:
            m = 0
            for u in _bits(self.masks[v - 1]):
                if u in pos:
                    m |= 1 << pos[u]
            masks.append(m)
        return Graph.from_masks(masks)

    def remove_vertex(self, v: int) -> "Graph":
        self._check(v)
        return self.induced(u for u in self.vertices if u != v)

    def relabel(self, perm: dict[int, int] | list[int]) -> "Graph":
        """Apply a vertex permutation; ``perm[v]`` is the new label of ``v``.

        A list is read as ``perm[v - 1]``.
        """
        if isinstance(perm, dict):
            f = perm.__getitem__
        else:
            f = lambda v: perm[v - 1]  # noqa: E731
        return Graph(self.k, ((f(u), f(v)) for u, v in self.edges()))

    def complement(self) -> "Graph":
        full = (1 << self.k) - 1
        return Graph.from_masks((~m & full) & ~(1 << i) for i, m in enumerate(self.masks))


def _bits(m: int) -> Iterator[int]:
    """1-based positions of set bits."""
    while m:
        b = m & -m
        yield b.bit_length()
        m ^= b


# -- constructors -------------------------------------------------------------

def empty_graph(k: int) -> Graph:
    return Graph(k)


def complete_graph(k: int) -> Graph:
    return Graph(k, ((u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)))


def path_graph(k: int) -> Graph:
    return Graph(k, ((i, i + 1) for i in range(1, k)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValidationError("a cycle needs at least 3 vertices")
    return Graph(k, [(i, i + 1) for i in range(1, k)] + [(1, k)])


def star_graph(k: int) -> Graph:
    """Vertex 1 joined to every other vertex."""
    return Graph(k, ((1, v) for v in range(2, k + 1)))


def tree_from_pruefer(seq: list[int]) -> Graph:
    """Labelled tree on ``len(seq) + 2`` vertices from a Pruefer sequence."""
    k = len(seq) + 2
    degree = [1] * (k + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(1, k + 1) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(1, k + 1) if degree[w] == 1]
    edges.append((u, v))
    return Graph(k, edges)


def fan_triangulation(k: int) -> Graph:
    """Polygon 1..k triangulated by all diagonals from vertex 1."""
    if k < 3:
        raise ValidationError("a triangulated polygon needs at least 3 vertices")
    return Graph(k, [(i, i + 1) for i in range(1, k)] + [(1, k)]
                 + [(1, v) for v in range(3, k)])


def snake_triangulation(k: int) -> Graph:
    """Polygon 1..k triangulated as a zigzag strip 1, k, 2, k-1, 3, ..."""
    if k < 3:
        raise ValidationError("a triangulated polygon needs at least 3 vertices")
    strip = []
    lo, hi = 1, k
    while lo <= hi:
        strip.append(lo)
        if lo != hi:
            strip.append(hi)
        lo, hi = lo + 1, hi - 1
    edges = [(strip[i], strip[i + 1]) for i in range(k - 1)]
    edges += [(strip[i], strip[i + 2]) for i in range(k - 2)]
    return Graph(k, edges)


# -- operations ---------------------------------------------------------------

def component_count(g: Graph, w: Iterable[int]) -> int:
    """Number of connected components of ``G[W]``; 0 for empty ``W``."""
    return kernels.component_count(g.masks, g.subset_mask(w))


def components(g: Graph, mask: int | None = None) -> list[int]:
    """Components of ``G[mask]`` as bitmasks, ordered by lowest vertex."""
    if mask is None:
        mask = (1 << g.k) - 1
    out = []
    while mask:
        comp = mask & -mask
        frontier = comp
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = g.masks[b.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        mask &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to the lowest label)."""
    weight = [0] * (g.k + 1)
    visited: list[int] = []
    seen = 0
    for _ in range(g.k):
        best = max((v for v in g.vertices if not seen >> (v - 1) & 1),
                   key=lambda v: (weight[v], -v))
        visited.append(best)
        seen |= 1 << (best - 1)
        for u in _bits(g.masks[best - 1] & ~seen):
            weight[u] += 1
    return visited


def is_perfect_elimination(g: Graph, order: list[int]) -> bool:
    """Check that ``order`` eliminates simplicial vertices one at a time."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in _bits(g.masks[v - 1]) if pos[u] > pos[v]]
        if not later:
            continue
        p = min(later, key=pos.__getitem__)
        rest = 0
        for u in later:
            if u != p:
                rest |= 1 << (u - 1)
        if rest & ~g.masks[p - 1]:
            return False
    return True


def is_chordal(g: Graph) -> bool:
    """True iff ``g`` has a perfect elimination ordering.

    The reverse of a maximum cardinality search order is a perfect
    elimination ordering exactly when the graph is chordal.
    """
    return is_perfect_elimination(g, mcs_order(g)[::-1])


def froberg_vector(g: Graph) -> list[int]:
    """Entry ``i`` sums ``components(G[W]) - 1`` over ``(i+1)``-subsets ``W``.

    Defined for every graph; it equals the second row of the Betti diagram
    of ``k[G]`` only when ``g`` is chordal.
    """
    if g.k > FROBERG_MAX:
        raise RangeError(f"froberg_vector enumerates 2^k subsets; k={g.k} > {FROBERG_MAX}")
    return kernels.froberg_sums(list(g.masks), g.k)


def private_neighbors(g: Graph, v: int, w: int) -> int:
    """Bitmask of ``N(v) minus ({w} union N(w))``."""
    return g.masks[v - 1] & ~g.masks[w - 1] & ~(1 << (w - 1))


def move_vertex(g: Graph, v: int, w: int) -> Graph:
    """``G_{v->w}``: hand every private neighbour of ``v`` over to ``w``."""
    g._check(v)
    g._check(w)
    if v == w:
        raise ValidationError("move_vertex needs two distinct vertices")
    moved = private_neighbors(g, v, w)
    if not moved:
        return g
    masks = list(g.masks)
    bv, bw = 1 << (v - 1), 1 << (w - 1)
    masks[v - 1] &= ~moved
    masks[w - 1] |= moved
    for u in _bits(moved):
        masks[u - 1] = (masks[u - 1] & ~bv) | bw
    return Graph.from_masks(masks)


def distances_from(g: Graph, v: int, mask: int | None = None) -> dict[int, int]:
    """BFS distances from ``v`` inside ``G[mask]``."""
    if mask is None:
        mask = (1 << g.k) - 1
    dist = {v: 0}
    frontier = 1 << (v - 1)
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.masks[u - 1]
        nxt &= mask & ~seen
        for u in _bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


# -- text formats -------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n <k>`` followed by one ``u v`` edge per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValidationError("empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValidationError(f"first line must be 'n <k>', got {lines[0]!r}")
    try:
        k = int(head[1])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ValidationError(f"bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    return Graph(k, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.k}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_graph6(text: str) -> Graph:
    import networkx as nx

    line = text.strip().splitlines()[0].strip() if text.strip() else ""
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    try:
        nxg = nx.from_graph6_bytes(line.encode("ascii"))
    except (ValueError, nx.NetworkXError) as exc:
        raise ValidationError(f"invalid graph6 string: {exc}") from None
    return from_networkx(nxg)


def format_graph6(g: Graph) -> str:
    import networkx as nx

    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def from_networkx(h) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i + 1 for i, v in enumerate(nodes)}
    return Graph(len(nodes), ((pos[u], pos[v]) for u, v in h.edges()))
