"""Pure-Python kernels. Same contract as the compiled ``_kernels`` module.

Graphs are passed as lists of adjacency bitmasks over 0-based vertices.
"""


def component_count(adj, mask):
    count = 0
    while mask:
        comp = mask & -mask
        frontier = comp
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = adj[b.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        mask &= ~comp
        count += 1
    return count


def froberg_sums(adj, k):
    """Sum of (components - 1) over vertex subsets, bucketed by size - 1.

    Entry ``i - 1`` of the result collects subsets of size ``i + 1``.
    """
    out = [0] * max(k - 1, 0)
    for mask in range(1, 1 << k):
        c = component_count(adj, mask)
        if c > 1:
            out[bin(mask).count("1") - 2] += c - 1
    return out


def min_code(adj, cells):
    """Lexicographically least adjacency code over cell-respecting orderings.

    ``cells`` is an ordered list of vertex lists; position ``p`` of the
    ordering must be filled from the cell covering ``p``.  The code reads
    the upper triangle column by column (pair (i, j), i < j, sorted by j
    then i), most significant bit first.  Returns ``(code, order)``.
    """
    k = sum(len(c) for c in cells)
    cell_at = []
    for ci, c in enumerate(cells):
        cell_at.extend([ci] * len(c))
    total_bits = k * (k - 1) // 2
    best = [None, None]
    order = [0] * k
    used = 0

    def rec(pos, code):
        nonlocal used
        if pos == k:
            if best[0] is None or code < best[0]:
                best[0] = code
                best[1] = list(order)
            return
        for x in cells[cell_at[pos]]:
            if used >> x & 1:
                continue
            col = 0
            ax = adj[x]
            for i in range(pos):
                col = (col << 1) | (ax >> order[i] & 1)
            c2 = (code << pos) | col
            if best[0] is not None:
                done = pos * (pos + 1) // 2
                if c2 > best[0] >> (total_bits - done):
                    continue
            order[pos] = x
            used |= 1 << x
            rec(pos + 1, c2)
            used &= ~(1 << x)

    rec(0, 0)
    return best[0], best[1]
