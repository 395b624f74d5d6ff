# cython: language_level=3
"""Compiled kernels: subset sweep for the Froberg sums and the branch-and-bound
canonical code search.  Mirrors ``_kernels_py`` exactly."""

from libc.stdint cimport uint32_t, uint64_t

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil

cdef enum:
    MAXK = 25
    MAXCODE = 11


cdef inline int _popcount(uint32_t x) nogil:
    return __builtin_popcount(x)


cdef inline int _components(const uint32_t* adj, uint32_t mask) nogil:
    cdef int count = 0
    cdef uint32_t comp, frontier, b, new
    cdef int v
    while mask:
        comp = mask & (~mask + 1)
        frontier = comp
        while frontier:
            v = __builtin_ctz(frontier)
            frontier &= frontier - 1
            new = adj[v] & mask & ~comp
            comp |= new
            frontier |= new
        mask &= ~comp
        count += 1
    return count


cdef void _load(object adj, uint32_t* out, int k) except *:
    cdef int i
    if k > MAXK:
        raise ValueError(f"kernel supports at most {MAXK} vertices")
    for i in range(k):
        out[i] = <uint32_t>adj[i]


def component_count(adj, mask):
    cdef uint32_t a[MAXK]
    cdef int k = len(adj)
    _load(adj, a, k)
    return _components(a, <uint32_t>mask)


def froberg_sums(adj, int k):
    cdef uint32_t a[MAXK]
    cdef long long acc[MAXK]
    cdef uint32_t mask, top
    cdef int c, i
    _load(adj, a, k)
    for i in range(MAXK):
        acc[i] = 0
    if k > 0:
        top = <uint32_t>((<uint64_t>1 << k) - 1)
        with nogil:
            mask = 1
            while True:
                c = _components(a, mask)
                if c > 1:
                    acc[_popcount(mask) - 2] += c - 1
                if mask == top:
                    break
                mask += 1
    return [acc[i] for i in range(max(k - 1, 0))]


cdef struct _Search:
    int k
    int total_bits
    uint32_t adj[MAXCODE]
    int cell_start[MAXCODE]
    int cell_end[MAXCODE]
    int members[MAXCODE]
    int order[MAXCODE]
    int best_order[MAXCODE]
    uint64_t best
    int have_best
    uint32_t used


cdef void _rec(_Search* s, int pos, uint64_t code) nogil:
    cdef int idx, x, i, done
    cdef uint64_t col, c2
    if pos == s.k:
        if not s.have_best or code < s.best:
            s.best = code
            s.have_best = 1
            for i in range(s.k):
                s.best_order[i] = s.order[i]
        return
    for idx in range(s.cell_start[pos], s.cell_end[pos]):
        x = s.members[idx]
        if (s.used >> x) & 1:
            continue
        col = 0
        for i in range(pos):
            col = (col << 1) | ((s.adj[x] >> s.order[i]) & 1)
        c2 = (code << pos) | col
        if s.have_best:
            done = pos * (pos + 1) // 2
            if c2 > (s.best >> (s.total_bits - done)):
                continue
        s.order[pos] = x
        s.used |= (<uint32_t>1) << x
        _rec(s, pos + 1, c2)
        s.used &= ~((<uint32_t>1) << x)


def min_code(adj, cells):
    cdef _Search s
    cdef int k = 0, ci, start, p, j
    for c in cells:
        k += len(c)
    if k > MAXCODE:
        raise ValueError(f"canonical code supports at most {MAXCODE} vertices")
    s.k = k
    s.total_bits = k * (k - 1) // 2
    s.have_best = 0
    s.best = 0
    s.used = 0
    for j in range(k):
        s.adj[j] = <uint32_t>adj[j]
    p = 0
    for c in cells:
        start = p
        for x in c:
            s.members[p] = x
            p += 1
        for j in range(start, p):
            s.cell_start[j] = start
            s.cell_end[j] = p
    with nogil:
        _rec(&s, 0, 0)
    if not s.have_best:
        return None, None
    return s.best, [s.best_order[i] for i in range(k)]
