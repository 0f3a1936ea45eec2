# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search over partitions into connected blocks.

Mirrors axlab._kernel_py exactly (same contract, same canonical ordering);
see that module for the algorithm description. This version keeps the whole
recursion in C types and only touches Python objects when a new optimum
partition is recorded.
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef class _Search:
    cdef uint64_t adj[64]
    cdef int64_t deg[64]
    cdef uint64_t stack[64]
    cdef int depth
    cdef int n
    cdef int mode
    cdef int64_t a
    cdef int64_t b
    cdef int64_t edge_scale
    cdef int64_t best
    cdef bint has_best
    cdef list out

    def __cinit__(self, adj, degrees, int mode, int64_t a, int64_t b):
        cdef int i
        self.n = len(adj)
        for i in range(self.n):
            self.adj[i] = adj[i]
            self.deg[i] = degrees[i]
        self.mode = mode
        self.a = a
        self.b = b
        self.edge_scale = 4 * a if mode == 0 else b
        self.depth = 0
        self.has_best = False
        self.best = 0
        self.out = []

    cdef inline int64_t term(self, int64_t e, int64_t d, int64_t size) noexcept:
        if self.mode == 0:
            return 4 * self.a * e - d * d
        return self.b * e - self.a * (size * (size - 1) // 2)

    cdef inline int64_t edges_within(self, uint64_t mask) noexcept:
        cdef int64_t total = 0
        cdef uint64_t m = mask
        cdef uint64_t low
        cdef int v
        while m:
            low = m & (~m + 1)
            v = __builtin_popcountll(low - 1)
            m ^= low
            total += __builtin_popcountll(self.adj[v] & mask)
        return total // 2

    cdef void record(self, int64_t acc):
        cdef int i
        if (not self.has_best) or acc > self.best:
            self.has_best = True
            self.best = acc
            del self.out[:]
        elif acc < self.best:
            return
        self.out.append(tuple([self.stack[i] for i in range(self.depth)]))

    cdef void partition(self, uint64_t rem, int64_t acc):
        cdef uint64_t v_bit
        cdef int v
        if rem == 0:
            self.record(acc)
            return
        if self.has_best and acc + self.edge_scale * self.edges_within(rem) < self.best:
            return
        v_bit = rem & (~rem + 1)
        v = __builtin_popcountll(v_bit - 1)
        self.grow(rem, acc, v_bit, 0, self.deg[v], 1, self.adj[v] & rem & ~v_bit, 0)

    cdef void grow(
        self,
        uint64_t rem,
        int64_t acc,
        uint64_t block,
        int64_t e,
        int64_t d,
        int64_t size,
        uint64_t frontier,
        uint64_t forbidden,
    ):
        cdef uint64_t u_bit, new_block, new_frontier
        cdef int u
        if frontier == 0:
            self.stack[self.depth] = block
            self.depth += 1
            self.partition(rem & ~block, acc + self.term(e, d, size))
            self.depth -= 1
            return
        u_bit = frontier & (~frontier + 1)
        self.grow(rem, acc, block, e, d, size, frontier ^ u_bit, forbidden | u_bit)
        u = __builtin_popcountll(u_bit - 1)
        new_block = block | u_bit
        new_frontier = (frontier | (self.adj[u] & rem)) & ~new_block & ~forbidden
        self.grow(
            rem,
            acc,
            new_block,
            e + __builtin_popcountll(self.adj[u] & block),
            d + self.deg[u],
            size + 1,
            new_frontier,
            forbidden,
        )


def best_connected_partitions(adj, degrees, int mode, a, b):
    """All maximum-score partitions into connected blocks; see axlab._kernel_py."""
    cdef int n = len(adj)
    if mode not in (0, 1):
        raise ValueError("mode must be 0 (modularity) or 1 (cpm)")
    if n == 0:
        return 0, [()]
    if n > 63:
        raise ValueError("kernel supports at most 63 vertices per component")
    cdef _Search search = _Search(adj, degrees, mode, a, b)
    search.partition((<uint64_t> 1 << n) - 1, 0)
    return search.best, search.out
