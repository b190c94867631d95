# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Cayley-table kernels for groups of order <= 64.

Subsets are uint64 bitmasks.  Methods and results match
``_pykernels.Kernel`` exactly.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

BACKEND = "cython"
MAX_ORDER = 64


cdef class Kernel:
    cdef int* t
    cdef int inv[64]
    cdef readonly int n
    cdef readonly int identity

    def __cinit__(self, table, inverse, int identity):
        cdef int n = len(table)
        if n > MAX_ORDER:
            raise ValueError("compiled kernel supports order <= 64")
        self.n = n
        self.identity = identity
        self.t = <int*>malloc(n * n * sizeof(int))
        if self.t == NULL:
            raise MemoryError()
        cdef int i, j
        for i in range(n):
            row = table[i]
            for j in range(n):
                self.t[i * n + j] = row[j]
            self.inv[i] = inverse[i]

    def __dealloc__(self):
        if self.t != NULL:
            free(self.t)

    def find_nonassociative(self):
        cdef int n = self.n
        cdef int* t = self.t
        cdef int a, b, c, ab
        for a in range(n):
            for b in range(n):
                ab = t[a * n + b]
                for c in range(n):
                    if t[ab * n + c] != t[a * n + t[b * n + c]]:
                        return (a, b, c)
        return None

    cdef uint64_t _closure(self, int* gens, int ngens) nogil:
        cdef int n = self.n
        cdef int* t = self.t
        cdef uint64_t mask = (<uint64_t>1) << self.identity
        cdef int stack[64]
        cdef int top = 1
        cdef int x, y, k
        stack[0] = self.identity
        while top > 0:
            top -= 1
            x = stack[top]
            for k in range(ngens):
                y = t[x * n + gens[k]]
                if not (mask >> y) & 1:
                    mask |= (<uint64_t>1) << y
                    stack[top] = y
                    top += 1
        return mask

    def closure(self, gens):
        cdef int g[64]
        cdef int k = 0
        for x in gens:
            if k == 64:
                break
            g[k] = x
            k += 1
        return self._closure(g, k)

    def cyclic_masks(self):
        cdef int n = self.n
        cdef int g, x
        cdef uint64_t mask
        out = []
        for g in range(n):
            mask = (<uint64_t>1) << self.identity
            x = g
            while x != self.identity:
                mask |= (<uint64_t>1) << x
                x = self.t[x * n + g]
            out.append(mask)
        return out

    def subgroup_masks(self):
        reps_d = {}
        for i, cyc in enumerate(self.cyclic_masks()):
            reps_d.setdefault(cyc, i)
        reps = [g for g in reps_d.values() if g != self.identity]
        cdef int nreps = len(reps)
        cdef int r[64]
        cdef int gbuf[65]
        cdef int k, ng, j
        cdef uint64_t sub, joined
        for k in range(nreps):
            r[k] = reps[k]
        trivial = (<uint64_t>1) << self.identity
        found = {trivial: ()}
        frontier = [trivial]
        while frontier:
            nxt = []
            for sub_obj in frontier:
                sub = sub_obj
                gens = found[sub_obj]
                ng = len(gens)
                for j in range(ng):
                    gbuf[j] = gens[j]
                for k in range(nreps):
                    if (sub >> r[k]) & 1:
                        continue
                    gbuf[ng] = r[k]
                    joined = self._closure(gbuf, ng + 1)
                    if joined not in found:
                        found[joined] = gens + (r[k],)
                        nxt.append(joined)
            frontier = nxt
        return list(found)

    cdef uint64_t _conj(self, uint64_t mask, int g) nogil:
        cdef int n = self.n
        cdef int* t = self.t
        cdef uint64_t out = 0
        cdef int i
        cdef int gi = self.inv[g]
        for i in range(n):
            if (mask >> i) & 1:
                out |= (<uint64_t>1) << t[t[g * n + i] * n + gi]
        return out

    def conjugate(self, uint64_t mask, int g):
        return self._conj(mask, g)

    def conjugates(self, uint64_t mask):
        cdef int g
        return [self._conj(mask, g) for g in range(self.n)]
