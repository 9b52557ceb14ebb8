# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Gray-code scan kernel for the minimum-distance search.

Contract-identical twin of ``_distpure.gray_scan`` restricted to packed
rows of at most 64 bits (n <= 32 qubit positions), which covers every
instance inside the exact-enumeration budget.  One generator XOR per
step, weight test first, span-exclusion test only on improvement.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

KERNEL_NAME = "compiled"


def gray_scan(gens, int n, s_rows, unsigned long long start,
              unsigned long long stop):
    """Scan combination indices [start, stop); returns (w, idx, word).

    Same semantics as the pure kernel: best (weight, index, codeword)
    over enumerated combinations of ``gens`` outside the span of
    ``s_rows``, ties broken by smallest index; (-1, -1, 0) if nothing
    qualified.  The zero combination is never a candidate.
    """
    if 2 * n > 64:
        raise ValueError(f"compiled kernel supports 2n <= 64, got {2 * n}")
    cdef int ngens = len(gens)
    cdef int nsrows = len(s_rows)
    cdef unsigned long long *g = NULL
    cdef unsigned long long *srow = NULL
    cdef int *spiv = NULL
    cdef unsigned long long mask = ((<unsigned long long>1) << n) - 1
    cdef unsigned long long x, y, idx, row
    cdef unsigned long long best_x = 0, best_idx = 0
    cdef long long best_w = -1
    cdef int i, w
    cdef bint found = False

    g = <unsigned long long *>malloc(ngens * sizeof(unsigned long long))
    srow = <unsigned long long *>malloc(
        nsrows * sizeof(unsigned long long))
    spiv = <int *>malloc(nsrows * sizeof(int))
    if g == NULL or (nsrows and (srow == NULL or spiv == NULL)):
        free(g); free(srow); free(spiv)
        raise MemoryError()
    try:
        for i in range(ngens):
            g[i] = gens[i]
        for i in range(nsrows):
            row = s_rows[i]
            srow[i] = row
            spiv[i] = __builtin_ctzll(row)

        # State for the Gray code of the start index.
        x = 0
        y = start ^ (start >> 1)
        i = 0
        while y:
            if y & 1:
                x ^= g[i]
            y >>= 1
            i += 1

        idx = start
        while idx < stop:
            if idx != start:
                x ^= g[__builtin_ctzll(idx)]
            if idx != 0:
                w = __builtin_popcountll((x | (x >> n)) & mask)
                if best_w < 0 or w < best_w:
                    y = x
                    for i in range(nsrows):
                        if (y >> spiv[i]) & 1:
                            y ^= srow[i]
                    if y:
                        best_w = w
                        best_idx = idx
                        best_x = x
                        found = True
            idx += 1
    finally:
        free(g)
        free(srow)
        free(spiv)

    if not found:
        return -1, -1, 0
    return best_w, best_idx, best_x
