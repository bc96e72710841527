# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled pair-counting and permutation-resampling kernels.

C mirror of the pure-Python implementations in ``citemetrics.kernels``;
the two backends must return identical integers for identical inputs. The
permutation stream is the SplitMix64 generator from ``randstream``,
restated here so the hot loop never re-enters the interpreter.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc


cdef inline uint64_t _next_u64(uint64_t *state) noexcept nogil:
    cdef uint64_t z
    state[0] = state[0] + <uint64_t>0x9E3779B97F4B1BE9
    z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


def pair_counts(double[::1] x, double[::1] y):
    """Exact (concordant, discordant, ties_x, ties_y, ties_xy) by full pair scan."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, j
    cdef int64_t con = 0, dis = 0, tx = 0, ty = 0, txy = 0
    cdef double xi, yi
    cdef int dx, dy
    with nogil:
        for i in range(n - 1):
            xi = x[i]
            yi = y[i]
            for j in range(i + 1, n):
                dx = (xi > x[j]) - (xi < x[j])
                dy = (yi > y[j]) - (yi < y[j])
                if dx == 0:
                    tx += 1
                    if dy == 0:
                        txy += 1
                if dy == 0:
                    ty += 1
                elif dx != 0:
                    if dx == dy:
                        con += 1
                    else:
                        dis += 1
    return con, dis, tx, ty, txy


def perm_exceed_count(double[::1] x, double[::1] y, long n_perms,
                      unsigned long long seed, long s_threshold):
    """Count shuffles of y whose pair-sign statistic S has |S| >= s_threshold."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, j
    cdef long k, hits = 0
    cdef int64_t s
    cdef uint64_t state = <uint64_t>seed
    cdef double xi, wi
    cdef int dx, dy
    cdef double *w = <double *>malloc(n * sizeof(double))
    if w == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            w[i] = y[i]
        with nogil:
            for k in range(n_perms):
                for i in range(n - 1, 0, -1):
                    j = <Py_ssize_t>(_next_u64(&state) % <uint64_t>(i + 1))
                    wi = w[i]
                    w[i] = w[j]
                    w[j] = wi
                s = 0
                for i in range(n - 1):
                    xi = x[i]
                    wi = w[i]
                    for j in range(i + 1, n):
                        dx = (xi > x[j]) - (xi < x[j])
                        dy = (wi > w[j]) - (wi < w[j])
                        s += dx * dy
                if (s if s >= 0 else -s) >= <int64_t>s_threshold:
                    hits += 1
        return hits
    finally:
        free(w)
