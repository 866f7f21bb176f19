# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_kernels_py``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

from ._kernels_py import gf2_rank as _gf2_rank_big


def gf2_rank(rows):
    cdef Py_ssize_t n = len(rows)
    cdef uint64_t buf[64]
    cdef uint64_t r, low
    cdef Py_ssize_t i, j, rank = 0
    if n > 64:
        return _gf2_rank_big(rows)
    for i in range(n):
        v = rows[i]
        if v < 0 or v.bit_length() > 64:
            return _gf2_rank_big(rows)
        buf[i] = v
    for i in range(n):
        r = buf[i]
        if r == 0:
            continue
        low = r & (~r + 1)
        rank += 1
        for j in range(i + 1, n):
            if buf[j] & low:
                buf[j] ^= r
    return rank


def count_cycles(succ):
    cdef Py_ssize_t n = len(succ)
    cdef Py_ssize_t i, start, cycles = 0
    cdef int *s = <int *> malloc(n * sizeof(int) + 1)
    cdef char *seen = <char *> malloc(n + 1)
    if s == NULL or seen == NULL:
        free(s)
        free(seen)
        raise MemoryError()
    try:
        for i in range(n):
            s[i] = succ[i]
            seen[i] = 0
        for start in range(n):
            if seen[start]:
                continue
            cycles += 1
            i = start
            while not seen[i]:
                seen[i] = 1
                i = s[i]
    finally:
        free(s)
        free(seen)
    return cycles
