# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in ``_kernels_py``.

Masks are limited to 64 bits; the dispatcher in ``kernels`` routes larger
inputs to the Python versions.  ``ryser_perm_poly`` accumulates modulo 2**64
and reinterprets the result as signed, which is exact whenever the true
coefficients fit in int64 (guaranteed by the n <= 20 bound).
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


def stack_levels(masks):
    cdef Py_ssize_t k = len(masks)
    cdef Py_ssize_t i, j
    cdef uint64_t m
    cdef int top
    cdef uint64_t *ms = <uint64_t *> malloc(k * sizeof(uint64_t) + 1)
    cdef int *lv = <int *> malloc(k * sizeof(int) + 1)
    try:
        for i in range(k):
            ms[i] = <uint64_t> masks[i]
        for i in range(k):
            m = ms[i]
            top = 0
            for j in range(i):
                if (ms[j] & m) and lv[j] > top:
                    top = lv[j]
            lv[i] = top + 1
        return [lv[i] for i in range(k)]
    finally:
        free(ms)
        free(lv)


def order_ideals(pred):
    cdef Py_ssize_t k = len(pred)
    cdef uint64_t *pr = <uint64_t *> malloc(k * sizeof(uint64_t) + 1)
    cdef uint64_t *stack_set = <uint64_t *> malloc((k + 1) * 2 * sizeof(uint64_t) + 8)
    cdef int *stack_pos = <int *> malloc((k + 1) * 2 * sizeof(int) + 8)
    cdef Py_ssize_t top = 0
    cdef int i
    cdef uint64_t chosen
    out = []
    try:
        for i in range(k):
            pr[i] = <uint64_t> pred[i]
        stack_set[0] = 0
        stack_pos[0] = 0
        top = 1
        while top > 0:
            top -= 1
            i = stack_pos[top]
            chosen = stack_set[top]
            if i == k:
                out.append(chosen)
                continue
            stack_pos[top] = i + 1
            stack_set[top] = chosen
            top += 1
            if (pr[i] & ~chosen) == 0:
                stack_pos[top] = i + 1
                stack_set[top] = chosen | ((<uint64_t> 1) << i)
                top += 1
        return out
    finally:
        free(pr)
        free(stack_set)
        free(stack_pos)


def ryser_perm_poly(rows, int n):
    cdef uint64_t *rw = <uint64_t *> malloc(n * sizeof(uint64_t) + 8)
    cdef uint64_t *prod = <uint64_t *> malloc((n + 2) * sizeof(uint64_t))
    cdef uint64_t *total = <uint64_t *> malloc((n + 2) * sizeof(uint64_t))
    cdef uint64_t s, a, b, c
    cdef uint64_t limit = (<uint64_t> 1) << n
    cdef int i, d, deg, pc
    cdef bint dead
    try:
        for i in range(n):
            rw[i] = <uint64_t> rows[i]
        for d in range(n + 1):
            total[d] = 0
        s = 1
        while s < limit:
            prod[0] = 1
            deg = 0
            dead = False
            for i in range(n):
                a = (s >> i) & 1
                b = <uint64_t> _popcount(rw[i] & s)
                if a == 0 and b == 0:
                    dead = True
                    break
                prod[deg + 1] = 0
                d = deg + 1
                while d > 0:
                    c = prod[d - 1]
                    prod[d] = a * prod[d] + b * c
                    d -= 1
                prod[0] = a * prod[0]
                deg += 1
            if not dead:
                pc = _popcount(s)
                if (n - pc) % 2:
                    for d in range(deg + 1):
                        total[d] -= prod[d]
                else:
                    for d in range(deg + 1):
                        total[d] += prod[d]
            s += 1
        return [<int64_t> total[d] for d in range(n + 1)]
    finally:
        free(rw)
        free(prod)
        free(total)
