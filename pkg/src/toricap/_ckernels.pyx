# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Work in signed 64-bit integers; ``toricap.kernels`` only dispatches here
after checking that no intermediate value can exceed 2**62.
"""
from libc.math cimport sqrt
from libc.stdlib cimport malloc, free


cdef inline long long _mult(long long k) noexcept nogil:
    cdef long long s = <long long>sqrt(<double>(8 * k + 1))
    while s * s > 8 * k + 1:
        s -= 1
    while (s + 1) * (s + 1) <= 8 * k + 1:
        s += 1
    return (s - 1) // 2


def ball_multiplier(long long k):
    return _mult(k)


def union_table(weights, Py_ssize_t n):
    cdef long long *best = <long long *>malloc((n + 1) * sizeof(long long))
    cdef long long *new = <long long *>malloc((n + 1) * sizeof(long long))
    cdef long long *tmp
    cdef Py_ssize_t k, t
    cdef long long d, gain, v, w
    if best == NULL or new == NULL:
        free(best)
        free(new)
        raise MemoryError()
    try:
        for k in range(n + 1):
            best[k] = 0
        for pw in weights:
            w = pw
            with nogil:
                for k in range(n + 1):
                    new[k] = best[k]
                d = 1
                t = 1
                while t <= n:
                    gain = d * w
                    for k in range(t, n + 1):
                        v = best[k - t] + gain
                        if v > new[k]:
                            new[k] = v
                    d += 1
                    t = d * (d + 1) // 2
            tmp = best
            best = new
            new = tmp
        return [best[k] for k in range(n + 1)]
    finally:
        free(best)
        free(new)


def scan_infimum(long long r, union, Py_ssize_t kmax):
    cdef Py_ssize_t L = len(union) - 1
    cdef long long *u = <long long *>malloc((L + 1) * sizeof(long long))
    cdef long long *mult = <long long *>malloc((kmax + L + 1) * sizeof(long long))
    cdef Py_ssize_t k, l, arg, i
    cdef long long best, v
    if u == NULL or mult == NULL:
        free(u)
        free(mult)
        raise MemoryError()
    values = []
    args = []
    try:
        for i in range(L + 1):
            u[i] = union[i]
        for i in range(kmax + L + 1):
            mult[i] = _mult(i)
        for k in range(kmax + 1):
            with nogil:
                best = r * mult[k] - u[0]
                arg = 0
                for l in range(1, L + 1):
                    v = r * mult[k + l] - u[l]
                    if v < best:
                        best = v
                        arg = l
            values.append(best)
            args.append(arg)
        return values, args
    finally:
        free(u)
        free(mult)
