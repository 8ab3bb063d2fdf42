# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exponent-vector kernels.

Same surface and results as ``_kernels_py``. Input vectors are packed into a
contiguous int64 buffer so the divisibility loops run without touching
Python objects.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

cdef extern from *:
    bint __builtin_add_overflow(int64_t a, int64_t b, int64_t* res) nogil

MAX_EXPONENT = 2**63 - 1


def canonical_key(v):
    return (sum(v), v[::-1])


cdef int64_t* _pack(seq, Py_ssize_t n, Py_ssize_t d) except NULL:
    cdef int64_t* buf = <int64_t*> malloc((n * d + 1) * sizeof(int64_t))
    cdef Py_ssize_t i, j
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            row = seq[i]
            if len(row) != d:
                raise ValueError("ragged exponent vectors")
            for j in range(d):
                buf[i * d + j] = row[j]
    except BaseException:
        free(buf)
        raise
    return buf


cdef inline bint _divides(const int64_t* g, const int64_t* v, Py_ssize_t d) nogil:
    cdef Py_ssize_t j
    for j in range(d):
        if g[j] > v[j]:
            return False
    return True


def minimalize(vectors):
    """Minimal elements under divisibility, deduplicated, canonical order."""
    ordered = sorted(set(vectors), key=canonical_key)
    cdef Py_ssize_t n = len(ordered)
    if n == 0:
        return ()
    cdef Py_ssize_t d = len(ordered[0])
    cdef int64_t* buf = _pack(ordered, n, d)
    cdef Py_ssize_t* kept = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t nkept = 0, i, k
    cdef bint dominated
    if kept == NULL:
        free(buf)
        raise MemoryError()
    try:
        with nogil:
            for i in range(n):
                dominated = False
                for k in range(nkept):
                    if _divides(buf + kept[k] * d, buf + i * d, d):
                        dominated = True
                        break
                if not dominated:
                    kept[nkept] = i
                    nkept += 1
        return tuple([ordered[kept[k]] for k in range(nkept)])
    finally:
        free(kept)
        free(buf)


def divisible_by_any(gens, v):
    cdef Py_ssize_t n = len(gens)
    if n == 0:
        return False
    cdef Py_ssize_t d = len(v)
    cdef int64_t* buf = _pack(gens, n, d)
    cdef int64_t* pt = _pack((v,), 1, d)
    cdef Py_ssize_t i
    cdef bint found = False
    with nogil:
        for i in range(n):
            if _divides(buf + i * d, pt, d):
                found = True
                break
    free(pt)
    free(buf)
    return found


def members(gens, points):
    cdef Py_ssize_t n = len(gens)
    cdef Py_ssize_t m = len(points)
    if m == 0:
        return []
    if n == 0:
        return [False] * m
    cdef Py_ssize_t d = len(points[0])
    cdef int64_t* g = _pack(gens, n, d)
    cdef int64_t* p
    try:
        p = _pack(points, m, d)
    except BaseException:
        free(g)
        raise
    cdef Py_ssize_t i, j
    out = [False] * m
    try:
        for j in range(m):
            for i in range(n):
                if _divides(g + i * d, p + j * d, d):
                    out[j] = True
                    break
        return out
    finally:
        free(p)
        free(g)


def lcm_pairs(left, right):
    cdef Py_ssize_t n = len(left), m = len(right)
    if n == 0 or m == 0:
        return []
    cdef Py_ssize_t d = len(left[0])
    cdef int64_t* a = _pack(left, n, d)
    cdef int64_t* b
    try:
        b = _pack(right, m, d)
    except BaseException:
        free(a)
        raise
    cdef Py_ssize_t i, j, t
    cdef int64_t x, y
    out = []
    try:
        for i in range(n):
            for j in range(m):
                row = [0] * d
                for t in range(d):
                    x = a[i * d + t]
                    y = b[j * d + t]
                    row[t] = x if x > y else y
                out.append(tuple(row))
        return out
    finally:
        free(b)
        free(a)


def mul_pairs(left, right):
    cdef Py_ssize_t n = len(left), m = len(right)
    if n == 0 or m == 0:
        return []
    cdef Py_ssize_t d = len(left[0])
    cdef int64_t* a = _pack(left, n, d)
    cdef int64_t* b
    try:
        b = _pack(right, m, d)
    except BaseException:
        free(a)
        raise
    cdef Py_ssize_t i, j, t
    cdef int64_t s
    out = []
    try:
        for i in range(n):
            for j in range(m):
                row = [0] * d
                for t in range(d):
                    if __builtin_add_overflow(a[i * d + t], b[j * d + t], &s):
                        raise OverflowError("exponent exceeds 64-bit budget")
                    row[t] = s
                out.append(tuple(row))
        return out
    finally:
        free(b)
        free(a)
