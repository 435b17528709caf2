# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled grade-matrix kernels; mirror of ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()

BACKEND = "cython"


cdef inline int64_t _min(int64_t p, int64_t q) noexcept nogil:
    return p if p < q else q


cdef inline int64_t _absdiff(int64_t p, int64_t q) noexcept nogil:
    return p - q if p >= q else q - p


def compose(const int64_t[:, ::1] a, const int64_t[:, ::1] b):
    cdef Py_ssize_t n = a.shape[0], x, y, z
    cdef int64_t best, v, ax
    out = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] o = out
    with nogil:
        for x in range(n):
            for y in range(n):
                ax = a[x, y]
                if ax == 0:
                    continue
                for z in range(n):
                    v = _min(ax, b[y, z])
                    if v > o[x, z]:
                        o[x, z] = v
    return out


def closure(const int64_t[:, ::1] a):
    cdef Py_ssize_t n = a.shape[0], x, y, z
    cdef int64_t v
    out = np.array(a, dtype=np.int64, copy=True)
    cdef int64_t[:, ::1] c = out
    # Floyd-Warshall over the (max, min) semiring
    with nogil:
        for y in range(n):
            for x in range(n):
                if c[x, y] == 0:
                    continue
                for z in range(n):
                    v = _min(c[x, y], c[y, z])
                    if v > c[x, z]:
                        c[x, z] = v
    return out


def first_intransitive(const int64_t[:, ::1] a):
    cdef Py_ssize_t n = a.shape[0], x, y, z
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if a[x, z] < _min(a[x, y], a[y, z]):
                    return int(x), int(y), int(z)
    return None


def image_relation(const int64_t[:, ::1] a, const Py_ssize_t[::1] assign, Py_ssize_t m):
    cdef Py_ssize_t n = a.shape[0], i, j, fi, fj
    out = np.zeros((m, m), dtype=np.int64)
    cdef int64_t[:, ::1] o = out
    with nogil:
        for i in range(n):
            fi = assign[i]
            for j in range(n):
                fj = assign[j]
                if a[i, j] > o[fi, fj]:
                    o[fi, fj] = a[i, j]
    return out


def image_set(const int64_t[::1] v, const Py_ssize_t[::1] assign, Py_ssize_t m):
    cdef Py_ssize_t n = v.shape[0], i
    out = np.zeros(m, dtype=np.int64)
    cdef int64_t[::1] o = out
    for i in range(n):
        if v[i] > o[assign[i]]:
            o[assign[i]] = v[i]
    return out


def first_class_mismatch(const int64_t[:, ::1] a, const Py_ssize_t[::1] leader, int axis, int64_t tol):
    cdef Py_ssize_t n = a.shape[0], x, z, l
    for x in range(n):
        l = leader[x]
        if l == x:
            continue
        for z in range(n):
            if axis == 0:
                if _absdiff(a[z, x], a[z, l]) > tol:
                    return int(x), int(z)
            else:
                if _absdiff(a[x, z], a[l, z]) > tol:
                    return int(x), int(z)
    return None


def first_block_mismatch(const int64_t[:, ::1] a, const Py_ssize_t[::1] leader, int64_t tol):
    cdef Py_ssize_t n = a.shape[0], i, j
    for i in range(n):
        for j in range(n):
            if _absdiff(a[i, j], a[leader[i], leader[j]]) > tol:
                return int(i), int(j)
    return None


def group_leaders(const int64_t[:, ::1] sig, int64_t tol):
    cdef Py_ssize_t n = sig.shape[0], k = sig.shape[1], i, h, c, nheads = 0
    cdef bint same
    out = np.empty(n, dtype=np.intp)
    heads_arr = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t[::1] leader = out
    cdef Py_ssize_t[::1] heads = heads_arr
    with nogil:
        for i in range(n):
            leader[i] = i
            for h in range(nheads):
                same = True
                for c in range(k):
                    if _absdiff(sig[i, c], sig[heads[h], c]) > tol:
                        same = False
                        break
                if same:
                    leader[i] = heads[h]
                    break
            if leader[i] == i:
                heads[nheads] = i
                nheads += 1
    return out
