# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled inner loops over a Cayley table.

All routines take ``table`` with ``table[i, j]`` the index of ``e_i * e_j``
and assume index 0 is the identity.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def closure(const int[:, ::1] table, const int[::1] gens):
    """Return (mask, size) of the subgroup generated by ``gens``."""
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t k = gens.shape[0]
    cdef Py_ssize_t head = 0, tail = 1, j
    cdef int x, y
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] mask = out
    cdef int[::1] queue = np.empty(n, dtype=np.int32)
    queue[0] = 0
    mask[0] = 1
    while head < tail:
        x = queue[head]
        head += 1
        for j in range(k):
            y = table[x, gens[j]]
            if not mask[y]:
                mask[y] = 1
                queue[tail] = y
                tail += 1
    return out, tail


def product_mask(const int[:, ::1] table, const int[::1] a, const int[::1] b):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t i, j
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] mask = out
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            mask[table[a[i], b[j]]] = 1
    return out


cdef bint _permutes(const int[:, ::1] table, const int[::1] a, const int[::1] b,
                    unsigned char[::1] mask):
    cdef Py_ssize_t i, j
    cdef bint ok = True
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            mask[table[a[i], b[j]]] = 1
    for j in range(b.shape[0]):
        for i in range(a.shape[0]):
            if not mask[table[b[j], a[i]]]:
                ok = False
                break
        if not ok:
            break
    # reset scratch
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            mask[table[a[i], b[j]]] = 0
    return ok


def permutes(const int[:, ::1] table, const int[::1] a, const int[::1] b):
    cdef unsigned char[::1] scratch = np.zeros(table.shape[0], dtype=np.uint8)
    return bool(_permutes(table, a, b, scratch))


def permutability_matrix(const int[:, ::1] table, const int[::1] flat,
                         const long[::1] offsets):
    """Pairwise AB == BA over subgroups given as concatenated index lists."""
    cdef Py_ssize_t s = offsets.shape[0] - 1
    cdef Py_ssize_t i, j
    out = np.zeros((s, s), dtype=np.uint8)
    cdef unsigned char[:, ::1] res = out
    cdef unsigned char[::1] scratch = np.zeros(table.shape[0], dtype=np.uint8)
    for i in range(s):
        res[i, i] = 1
        for j in range(i + 1, s):
            if _permutes(table, flat[offsets[i]:offsets[i + 1]],
                         flat[offsets[j]:offsets[j + 1]], scratch):
                res[i, j] = 1
                res[j, i] = 1
    return out
