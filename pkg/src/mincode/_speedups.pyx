# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; see _kernels_py.py for the contracts."""

import numpy as np

cimport cython
from libc.stdint cimport int16_t, int64_t, uint8_t


def weights(short[:, ::1] cols, long long[::1] mults, short[:, ::1] msgs,
            short[:, ::1] mul, short[:, ::1] add):
    cdef Py_ssize_t m = msgs.shape[0]
    cdef Py_ssize_t E = cols.shape[0]
    cdef Py_ssize_t k = cols.shape[1]
    out = np.zeros(m, dtype=np.int64)
    cdef long long[::1] ov = out
    cdef Py_ssize_t i, j, t
    cdef short acc
    cdef long long w
    with nogil:
        for i in range(m):
            w = 0
            for j in range(E):
                acc = 0
                for t in range(k):
                    acc = add[acc, mul[msgs[i, t], cols[j, t]]]
                if acc != 0:
                    w += mults[j]
            ov[i] = w
    return out


def masks(short[:, ::1] cols, short[:, ::1] msgs,
          short[:, ::1] mul, short[:, ::1] add, bint set_on_zero=False):
    cdef Py_ssize_t m = msgs.shape[0]
    cdef Py_ssize_t E = cols.shape[0]
    cdef Py_ssize_t k = cols.shape[1]
    cdef Py_ssize_t nbytes = (E + 7) // 8
    out = np.zeros((m, nbytes), dtype=np.uint8)
    cdef uint8_t[:, ::1] ov = out
    cdef Py_ssize_t i, j, t
    cdef short acc
    cdef bint bit
    with nogil:
        for i in range(m):
            for j in range(E):
                acc = 0
                for t in range(k):
                    acc = add[acc, mul[msgs[i, t], cols[j, t]]]
                bit = (acc == 0) if set_on_zero else (acc != 0)
                if bit:
                    ov[i, j >> 3] |= <uint8_t> (1 << (j & 7))
    return out


def find_containment(const uint8_t[:, ::1] mask_arr):
    cdef Py_ssize_t m = mask_arr.shape[0]
    cdef Py_ssize_t nbytes = mask_arr.shape[1]
    cdef Py_ssize_t i, j, b
    cdef bint ok
    cdef Py_ssize_t hit_i = -1, hit_j = -1
    with nogil:
        for i in range(m):
            for j in range(m):
                if j == i:
                    continue
                ok = True
                for b in range(nbytes):
                    if mask_arr[j, b] & (~mask_arr[i, b] & 0xFF):
                        ok = False
                        break
                if ok:
                    hit_i = i
                    hit_j = j
                    break
            if hit_i >= 0:
                break
    if hit_i < 0:
        return None
    return hit_j, hit_i
