# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exponent-histogram kernels; same contract as _kernels_py."""

import numpy as np
from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free


cdef void _counts(const int64_t* t1, const int64_t* t2, const int64_t* a, const int64_t* b,
                  int p, int n, int64_t N, const int64_t* w, int64_t* counts,
                  int64_t* ydig) noexcept nogil:
    cdef int d, r
    cdef int64_t y, xidx = 0, lin = 0, old_x, new_x, e
    for r in range(p):
        counts[r] = 0
    for d in range(n):
        ydig[d] = 0
        xidx += (a[d] % p) * w[d]
    for y in range(N):
        e = t2[y] + lin - t1[xidx] + p
        counts[e % p] += 1
        d = n - 1
        while d >= 0:
            old_x = (ydig[d] + a[d]) % p
            ydig[d] += 1
            if ydig[d] == p:
                ydig[d] = 0
                lin = (lin - b[d] * (p - 1)) % p
                if lin < 0:
                    lin += p
                new_x = a[d] % p
                xidx += (new_x - old_x) * w[d]
                d -= 1
            else:
                lin = (lin + b[d]) % p
                new_x = (old_x + 1) % p
                xidx += (new_x - old_x) * w[d]
                break


cdef inline bint _vanishes(const int64_t* c, int p) noexcept nogil:
    cdef int r
    for r in range(1, p):
        if c[r] != c[0]:
            return False
    return True


def _weights(int p, int n):
    return np.array([p ** (n - 1 - i) for i in range(n)], dtype=np.int64)


def char_counts(const int64_t[::1] t1, const int64_t[::1] t2, a, b, int p, int n):
    cdef int64_t[::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef int64_t[::1] bv = np.ascontiguousarray(b, dtype=np.int64)
    cdef int64_t[::1] w = _weights(p, n)
    cdef int64_t[::1] ydig = np.zeros(n, dtype=np.int64)
    out = np.zeros(p, dtype=np.int64)
    cdef int64_t[::1] ov = out
    _counts(&t1[0], &t2[0], &av[0], &bv[0], p, n, t1.shape[0], &w[0], &ov[0], &ydig[0])
    return out


def first_nonvanishing(const int64_t[::1] t1, const int64_t[::1] t2,
                       const int64_t[:, ::1] A, const int64_t[:, ::1] B, int p, int n):
    cdef int64_t[::1] w = _weights(p, n)
    cdef int64_t[::1] ydig = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] counts = np.zeros(p, dtype=np.int64)
    cdef int64_t N = t1.shape[0]
    cdef Py_ssize_t row, M = A.shape[0]
    cdef Py_ssize_t hit = -1
    if M == 0:
        return -1
    with nogil:
        for row in range(M):
            _counts(&t1[0], &t2[0], &A[row, 0], &B[row, 0], p, n, N, &w[0], &counts[0], &ydig[0])
            if not _vanishes(&counts[0], p):
                hit = row
                break
    return hit


def first_kl_failure(const int64_t[:, ::1] E, const int64_t[:, ::1] A, const int64_t[:, ::1] B,
                     int p, int n):
    cdef int64_t[::1] w = _weights(p, n)
    cdef int64_t[::1] ydig = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] c = np.zeros(p, dtype=np.int64)
    cdef int64_t[::1] c00 = np.zeros(p, dtype=np.int64)
    cdef int64_t N = E.shape[1]
    cdef Py_ssize_t K = E.shape[0]
    cdef Py_ssize_t row, i, j, M = A.shape[0]
    cdef Py_ssize_t hr = -1, hi = -1, hj = -1
    cdef int r
    cdef bint bad
    if M == 0:
        return -1, -1, -1
    with nogil:
        for row in range(M):
            for i in range(K):
                for j in range(K):
                    _counts(&E[i, 0], &E[j, 0], &A[row, 0], &B[row, 0], p, n, N,
                            &w[0], &c[0], &ydig[0])
                    if i != j:
                        bad = not _vanishes(&c[0], p)
                    elif i == 0:
                        for r in range(p):
                            c00[r] = c[r]
                        bad = False
                    else:
                        bad = False
                        for r in range(1, p):
                            if c[r] - c00[r] != c[0] - c00[0]:
                                bad = True
                                break
                    if bad:
                        hr = row
                        hi = i
                        hj = j
                        break
                if hr >= 0:
                    break
            if hr >= 0:
                break
    return hr, hi, hj
