# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled sweep kernels.

Same contracts as ``sliced_ot._kernels._numpy``: batches of pre-sorted rows,
cumulative weights closing exactly at 1.0.  Loops release the GIL so chunked
callers can scale across threads.
"""

import numpy as np

cimport cython
from libc.math cimport fabs, pow


cdef inline double _abs_pow(double diff, double p) nogil:
    if p == 2.0:
        return diff * diff
    if p == 1.0:
        return fabs(diff)
    return pow(fabs(diff), p)


def pp_equal(double[:, ::1] xs, double[:, ::1] ys, double p):
    """W_p^p per row for equal-count uniform-weight instances (sorted rows)."""
    cdef Py_ssize_t L = xs.shape[0]
    cdef Py_ssize_t n = xs.shape[1]
    out = np.empty(L, dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t l, i
    cdef double acc
    with nogil:
        for l in range(L):
            acc = 0.0
            for i in range(n):
                acc += _abs_pow(xs[l, i] - ys[l, i], p)
            ov[l] = acc / n
    return out


def pp_general(double[:, ::1] xv, double[:, ::1] xcw,
               double[:, ::1] yv, double[:, ::1] ycw, double p):
    """W_p^p per row via a two-pointer merged-CDF sweep."""
    cdef Py_ssize_t L = xv.shape[0]
    cdef Py_ssize_t n = xv.shape[1]
    cdef Py_ssize_t m = yv.shape[1]
    out = np.empty(L, dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t l, i, j
    cdef double acc, last, cx, cy, q, seg
    with nogil:
        for l in range(L):
            acc = 0.0
            last = 0.0
            i = 0
            j = 0
            while i < n and j < m:
                cx = xcw[l, i]
                cy = ycw[l, j]
                q = cx if cx < cy else cy
                seg = q - last
                if seg > 0.0:
                    acc += seg * _abs_pow(xv[l, i] - yv[l, j], p)
                last = q
                if cx < cy:
                    i += 1
                elif cy < cx:
                    j += 1
                else:
                    i += 1
                    j += 1
            ov[l] = acc
    return out
