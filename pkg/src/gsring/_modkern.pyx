# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular matrix kernels (hot path of the analysis pipeline).

Same contracts as ``_modkern_py``: int64 matrices with entries in [0, p),
p a prime small enough that p*p fits comfortably in int64.
"""

import numpy as np

cimport numpy as cnp  # noqa: E999 - cython syntax

BACKEND_NAME = "compiled"


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a != 0 mod p
    cdef long long t = 0, newt = 1, r = p, newr = a % p
    cdef long long q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_mod(mat, long long p):
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] m = np.array(mat, dtype=np.int64) % p
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t row = 0, col, i, j, pr
    cdef long long inv, factor, v
    pivots = []
    for col in range(ncols):
        if row == nrows:
            break
        pr = -1
        for i in range(row, nrows):
            if m[i, col] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != row:
            for j in range(ncols):
                v = m[row, j]
                m[row, j] = m[pr, j]
                m[pr, j] = v
        inv = _inv_mod(m[row, col], p)
        if inv != 1:
            for j in range(col, ncols):
                m[row, j] = (m[row, j] * inv) % p
        for i in range(nrows):
            if i == row:
                continue
            factor = m[i, col]
            if factor == 0:
                continue
            for j in range(col, ncols):
                m[i, j] = (m[i, j] - factor * m[row, j]) % p
                if m[i, j] < 0:
                    m[i, j] += p
        pivots.append(col)
        row += 1
    return np.asarray(m[: len(pivots)]), pivots


def reduce_rows_mod(rows, basis, pivots, long long p):
    """Residual of each row after elimination against an RREF basis."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] out = np.array(rows, dtype=np.int64) % p
    cdef cnp.ndarray[cnp.int64_t, ndim=2] b = np.ascontiguousarray(basis, dtype=np.int64)
    cdef Py_ssize_t nrows = out.shape[0], ncols = out.shape[1]
    cdef Py_ssize_t k, i, j, col
    cdef long long factor
    if nrows == 0:
        return np.asarray(out)
    cdef list pivlist = list(pivots)
    for k in range(len(pivlist)):
        col = pivlist[k]
        for i in range(nrows):
            factor = out[i, col]
            if factor == 0:
                continue
            for j in range(ncols):
                out[i, j] = (out[i, j] - factor * b[k, j]) % p
                if out[i, j] < 0:
                    out[i, j] += p
    return np.asarray(out)
