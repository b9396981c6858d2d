"""Pure-Python (numpy) modular matrix kernels.

Fallback for the compiled extension in ``_modkern.pyx``; same contracts.
Matrices are 2-D ``int64`` arrays with entries already reduced into
``[0, p)``.  Row elimination is vectorised per pivot, so this path is slower
than the compiled one mainly on the many-small-matrices workloads that
dominate ring analysis.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def rref_mod(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``mat`` over F_p.

    Returns the nonzero rows (pivot entries 1, pivot columns cleared
    elsewhere) together with the pivot column indices.  The result is the
    canonical representative of the row space.
    """
    m = np.array(mat, dtype=np.int64) % p
    nrows, ncols = m.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.nonzero(m[row:, col])[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            m[[row, pr]] = m[[pr, row]]
        inv = pow(int(m[row, col]), p - 2, p)
        m[row] = (m[row] * inv) % p
        others = np.nonzero(m[:, col])[0]
        others = others[others != row]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, col], m[row])) % p
        pivots.append(col)
        row += 1
    return m[: len(pivots)], pivots


def reduce_rows_mod(rows: np.ndarray, basis: np.ndarray, pivots, p: int) -> np.ndarray:
    """Residual of each row after elimination against an RREF basis."""
    out = np.array(rows, dtype=np.int64) % p
    if out.size == 0:
        return out
    for k, col in enumerate(pivots):
        coef = out[:, col]
        nz = np.nonzero(coef)[0]
        if nz.size:
            out[nz] = (out[nz] - np.outer(coef[nz], basis[k])) % p
    return out
