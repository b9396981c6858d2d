"""Exact scalar arithmetic and canonical linear algebra over the base field.

Two scalar systems are supported: the rationals (``Fraction``, or gmpy2's
``mpq`` when importable, which is several times faster) and prime fields
F_p (Python ints reduced into ``[0, p)``).  Matrix routines over F_p run on
the selected kernel backend (compiled or numpy); rational matrices use pure
Python row operations, which is fine because every rational workload in the
pipeline is small.

All row-space computations return reduced row echelon form with unit pivots
and no zero rows, so equal subspaces have identical representations.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from gsring import backend

try:
    from gmpy2 import mpq as _QTYPE
except ImportError:  # pragma: no cover - environment dependent
    _QTYPE = Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class RationalScalars:
    """Exact rational arithmetic; matrices are lists of scalar lists."""

    kind = "Q"
    char = 0

    zero = _QTYPE(0)
    one = _QTYPE(1)

    def __eq__(self, other):
        return isinstance(other, RationalScalars)

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return "RationalScalars()"

    # scalar ops
    def from_int(self, i: int):
        return _QTYPE(i)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def is_zero(self, x) -> bool:
        return not x

    def parse(self, text: str):
        try:
            return _QTYPE(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {text!r}") from exc

    def fmt(self, x) -> str:
        return str(x)

    # matrices
    def mat(self, rows):
        return [list(r) for r in rows]

    def rows(self, m):
        return tuple(tuple(r) for r in m)

    def nrows(self, m) -> int:
        return len(m)

    def eye(self, n):
        return [[self.one if i == j else self.zero for j in range(n)] for i in range(n)]

    def zeros(self, r, c):
        return [[self.zero] * c for _ in range(r)]

    def stack(self, *mats):
        out = []
        for m in mats:
            out.extend(list(r) for r in m)
        return out

    def is_zero_mat(self, m) -> bool:
        return all(not x for r in m for x in r)

    def rref(self, m):
        m = [list(r) for r in m]
        nrows = len(m)
        ncols = len(m[0]) if nrows else 0
        pivots = []
        row = 0
        for col in range(ncols):
            if row == nrows:
                break
            pr = next((i for i in range(row, nrows) if m[i][col]), None)
            if pr is None:
                continue
            if pr != row:
                m[row], m[pr] = m[pr], m[row]
            inv = 1 / m[row][col]
            if inv != 1:
                m[row] = [v * inv for v in m[row]]
            for i in range(nrows):
                if i == row:
                    continue
                f = m[i][col]
                if f:
                    ri, rr = m[i], m[row]
                    m[i] = [a - f * b for a, b in zip(ri, rr)]
            pivots.append(col)
            row += 1
        return m[: len(pivots)], pivots

    def reduce_rows(self, m, basis, pivots):
        out = [list(r) for r in m]
        for k, col in enumerate(pivots):
            bk = basis[k]
            for r in out:
                f = r[col]
                if f:
                    for j, bv in enumerate(bk):
                        if bv:
                            r[j] = r[j] - f * bv
        return out

    def matmul(self, a, b):
        if not a:
            return []
        ncols = len(b[0]) if b else 0
        out = []
        for ra in a:
            acc = [self.zero] * ncols
            for x, rb in zip(ra, b):
                if x:
                    for j, y in enumerate(rb):
                        if y:
                            acc[j] = acc[j] + x * y
            out.append(acc)
        return out

    def left_kernel(self, m):
        """Canonical basis of row vectors c with c @ m = 0."""
        n = len(m)
        if n == 0:
            return []
        w = len(m[0])
        aug = [list(r) + [self.one if i == j else self.zero for j in range(n)]
               for i, r in enumerate(m)]
        red, pivots = self.rref(aug)
        return [r[w:] for r, p in zip(red, pivots) if p >= w]

    def solve_left(self, a, b):
        """One z with z @ a = b, or None if inconsistent."""
        n = len(a)
        if n == 0:
            return None
        w = len(a[0])
        aug = [[a[i][j] for i in range(n)] + [b[j]] for j in range(w)]
        red, pivots = self.rref(aug)
        z = [self.zero] * n
        for r, p in zip(red, pivots):
            if p == n:
                return None
            z[p] = r[n]
        return tuple(z)


class PrimeScalars:
    """Arithmetic in F_p; matrices are int64 numpy arrays on the kernel backend."""

    kind = "Fp"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 1 << 20:
            raise ValueError("prime modulus too large for the int64 kernels")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def __eq__(self, other):
        return isinstance(other, PrimeScalars) and other.p == self.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"PrimeScalars({self.p})"

    # scalar ops
    def from_int(self, i: int):
        return i % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def parse(self, text: str):
        if "/" in text:
            num, _, den = text.partition("/")
            return self.mul(self.from_int(int(num)), self.inv(int(den)))
        try:
            return self.from_int(int(text))
        except ValueError as exc:
            raise ValueError(f"malformed coefficient {text!r}") from exc

    def fmt(self, x) -> str:
        return str(x % self.p)

    # matrices
    def mat(self, rows):
        rows = list(rows)
        if not rows:
            return np.zeros((0, 0), dtype=np.int64)
        return np.array(rows, dtype=np.int64) % self.p

    def rows(self, m):
        return tuple(tuple(int(v) for v in r) for r in m)

    def nrows(self, m) -> int:
        return int(m.shape[0])

    def eye(self, n):
        return np.eye(n, dtype=np.int64)

    def zeros(self, r, c):
        return np.zeros((r, c), dtype=np.int64)

    def stack(self, *mats):
        mats = [m for m in mats if m.shape[0]]
        if not mats:
            return np.zeros((0, 0), dtype=np.int64)
        return np.vstack(mats)

    def is_zero_mat(self, m) -> bool:
        return m.size == 0 or not m.any()

    def rref(self, m):
        if m.shape[0] == 0 or m.shape[1] == 0:
            return np.zeros((0, m.shape[1] if m.ndim == 2 else 0), dtype=np.int64), []
        return backend.rref_mod(m, self.p)

    def reduce_rows(self, m, basis, pivots):
        if m.shape[0] == 0 or not pivots:
            return np.array(m, dtype=np.int64) % self.p
        return backend.reduce_rows_mod(m, basis, pivots, self.p)

    def matmul(self, a, b):
        if a.shape[0] == 0 or b.shape[0] == 0:
            return np.zeros((a.shape[0], b.shape[1] if b.ndim == 2 else 0), dtype=np.int64)
        return (a @ b) % self.p

    def left_kernel(self, m):
        n = m.shape[0]
        if n == 0:
            return np.zeros((0, 0), dtype=np.int64)
        w = m.shape[1]
        aug = np.hstack([m, np.eye(n, dtype=np.int64)])
        red, pivots = self.rref(aug)
        keep = [i for i, p in enumerate(pivots) if p >= w]
        return red[keep, w:]

    def solve_left(self, a, b):
        n = a.shape[0]
        if n == 0:
            return None
        aug = np.hstack([a.T, np.array(b, dtype=np.int64).reshape(-1, 1)])
        red, pivots = self.rref(aug)
        z = [0] * n
        for r, p in zip(red, pivots):
            if p == n:
                return None
            z[p] = int(r[n])
        return tuple(z)


def scalars_for(char: int):
    """Scalar system for residue characteristic 0 (rationals) or prime p."""
    return RationalScalars() if char == 0 else PrimeScalars(char)
