"""Exact dense linear algebra over a finite field.

Matrices are ``numpy`` integer arrays of element codes of a :class:`GF`.
Row operations go through the field's vectorised ``vadd``/``vmul``, so the
same code serves prime fields, ``F_4`` and the big extension fields alike.
"""

from __future__ import annotations

import numpy as np


class SingularMatrix(ValueError):
    pass


def _arr(M):
    return np.array(M, dtype=np.int64, copy=True)


def rref(K, M, ncols: int | None = None):
    """Reduced row echelon form.

    Pivots are only searched among the first ``ncols`` columns (all by
    default); row operations are applied to the full rows, which is how
    augmented systems are handled.  Returns ``(R, pivot_columns)``.
    """
    M = _arr(M)
    if M.ndim != 2:
        raise ValueError("expected a 2-d array")
    rows, cols = M.shape
    if ncols is None:
        ncols = cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        lead = int(M[r, c])
        if lead != 1:
            M[r] = K.vmul(K.inv(lead), M[r])
        others = np.flatnonzero(M[:, c])
        others = others[others != r]
        if others.size:
            f = M[others, c][:, None]
            M[others] = K.vsub(M[others], K.vmul(f, M[r][None, :]))
        pivots.append(c)
        r += 1
    return M, pivots


def rank(K, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(K, M)[1])


def solve(K, A, b):
    """One solution of ``A x = b`` (free variables set to zero) or ``None``."""
    sols = solve_many(K, A, np.asarray(b).reshape(-1, 1))
    return sols[0]


def solve_many(K, A, B):
    """Solve ``A X = B`` column by column.

    Returns a list with, for every column of ``B``, either the solution
    vector with free variables set to zero or ``None`` if inconsistent.
    """
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    rows, n = A.shape if A.ndim == 2 else (B.shape[0], 0)
    A = A.reshape(rows, n)
    aug = np.concatenate([A, B], axis=1)
    R, pivots = rref(K, aug, ncols=n)
    rk = len(pivots)
    out = []
    for t in range(B.shape[1]):
        col = R[:, n + t]
        if np.any(col[rk:] != 0):
            out.append(None)
            continue
        x = np.zeros(n, dtype=np.int64)
        for i, c in enumerate(pivots):
            x[c] = col[i]
        out.append(x)
    return out


def inverse(K, M):
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    aug = np.concatenate([M, np.eye(n, dtype=np.int64)], axis=1)
    R, pivots = rref(K, aug, ncols=n)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return R[:, n:]


def det(K, M) -> int:
    """Determinant by elimination."""
    M = _arr(M)
    n = M.shape[0]
    d = 1
    for c in range(n):
        nz = np.flatnonzero(M[c:, c])
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            M[[c, piv]] = M[[piv, c]]
            d = K.neg(d)
        lead = int(M[c, c])
        d = K.mul(d, lead)
        inv = K.inv(lead)
        below = np.flatnonzero(M[c + 1:, c]) + c + 1
        if below.size:
            f = K.vmul(M[below, c], inv)[:, None]
            M[below] = K.vsub(M[below], K.vmul(f, M[c][None, :]))
    return d


def matmul(K, A, B):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = K.vadd(out, K.vmul(A[:, k:k + 1], B[k:k + 1, :]))
    return out


def matvec(K, A, v):
    return matmul(K, A, np.asarray(v).reshape(-1, 1)).ravel()


def combine(K, coeffs, mats):
    """``sum_i coeffs[i] * mats[i]`` over ``K``."""
    mats = np.asarray(mats, dtype=np.int64)
    out = np.zeros(mats.shape[1:], dtype=np.int64)
    for c, M in zip(coeffs, mats):
        if c:
            out = K.vadd(out, K.vmul(int(c), M))
    return out


def nullspace(K, M):
    """Basis of the right kernel, as rows."""
    M = np.asarray(M, dtype=np.int64)
    R, pivots = rref(K, M)
    n = M.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = K.neg(int(R[i, f]))
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), n)


def batch_rank(K, mats) -> np.ndarray:
    """Ranks of a stack of matrices, shape ``(B, r, c)``, eliminated in
    lockstep."""
    M = _arr(mats)
    B, r, c = M.shape
    row = np.zeros(B, dtype=np.int64)
    ar = np.arange(r)
    for col in range(c):
        cand = (M[:, :, col] != 0) & (ar[None, :] >= row[:, None])
        has = np.flatnonzero(cand.any(axis=1))
        if has.size == 0:
            continue
        piv = cand[has].argmax(axis=1)
        rr = row[has]
        top = M[has, rr].copy()
        M[has, rr] = M[has, piv]
        M[has, piv] = top
        prow = K.vmul(K.vinv(M[has, rr, col])[:, None], M[has, rr])
        M[has, rr] = prow
        f = np.where(ar[None, :] > rr[:, None], M[has, :, col], 0)
        M[has] = K.vsub(M[has], K.vmul(f[:, :, None], prow[:, None, :]))
        row[has] += 1
    return row


def random_invertible(K, n: int, rng) -> np.ndarray:
    while True:
        P = rng.integers(0, K.order, size=(n, n))
        if rank(K, P) == n:
            return P.astype(np.int64)


class Echelon:
    """Incrementally maintained row space in reduced echelon form.

    Used by subset searches: ``try_add`` reduces a vector against the
    current rows and appends it if independent.
    """

    def __init__(self, K, width: int):
        self.K = K
        self.width = width
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def copy(self) -> "Echelon":
        e = Echelon(self.K, self.width)
        e.rows = list(self.rows)
        e.pivots = list(self.pivots)
        return e

    def reduce(self, v) -> np.ndarray:
        K = self.K
        v = np.asarray(v, dtype=np.int64)
        for row, c in zip(self.rows, self.pivots):
            a = int(v[c])
            if a:
                v = K.vsub(v, K.vmul(a, row))
        return v

    def try_add(self, v) -> bool:
        K = self.K
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = K.vmul(K.inv(int(v[c])), v)
        for i, row in enumerate(self.rows):
            a = int(row[c])
            if a:
                self.rows[i] = K.vsub(row, K.vmul(a, v))
        self.rows.append(v)
        self.pivots.append(c)
        return True

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    def __len__(self):
        return len(self.rows)
