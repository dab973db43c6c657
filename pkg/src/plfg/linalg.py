"""Dense exact linear algebra over F_p on int64 arrays.

Two interchangeable backends implement the hot kernels (row reduction and
binary-form substitution): a numba-compiled one, used by default, and a
vectorized pure-numpy fallback.  Set ``PLFG_PURE_NUMPY=1`` to force the
fallback; ``plfg.linalg.BACKEND`` reports which one is active.

Entries are always canonical residues in ``[0, p)`` with ``p <= 31``, so
int64 intermediates cannot overflow.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

_FORCE_NUMPY = os.environ.get("PLFG_PURE_NUMPY", "") not in ("", "0")


@lru_cache(maxsize=None)
def inverse_table(p: int) -> np.ndarray:
    t = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        t[a] = pow(a, p - 2, p)
    t.setflags(write=False)
    return t


def _rref_numpy(a: np.ndarray, p: int, inv: np.ndarray) -> np.ndarray:
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * inv[a[r, c]] % p
        other = np.nonzero(a[:, c])[0]
        other = other[other != r]
        if other.size:
            a[other] = (a[other] - np.outer(a[other, c], a[r])) % p
        pivots.append(c)
        r += 1
    return np.asarray(pivots, dtype=np.int64)


def _subst_numpy(v: np.ndarray, m11: int, m12: int, m21: int, m22: int,
                 p: int) -> np.ndarray:
    # image of sum_s v[s] * y^s u^(n-s) under y -> m11 y + m12 u, u -> m21 y + m22 u
    n = v.shape[0] - 1
    acc = np.array([v[n] % p], dtype=np.int64)
    upow = np.array([1], dtype=np.int64)
    for s in range(n - 1, -1, -1):
        nxt = np.zeros(upow.shape[0] + 1, dtype=np.int64)
        nxt[1:] += m21 * upow
        nxt[:-1] += m22 * upow
        upow = nxt % p
        acc2 = np.zeros(acc.shape[0] + 1, dtype=np.int64)
        acc2[1:] += m11 * acc
        acc2[:-1] += m12 * acc
        acc2 += v[s] * upow
        acc = acc2 % p
    return acc


BACKEND = "numpy"
_rref_kernel = _rref_numpy
_subst_kernel = _subst_numpy

if not _FORCE_NUMPY:
    try:
        from numba import njit

        @njit(cache=True)
        def _rref_numba(a, p, inv):  # pragma: no cover - compiled
            rows, cols = a.shape
            pivots = np.empty(min(rows, cols), dtype=np.int64)
            r = 0
            for c in range(cols):
                if r == rows:
                    break
                piv = -1
                for i in range(r, rows):
                    if a[i, c] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != r:
                    for j in range(cols):
                        tmp = a[r, j]
                        a[r, j] = a[piv, j]
                        a[piv, j] = tmp
                s = inv[a[r, c]]
                for j in range(cols):
                    a[r, j] = a[r, j] * s % p
                for i in range(rows):
                    f = a[i, c]
                    if f != 0 and i != r:
                        for j in range(cols):
                            a[i, j] = (a[i, j] - f * a[r, j]) % p
                pivots[r] = c
                r += 1
            return pivots[:r].copy()

        @njit(cache=True)
        def _subst_numba(v, m11, m12, m21, m22, p):  # pragma: no cover - compiled
            n = v.shape[0] - 1
            acc = np.zeros(n + 1, dtype=np.int64)
            upow = np.zeros(n + 1, dtype=np.int64)
            acc[0] = v[n] % p
            upow[0] = 1
            alen = 1
            for s in range(n - 1, -1, -1):
                for i in range(alen, 0, -1):
                    upow[i] = (m21 * upow[i - 1] + m22 * upow[i]) % p
                upow[0] = m22 * upow[0] % p
                for i in range(alen, 0, -1):
                    acc[i] = (m11 * acc[i - 1] + m12 * acc[i]) % p
                acc[0] = m12 * acc[0] % p
                alen += 1
                vs = v[s] % p
                if vs != 0:
                    for i in range(alen):
                        acc[i] = (acc[i] + vs * upow[i]) % p
            return acc

        _rref_kernel = _rref_numba
        _subst_kernel = _subst_numba
        BACKEND = "numba"
    except ImportError:  # numba missing: stay on numpy
        pass


def as_fp_matrix(rows, p: int) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    a = np.ascontiguousarray(a % p, dtype=np.int64)
    pivots = _rref_kernel(a, p, inverse_table(p))
    return a, np.asarray(pivots, dtype=np.int64)


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def row_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Echelonized basis of the row space (zero rows dropped)."""
    r, piv = rref(a, p)
    return r[: len(piv)]


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows span the right kernel: all v with a @ v = 0 mod p."""
    cols = a.shape[1]
    r, piv = rref(a, p)
    piv = list(piv)
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(piv):
            basis[k, c] = (-r[i, f]) % p
    return basis


def intersection_dim(a: np.ndarray, b: np.ndarray, p: int) -> int:
    """dim(rowspace(a) & rowspace(b))."""
    ra, rb = rank(a, p), rank(b, p)
    if ra == 0 or rb == 0:
        return 0
    return ra + rb - rank(np.vstack([a, b]), p)


def same_row_space(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    ra, rb = row_basis(a, p), row_basis(b, p)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))


def substitute_binary_form(v: np.ndarray, m: tuple[int, int, int, int],
                           p: int) -> np.ndarray:
    """Apply y -> m[0] y + m[1] u, u -> m[2] y + m[3] u to a homogeneous form.

    ``v[s]`` is the coefficient of y^s u^(n-s); the result uses the same basis.
    """
    v = np.ascontiguousarray(v % p, dtype=np.int64)
    return _subst_kernel(v, m[0] % p, m[1] % p, m[2] % p, m[3] % p, p)
