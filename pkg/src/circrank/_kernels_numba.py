"""Numba-jitted implementations of the prime-field hot kernels.

Semantically identical to _kernels_numpy (same contracts, same
deterministic pivoting); rewritten with explicit loops so nopython mode
compiles them.  Importing this module requires numba.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _inv_mod(a: int, p: int) -> int:
    # extended Euclid; a must be nonzero mod p
    t, new_t = 0, 1
    r, new_r = p, a % p
    while new_r != 0:
        quo = r // new_r
        t, new_t = new_t, t - quo * new_t
        r, new_r = new_r, r - quo * new_r
    if t < 0:
        t += p
    return t


@njit(cache=True)
def rank_mod_p(mat, p):
    rows, cols = mat.shape
    a = np.empty((rows, cols), dtype=np.int64)
    for i in range(rows):
        for j in range(cols):
            a[i, j] = mat[i, j] % p
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        piv = -1
        for row in range(rank, rows):
            if a[row, col] != 0:
                piv = row
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, cols):
                tmp = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[rank, col], p)
        for j in range(col, cols):
            a[rank, j] = a[rank, j] * inv % p
        for row in range(rank + 1, rows):
            f = a[row, col]
            if f != 0:
                for j in range(col, cols):
                    a[row, j] = (a[row, j] - f * a[rank, j]) % p
        rank += 1
    return rank


@njit(cache=True)
def poly_divmod(a, b, p):
    la = a.shape[0]
    lb = b.shape[0]
    if la < lb:
        return np.zeros(0, dtype=np.int64), a.astype(np.int64).copy()
    r = a.astype(np.int64).copy()
    q = np.zeros(la - lb + 1, dtype=np.int64)
    inv_lead = _inv_mod(b[lb - 1], p)
    for shift in range(la - lb, -1, -1):
        c = r[shift + lb - 1] * inv_lead % p
        if c != 0:
            q[shift] = c
            for j in range(lb):
                r[shift + j] = (r[shift + j] - c * b[j]) % p
    n = r.shape[0]
    while n > 0 and r[n - 1] == 0:
        n -= 1
    return q, r[:n].copy()


@njit(cache=True)
def poly_gcd(a, b, p):
    x = a.astype(np.int64).copy()
    y = b.astype(np.int64).copy()
    while y.shape[0]:
        _, r = poly_divmod(x, y, p)
        x, y = y, r
    inv = _inv_mod(x[x.shape[0] - 1], p)
    out = np.empty(x.shape[0], dtype=np.int64)
    for i in range(x.shape[0]):
        out[i] = x[i] * inv % p
    return out


@njit(cache=True)
def poly_mul(a, b, p):
    la = a.shape[0]
    lb = b.shape[0]
    if la == 0 or lb == 0:
        return np.zeros(0, dtype=np.int64)
    out = np.zeros(la + lb - 1, dtype=np.int64)
    for i in range(la):
        ai = a[i]
        if ai != 0:
            for j in range(lb):
                out[i + j] = (out[i + j] + ai * b[j]) % p
    return out
