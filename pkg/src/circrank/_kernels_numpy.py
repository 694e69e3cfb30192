"""Pure-numpy fallback implementations of the prime-field hot kernels.

All functions take int64 numpy arrays of residues in [0, p).  Polynomial
arrays are coefficient vectors, lowest degree first, with no trailing
zeros; the zero polynomial is the empty array.  Callers guarantee p is a
prime below 2**31 so every intermediate product fits in int64.
"""

from __future__ import annotations

import numpy as np


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank of a matrix over GF(p) by row reduction.

    Pivoting is deterministic: columns are processed left to right and the
    first row with a nonzero entry in the current column becomes the pivot.
    """
    a = np.array(mat, dtype=np.int64, copy=True) % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        hits = np.nonzero(a[rank:, col])[0]
        if hits.size == 0:
            continue
        piv = rank + int(hits[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank, col:] = (a[rank, col:] * inv) % p
        below = a[rank + 1:, col]
        if below.size:
            a[rank + 1:, col:] = (a[rank + 1:, col:] - np.outer(below, a[rank, col:])) % p
        rank += 1
    return rank


def poly_divmod(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Quotient and remainder of a by b over GF(p); b must be nonzero."""
    la, lb = a.shape[0], b.shape[0]
    if la < lb:
        return np.zeros(0, dtype=np.int64), np.array(a, dtype=np.int64, copy=True)
    r = np.array(a, dtype=np.int64, copy=True)
    q = np.zeros(la - lb + 1, dtype=np.int64)
    inv_lead = pow(int(b[-1]), -1, p)
    for shift in range(la - lb, -1, -1):
        c = r[shift + lb - 1] * inv_lead % p
        if c:
            q[shift] = c
            r[shift:shift + lb] = (r[shift:shift + lb] - c * b) % p
    return q, _trim(r)


def poly_gcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Monic gcd by the Euclidean algorithm; a and b must not both be zero."""
    a = np.array(a, dtype=np.int64, copy=True)
    b = np.array(b, dtype=np.int64, copy=True)
    while b.shape[0]:
        _, r = poly_divmod(a, b, p)
        a, b = b, r
    inv = pow(int(a[-1]), -1, p)
    return a * inv % p


def poly_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Schoolbook product over GF(p), reduced after every row to stay in int64."""
    la, lb = a.shape[0], b.shape[0]
    if la == 0 or lb == 0:
        return np.zeros(0, dtype=np.int64)
    out = np.zeros(la + lb - 1, dtype=np.int64)
    for i in range(la):
        if a[i]:
            out[i:i + lb] = (out[i:i + lb] + a[i] * b) % p
    return out


def _trim(v: np.ndarray) -> np.ndarray:
    n = v.shape[0]
    while n and v[n - 1] == 0:
        n -= 1
    return v[:n]
