"""Pure-numpy kernel backend.

Same contracts as the numba backend: arithmetic runs either modulo a prime
(pmod > 0) or through dense q x q lookup tables (pmod == 0).  Message-space
scans enumerate base-q messages over a [start, stop) index range so results
are independent of how a caller partitions the range.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 4096


def row_reduce(M: np.ndarray, pmod: int, add, mul, neg, inv) -> int:
    rows, cols = M.shape
    r = 0
    for col in range(cols):
        if r >= rows:
            break
        hits = np.nonzero(M[r:, col])[0]
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        pv = int(M[r, col])
        if pv != 1:
            ipv = int(inv[pv])
            if pmod > 0:
                M[r] = (M[r] * ipv) % pmod
            else:
                M[r] = mul[M[r], ipv]
        others = np.nonzero(M[:, col])[0]
        others = others[others != r]
        if others.size:
            f = M[others, col]
            nf = (pmod - f) % pmod if pmod > 0 else neg[f]
            if pmod > 0:
                M[others] = (M[others] + nf[:, None] * M[r][None, :]) % pmod
            else:
                M[others] = add[M[others], mul[nf[:, None], M[r][None, :]]]
        r += 1
    return r


def matmul(A: np.ndarray, B: np.ndarray, pmod: int, add, mul) -> np.ndarray:
    if pmod > 0:
        if pmod * pmod * max(A.shape[1], 1) < (1 << 53):
            prod = A.astype(np.float64) @ B.astype(np.float64)
            return (prod % pmod).astype(np.int64)
        return (A.astype(np.int64) @ B.astype(np.int64)) % pmod
    m, n = A.shape
    k = B.shape[1]
    C = np.zeros((m, k), dtype=np.int64)
    for t in range(n):
        col = A[:, t]
        if not col.any():
            continue
        C = add[C, mul[col[:, None], B[t][None, :]]]
    return C


def batch_weights(rows, digits, pmod, add, mul, symplectic):
    """Weights of the codewords digits @ rows, one per digit row."""
    C = _codewords(rows, digits, pmod, add, mul)
    nz = C != 0
    if symplectic:
        half = rows.shape[1] // 2
        return (nz[:, :half] | nz[:, half:]).sum(axis=1).astype(np.int64)
    return nz.sum(axis=1).astype(np.int64)


def _codewords(rows, digits, pmod, add, mul):
    m = digits.shape[0]
    N = rows.shape[1]
    if pmod > 0 and pmod * pmod * max(rows.shape[0], 1) < (1 << 53):
        # float64 BLAS matmul is exact while entries stay under 2^53
        prod = digits.astype(np.float64) @ rows.astype(np.float64)
        return (prod % pmod).astype(np.int64)
    C = np.zeros((m, N), dtype=np.int64)
    for i in range(rows.shape[0]):
        col = digits[:, i]
        if not col.any():
            continue
        if pmod > 0:
            C = (C + col[:, None] * rows[i][None, :]) % pmod
        else:
            C = add[C, mul[col[:, None], rows[i][None, :]]]
    return C


def _digit_block(lo, hi, k, qsize):
    idx = np.arange(lo, hi, dtype=np.int64)
    digits = np.empty((idx.size, k), dtype=np.int64)
    d = idx.copy()
    for i in range(k):
        digits[:, i] = d % qsize
        d //= qsize
    return digits


def min_weight_scan(rows, synd, n_pairs, deltas, qsize, pmod, add, mul,
                    start, stop, symplectic):
    k, N = rows.shape
    t = synd.shape[1]
    best = 1 << 62
    counted = 0
    for lo in range(start, stop, _CHUNK):
        hi = min(lo + _CHUNK, stop)
        digits = _digit_block(lo, hi, k, qsize)
        C = _codewords(rows, digits, pmod, add, mul)
        if t > 0:
            S = _codewords(synd, digits, pmod, add, mul)
            valid = (S != 0).any(axis=1)
        else:
            valid = np.ones(hi - lo, dtype=bool)
            if lo == 0:
                valid[0] = False
        if symplectic:
            nz = C != 0
            w = (nz[:, :n_pairs] | nz[:, n_pairs:]).sum(axis=1)
        else:
            w = (C != 0).sum(axis=1)
        counted += int(valid.sum())
        if valid.any():
            best = min(best, int(w[valid].min()))
    return best, counted


def weight_hist_scan(rows, deltas, qsize, pmod, add, mul, start, stop, hist):
    k, N = rows.shape
    for lo in range(start, stop, _CHUNK):
        hi = min(lo + _CHUNK, stop)
        digits = _digit_block(lo, hi, k, qsize)
        C = _codewords(rows, digits, pmod, add, mul)
        w = (C != 0).sum(axis=1)
        hist += np.bincount(w, minlength=hist.size)[: hist.size]
