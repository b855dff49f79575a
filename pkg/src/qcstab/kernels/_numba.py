"""Numba kernel backend: jitted hot loops for scans and GF(q) linear algebra.

The message-space scans walk a base-q odometer and update the codeword,
its weight and the skip-syndrome incrementally, so the per-message cost is
proportional to the weight of the touched generator rows rather than to a
fresh matrix product.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def row_reduce(M, pmod, add, mul, neg, inv):
    rows, cols = M.shape
    r = 0
    for col in range(cols):
        if r >= rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = tmp
        pv = M[r, col]
        if pv != 1:
            ipv = inv[pv]
            for j in range(col, cols):
                if M[r, j] != 0:
                    if pmod > 0:
                        M[r, j] = (M[r, j] * ipv) % pmod
                    else:
                        M[r, j] = mul[M[r, j], ipv]
        for i in range(rows):
            if i != r and M[i, col] != 0:
                f = M[i, col]
                nf = (pmod - f) % pmod if pmod > 0 else neg[f]
                for j in range(col, cols):
                    v = M[r, j]
                    if v != 0:
                        if pmod > 0:
                            M[i, j] = (M[i, j] + nf * v) % pmod
                        else:
                            M[i, j] = add[M[i, j], mul[nf, v]]
        r += 1
    return r


@njit(cache=True, nogil=True)
def matmul(A, B, pmod, add, mul):
    m, n = A.shape
    k = B.shape[1]
    C = np.zeros((m, k), dtype=np.int64)
    for i in range(m):
        for t in range(n):
            a = A[i, t]
            if a == 0:
                continue
            for j in range(k):
                b = B[t, j]
                if b == 0:
                    continue
                if pmod > 0:
                    C[i, j] = (C[i, j] + a * b) % pmod
                else:
                    C[i, j] = add[C[i, j], mul[a, b]]
    return C


@njit(cache=True, nogil=True)
def min_weight_scan(rows, synd, n_pairs, deltas, qsize, pmod, add, mul,
                    start, stop, symplectic):
    k, N = rows.shape
    t = synd.shape[1]
    digits = np.zeros(k, dtype=np.int64)
    c = np.zeros(N, dtype=np.int64)
    s = np.zeros(t, dtype=np.int64)
    pair_cnt = np.zeros(n_pairs, dtype=np.int64)

    m = start
    for i in range(k):
        d = m % qsize
        m //= qsize
        digits[i] = d
        if d != 0:
            for j in range(N):
                rv = rows[i, j]
                if rv != 0:
                    if pmod > 0:
                        c[j] = (c[j] + d * rv) % pmod
                    else:
                        c[j] = add[c[j], mul[d, rv]]
            for j in range(t):
                sv = synd[i, j]
                if sv != 0:
                    if pmod > 0:
                        s[j] = (s[j] + d * sv) % pmod
                    else:
                        s[j] = add[s[j], mul[d, sv]]
    w = 0
    if symplectic:
        for j in range(N):
            if c[j] != 0:
                pj = j if j < n_pairs else j - n_pairs
                pair_cnt[pj] += 1
        for j in range(n_pairs):
            if pair_cnt[j] > 0:
                w += 1
    else:
        for j in range(N):
            if c[j] != 0:
                w += 1
    snz = 0
    for j in range(t):
        if s[j] != 0:
            snz += 1

    best = np.int64(1 << 62)
    counted = np.int64(0)
    idx = start
    while idx < stop:
        if (t > 0 and snz > 0) or (t == 0 and idx != 0):
            counted += 1
            if w < best:
                best = w
        idx += 1
        if idx >= stop:
            break
        i = 0
        while True:
            v = digits[i]
            delta = deltas[v]
            for j in range(N):
                rv = rows[i, j]
                if rv != 0:
                    old = c[j]
                    if pmod > 0:
                        nv = (old + delta * rv) % pmod
                    else:
                        nv = add[old, mul[delta, rv]]
                    c[j] = nv
                    if symplectic:
                        pj = j if j < n_pairs else j - n_pairs
                        if old == 0 and nv != 0:
                            if pair_cnt[pj] == 0:
                                w += 1
                            pair_cnt[pj] += 1
                        elif old != 0 and nv == 0:
                            pair_cnt[pj] -= 1
                            if pair_cnt[pj] == 0:
                                w -= 1
                    else:
                        if old == 0 and nv != 0:
                            w += 1
                        elif old != 0 and nv == 0:
                            w -= 1
            for j in range(t):
                sv = synd[i, j]
                if sv != 0:
                    old = s[j]
                    if pmod > 0:
                        nv = (old + delta * sv) % pmod
                    else:
                        nv = add[old, mul[delta, sv]]
                    s[j] = nv
                    if old == 0 and nv != 0:
                        snz += 1
                    elif old != 0 and nv == 0:
                        snz -= 1
            if v == qsize - 1:
                digits[i] = 0
                i += 1
            else:
                digits[i] = v + 1
                break
    return best, counted


@njit(cache=True, nogil=True)
def batch_weights(rows, digits, pmod, add, mul, symplectic):
    k, N = rows.shape
    m = digits.shape[0]
    half = N // 2
    out = np.zeros(m, dtype=np.int64)
    c = np.zeros(N, dtype=np.int64)
    for s in range(m):
        for j in range(N):
            c[j] = 0
        for i in range(k):
            d = digits[s, i]
            if d == 0:
                continue
            for j in range(N):
                rv = rows[i, j]
                if rv != 0:
                    if pmod > 0:
                        c[j] = (c[j] + d * rv) % pmod
                    else:
                        c[j] = add[c[j], mul[d, rv]]
        w = 0
        if symplectic:
            for j in range(half):
                if c[j] != 0 or c[j + half] != 0:
                    w += 1
        else:
            for j in range(N):
                if c[j] != 0:
                    w += 1
        out[s] = w
    return out


@njit(cache=True, nogil=True)
def weight_hist_scan(rows, deltas, qsize, pmod, add, mul, start, stop, hist):
    k, N = rows.shape
    digits = np.zeros(k, dtype=np.int64)
    c = np.zeros(N, dtype=np.int64)
    m = start
    for i in range(k):
        d = m % qsize
        m //= qsize
        digits[i] = d
        if d != 0:
            for j in range(N):
                rv = rows[i, j]
                if rv != 0:
                    if pmod > 0:
                        c[j] = (c[j] + d * rv) % pmod
                    else:
                        c[j] = add[c[j], mul[d, rv]]
    w = 0
    for j in range(N):
        if c[j] != 0:
            w += 1
    idx = start
    while idx < stop:
        hist[w] += 1
        idx += 1
        if idx >= stop:
            break
        i = 0
        while True:
            v = digits[i]
            delta = deltas[v]
            for j in range(N):
                rv = rows[i, j]
                if rv != 0:
                    old = c[j]
                    if pmod > 0:
                        nv = (old + delta * rv) % pmod
                    else:
                        nv = add[old, mul[delta, rv]]
                    c[j] = nv
                    if old == 0 and nv != 0:
                        w += 1
                    elif old != 0 and nv == 0:
                        w -= 1
            if v == qsize - 1:
                digits[i] = 0
                i += 1
            else:
                digits[i] = v + 1
                break
