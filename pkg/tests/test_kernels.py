"""Kernel backends: brute-force parity, numba/numpy agreement, env selection."""

import itertools
import os
import subprocess
import sys

import numpy as np
import pytest

from qcstab import kernels, make_field

BACKENDS = ["numpy"]
try:
    kernels.get_backend("numba")
    BACKENDS.append("numba")
except ImportError:  # pragma: no cover
    pass


def call_scan(impl, rows, synd, tables, start, stop, symplectic):
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    synd = (np.zeros((rows.shape[0], 0), dtype=np.int64) if synd is None
            else np.ascontiguousarray(synd, dtype=np.int64))
    n_pairs = rows.shape[1] // 2 if symplectic else rows.shape[1]
    q = tables["pmod"] if tables["pmod"] > 0 else tables["add"].shape[0]
    return impl.min_weight_scan(rows, synd, n_pairs, tables["deltas"], q,
                                tables["pmod"], tables["add"], tables["mul"],
                                start, stop, symplectic)


def brute_scan(field, rows, synd, start, stop, symplectic):
    k, N = rows.shape
    best, counted = 1 << 62, 0
    for idx in range(start, stop):
        m, digs = idx, []
        for _ in range(k):
            digs.append(m % field.q)
            m //= field.q
        vec = [0] * N
        for i, d in enumerate(digs):
            if d:
                for j in range(N):
                    vec[j] = field.add(vec[j], field.mul(d, int(rows[i, j])))
        if synd is not None:
            s = [0] * synd.shape[1]
            for i, d in enumerate(digs):
                if d:
                    for j in range(synd.shape[1]):
                        s[j] = field.add(s[j], field.mul(d, int(synd[i, j])))
            ok = any(s)
        else:
            ok = idx != 0
        if ok:
            counted += 1
            if symplectic:
                half = N // 2
                w = sum(1 for j in range(half) if vec[j] or vec[j + half])
            else:
                w = sum(1 for v in vec if v)
            best = min(best, w)
    return (None if best >= 1 << 62 else best), counted


@pytest.mark.parametrize("backend", BACKENDS)
def test_scan_matches_brute_force(backend, rng):
    impl = kernels.get_backend(backend)
    for field in [make_field(2, 1), make_field(3, 1), make_field(2, 2),
                  make_field(3, 2), make_field(5, 1)]:
        tab = field.kernel_tables()
        for _ in range(8):
            k = rng.randint(1, 3)
            N = rng.choice([4, 6])
            rows = np.array([[rng.randrange(field.q) for _ in range(N)]
                             for _ in range(k)], dtype=np.int64)
            synd = (np.array([[rng.randrange(field.q)] for _ in range(k)],
                             dtype=np.int64) if rng.random() < 0.5 else None)
            symp = rng.random() < 0.5
            start = rng.randint(0, 2)
            stop = field.q**k
            got_best, got_count = call_scan(impl, rows, synd, tab, start, stop, symp)
            exp_best, exp_count = brute_scan(field, rows, synd, start, stop, symp)
            got_best = None if got_best >= 1 << 62 else int(got_best)
            assert (got_best, got_count) == (exp_best, exp_count)


@pytest.mark.parametrize("backend", BACKENDS)
def test_hist_matches_brute_force(backend, rng):
    impl = kernels.get_backend(backend)
    for field in [make_field(2, 1), make_field(2, 2), make_field(3, 1)]:
        tab = field.kernel_tables()
        q = field.q
        k, N = 3, 5
        rows = np.array([[rng.randrange(q) for _ in range(N)]
                         for _ in range(k)], dtype=np.int64)
        hist = np.zeros(N + 1, dtype=np.int64)
        impl.weight_hist_scan(rows, tab["deltas"], q, tab["pmod"], tab["add"],
                              tab["mul"], 0, q**k, hist)
        expect = np.zeros(N + 1, dtype=np.int64)
        for msg in itertools.product(range(q), repeat=k):
            vec = [0] * N
            for i, d in enumerate(msg):
                if d:
                    for j in range(N):
                        vec[j] = field.add(vec[j], field.mul(d, int(rows[i, j])))
            expect[sum(1 for v in vec if v)] += 1
        assert (hist == expect).all()


def bit_rank(mat):
    """Independent GF(2) rank oracle on integer bitmasks."""
    rows = [int("".join(str(int(b)) for b in r), 2) for r in mat]
    rank = 0
    for bit in range(mat.shape[1] - 1, -1, -1):
        piv = None
        for i, rv in enumerate(rows):
            if rv >> bit & 1:
                piv = i
                break
        if piv is None:
            continue
        pr = rows.pop(piv)
        rows = [rv ^ pr if rv >> bit & 1 else rv for rv in rows]
        rank += 1
    return rank


@pytest.mark.parametrize("backend", BACKENDS)
def test_row_reduce_rank(backend, rng):
    impl = kernels.get_backend(backend)
    gf2 = make_field(2, 1)
    tab = gf2.kernel_tables()
    for _ in range(25):
        m, n = rng.randint(1, 10), rng.randint(1, 10)
        M = np.array([[rng.randrange(2) for _ in range(n)] for _ in range(m)],
                     dtype=np.int64)
        got = impl.row_reduce(M.copy(), tab["pmod"], tab["add"], tab["mul"],
                              tab["neg"], tab["inv"])
        assert got == bit_rank(M)
    # composite field: scaled rows collapse
    gf9 = make_field(3, 2)
    t9 = gf9.kernel_tables()
    row = np.array([1, 4, 7, 2], dtype=np.int64)
    M = np.vstack([row, [gf9.mul(5, int(v)) for v in row],
                   [gf9.mul(7, int(v)) for v in row]]).astype(np.int64)
    assert impl.row_reduce(M.copy(), t9["pmod"], t9["add"], t9["mul"],
                           t9["neg"], t9["inv"]) == 1


@pytest.mark.parametrize("backend", BACKENDS)
def test_matmul_matches_field_ops(backend, rng):
    impl = kernels.get_backend(backend)
    for field in [make_field(2, 1), make_field(2, 2), make_field(5, 1)]:
        tab = field.kernel_tables()
        A = np.array([[rng.randrange(field.q) for _ in range(4)]
                      for _ in range(3)], dtype=np.int64)
        B = np.array([[rng.randrange(field.q) for _ in range(2)]
                      for _ in range(4)], dtype=np.int64)
        C = impl.matmul(A, B, tab["pmod"], tab["add"], tab["mul"])
        for i in range(3):
            for j in range(2):
                acc = 0
                for t in range(4):
                    acc = field.add(acc, field.mul(int(A[i, t]), int(B[t, j])))
                assert acc == C[i, j]


@pytest.mark.parametrize("backend", BACKENDS)
def test_batch_weights(backend, rng):
    impl = kernels.get_backend(backend)
    for field in [make_field(2, 1), make_field(3, 2)]:
        tab = field.kernel_tables()
        rows = np.array([[rng.randrange(field.q) for _ in range(6)]
                         for _ in range(3)], dtype=np.int64)
        digits = np.array([[rng.randrange(field.q) for _ in range(3)]
                           for _ in range(40)], dtype=np.int64)
        for symp in (False, True):
            got = impl.batch_weights(rows, digits, tab["pmod"], tab["add"],
                                     tab["mul"], symp)
            for s in range(40):
                vec = [0] * 6
                for i in range(3):
                    d = int(digits[s, i])
                    if d:
                        for j in range(6):
                            vec[j] = field.add(vec[j], field.mul(d, int(rows[i, j])))
                if symp:
                    w = sum(1 for j in range(3) if vec[j] or vec[j + 3])
                else:
                    w = sum(1 for v in vec if v)
                assert got[s] == w


@pytest.mark.skipif(len(BACKENDS) < 2, reason="numba unavailable")
def test_backends_agree(rng):
    nb = kernels.get_backend("numba")
    npy = kernels.get_backend("numpy")
    for field in [make_field(2, 1), make_field(3, 2)]:
        tab = field.kernel_tables()
        for _ in range(6):
            k, N = rng.randint(1, 3), 6
            rows = np.array([[rng.randrange(field.q) for _ in range(N)]
                             for _ in range(k)], dtype=np.int64)
            a = call_scan(nb, rows, None, tab, 0, field.q**k, False)
            b = call_scan(npy, rows, None, tab, 0, field.q**k, False)
            assert (int(a[0]), int(a[1])) == (int(b[0]), int(b[1]))


def test_scan_worker_invariance(rng):
    gf3 = make_field(3, 1)
    tab = gf3.kernel_tables()
    rows = np.array([[rng.randrange(3) for _ in range(8)] for _ in range(4)],
                    dtype=np.int64)
    ref = kernels.min_weight_scan(rows, None, tab, 0, 81, workers=1)
    for w in (2, 3, 7):
        assert kernels.min_weight_scan(rows, None, tab, 0, 81, workers=w) == ref


def test_env_flag_selects_numpy():
    env = dict(os.environ, QCSTAB_KERNELS="numpy")
    out = subprocess.run(
        [sys.executable, "-c",
         "from qcstab import kernels; print(kernels.active_backend())"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "numpy"


def test_warmup_reports_backend():
    assert kernels.warmup() in ("numba", "numpy")
