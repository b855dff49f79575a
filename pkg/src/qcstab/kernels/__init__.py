"""Kernel backend selection.

The default backend is numba when importable; set QCSTAB_KERNELS=numpy to
force the pure-numpy fallback (or QCSTAB_KERNELS=numba to require the jitted
path).  Both backends implement identical contracts, so every result is
backend-independent; benchmarks/bench_kernels.py compares their speed.

Scans accept a worker count and partition the message-index range into
contiguous blocks; minima/histograms combine associatively, so results do not
depend on the partition.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _numpy

_MAX_INDEX = 1 << 62

_forced = os.environ.get("QCSTAB_KERNELS", "").strip().lower()
if _forced not in ("", "auto", "numba", "numpy"):
    raise ValueError(f"QCSTAB_KERNELS must be numba or numpy, not {_forced!r}")

if _forced == "numpy":
    _impl = _numpy
    _BACKEND = "numpy"
else:
    try:
        from . import _numba as _impl  # noqa: F401

        _BACKEND = "numba"
    except ImportError:
        if _forced == "numba":
            raise
        _impl = _numpy
        _BACKEND = "numpy"


def active_backend() -> str:
    return _BACKEND


def get_backend(name: str):
    """Explicit backend module (used by the benchmark and parity tests)."""
    if name == "numpy":
        return _numpy
    if name == "numba":
        from . import _numba

        return _numba
    raise ValueError(f"unknown backend {name!r}")


def _as_matrix(a) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(a, dtype=np.int64))


def row_reduce(mat, tables, inplace=False):
    """RREF in place; returns (matrix, rank)."""
    M = mat if inplace else mat.copy()
    M = _as_matrix(M)
    if M.size == 0:
        return M, 0
    rank = _impl.row_reduce(
        M, tables["pmod"], tables["add"], tables["mul"], tables["neg"],
        tables["inv"],
    )
    return M, int(rank)


def matmul(A, B, tables) -> np.ndarray:
    A = _as_matrix(A)
    B = _as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"matmul shapes {A.shape} x {B.shape}")
    if A.size == 0 or B.size == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    return _impl.matmul(A, B, tables["pmod"], tables["add"], tables["mul"])


def batch_weights(rows, digits, tables, symplectic=False) -> np.ndarray:
    """Weights of digits @ rows, one per digit row (Monte-Carlo helper)."""
    rows = _as_matrix(rows)
    digits = _as_matrix(digits)
    pmod = tables["pmod"]
    if pmod > 0:
        # the BLAS path is exact and beats the jitted loop for prime fields
        return _numpy.batch_weights(rows, digits, pmod, tables["add"],
                                    tables["mul"], symplectic)
    return _impl.batch_weights(rows, digits, pmod, tables["add"],
                               tables["mul"], symplectic)


def _ranges(start: int, stop: int, workers: int):
    total = stop - start
    workers = max(1, min(workers, total)) if total > 0 else 1
    step = (total + workers - 1) // workers
    return [(start + i * step, min(start + (i + 1) * step, stop))
            for i in range(workers) if start + i * step < stop]


def min_weight_scan(rows, synd, tables, start, stop, symplectic=False,
                    workers=1):
    """Min weight of {m . rows : start <= index(m) < stop, m selected}.

    Messages with m . synd == 0 are skipped (synd with zero columns means
    "skip only the zero message").  Returns (best, counted); best is None when
    nothing was counted.
    """
    if stop > _MAX_INDEX:
        raise OverflowError("message index range exceeds 2^62")
    rows = _as_matrix(rows)
    synd = _as_matrix(synd) if synd is not None else np.zeros(
        (rows.shape[0], 0), dtype=np.int64
    )
    n_pairs = rows.shape[1] // 2 if symplectic else rows.shape[1]
    qsize = tables["pmod"] if tables["pmod"] > 0 else tables["add"].shape[0]

    def run(rng):
        return _impl.min_weight_scan(
            rows, synd, n_pairs, tables["deltas"], qsize, tables["pmod"],
            tables["add"], tables["mul"], rng[0], rng[1], symplectic,
        )

    pieces = _ranges(start, stop, workers)
    if len(pieces) > 1 and _BACKEND == "numba":
        with ThreadPoolExecutor(max_workers=len(pieces)) as pool:
            results = list(pool.map(run, pieces))
    else:
        results = [run(rng) for rng in pieces]
    best = min((b for b, _ in results), default=1 << 62)
    counted = sum(c for _, c in results)
    return (None if best >= 1 << 62 else int(best)), int(counted)


def weight_hist_scan(rows, tables, start, stop, workers=1) -> np.ndarray:
    """Hamming-weight histogram of all messages with index in [start, stop)."""
    if stop > _MAX_INDEX:
        raise OverflowError("message index range exceeds 2^62")
    rows = _as_matrix(rows)
    qsize = tables["pmod"] if tables["pmod"] > 0 else tables["add"].shape[0]

    def run(rng):
        hist = np.zeros(rows.shape[1] + 1, dtype=np.int64)
        _impl.weight_hist_scan(
            rows, tables["deltas"], qsize, tables["pmod"], tables["add"],
            tables["mul"], rng[0], rng[1], hist,
        )
        return hist

    pieces = _ranges(start, stop, workers)
    if len(pieces) > 1 and _BACKEND == "numba":
        with ThreadPoolExecutor(max_workers=len(pieces)) as pool:
            results = list(pool.map(run, pieces))
    else:
        results = [run(rng) for rng in pieces]
    total = np.zeros(rows.shape[1] + 1, dtype=np.int64)
    for h in results:
        total += h
    return total


def warmup(tables=None) -> str:
    """Force jit compilation of every kernel (no-op on the numpy backend)."""
    if tables is None:
        dummy = np.zeros((1, 1), dtype=np.int64)
        tables = {
            "pmod": 2, "add": dummy, "mul": dummy,
            "neg": np.array([0, 1], dtype=np.int64),
            "inv": np.array([0, 1], dtype=np.int64),
            "deltas": np.array([1, 1], dtype=np.int64),
        }
    rows = np.array([[1, 0, 1]], dtype=np.int64)
    min_weight_scan(rows, None, tables, 0, 2)
    min_weight_scan(rows, np.array([[1]], dtype=np.int64), tables, 0, 2,
                    symplectic=False)
    weight_hist_scan(rows, tables, 0, 2)
    M = np.array([[1, 1], [1, 0]], dtype=np.int64)
    row_reduce(M, tables)
    matmul(M, M, tables)
    digits = np.array([[1]], dtype=np.int64)
    _impl.batch_weights(rows, digits, tables["pmod"], tables["add"],
                        tables["mul"], False)
    return _BACKEND
