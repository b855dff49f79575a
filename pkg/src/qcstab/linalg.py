"""Matrix utilities over GF(q) on integer-encoded numpy arrays."""

from __future__ import annotations

import numpy as np

from . import kernels
from .field import FieldSpec


def row_reduce(mat: np.ndarray, field: FieldSpec):
    """(RREF copy, rank)."""
    return kernels.row_reduce(np.asarray(mat, dtype=np.int64), field.kernel_tables())


def rank(mat: np.ndarray, field: FieldSpec) -> int:
    return row_reduce(mat, field)[1]


def matmul(A: np.ndarray, B: np.ndarray, field: FieldSpec) -> np.ndarray:
    return kernels.matmul(A, B, field.kernel_tables())


def frob_rows(A: np.ndarray, field: FieldSpec, k: int) -> np.ndarray:
    """Entrywise x -> x^(p^k)."""
    tab = field.frob_table(k)
    return tab[np.asarray(A, dtype=np.int64)]


def neg_rows(A: np.ndarray, field: FieldSpec) -> np.ndarray:
    tab = field.kernel_tables()
    A = np.asarray(A, dtype=np.int64)
    if tab["pmod"] > 0:
        return (tab["pmod"] - A) % tab["pmod"]
    return tab["neg"][A]


def euclidean_gram(A: np.ndarray, B: np.ndarray, field: FieldSpec) -> np.ndarray:
    """G[i, j] = <A_i, B_j> (standard inner product of rows)."""
    return matmul(A, np.asarray(B, dtype=np.int64).T, field)


def symplectic_gram(A: np.ndarray, B: np.ndarray, field: FieldSpec) -> np.ndarray:
    """G[i, j] = <A_i, B_j>_s for rows of length 2n."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] % 2 or A.shape[1] != B.shape[1]:
        raise ValueError("symplectic gram needs matching even-length rows")
    n = A.shape[1] // 2
    left = matmul(A[:, :n], B[:, n:].T, field)
    right = matmul(A[:, n:], B[:, :n].T, field)
    tab = field.kernel_tables()
    if tab["pmod"] > 0:
        return (left - right) % tab["pmod"]
    return tab["add"][left, tab["neg"][right]]


def hermitian_gram(A: np.ndarray, B: np.ndarray, field: FieldSpec) -> np.ndarray:
    """G[i, j] = <A_i, B_j>_h = sum_t A[i,t]^q B[j,t] over GF(q^2)."""
    if field.r % 2:
        raise ValueError(f"{field} has no subfield of square-root order")
    return matmul(frob_rows(A, field, field.r // 2),
                  np.asarray(B, dtype=np.int64).T, field)


def in_rowspace(sub: np.ndarray, big: np.ndarray, field: FieldSpec) -> bool:
    """True when every row of sub lies in the row space of big."""
    sub = np.asarray(sub, dtype=np.int64)
    big = np.asarray(big, dtype=np.int64)
    if sub.size == 0:
        return True
    base = rank(big, field)
    return rank(np.vstack([big, sub]), field) == base
