"""
Schmidt rank of a state = linear rank of its coefficient matrix.

Numeric rank comes from the singular values; exact rank from fraction-free
(Bareiss) elimination over the integers, or plain elimination mod p.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from schmidt_subspaces.config import get_conf
from schmidt_subspaces.utils.exceptions import (
    DimensionError, DomainError, FieldMismatchError, NumericError
)
from .field import COMPLEX, GFP, RATIONAL
from .matrix import StateMatrix


@dataclass(frozen=True)
class SchmidtInfo:
    rank: int
    singular_values: Tuple[float, ...] = ()
    # absolute threshold: relative tolerance times the largest singular value
    tolerance_used: Optional[float] = None


def schmidt_decomposition(m: StateMatrix):
    """
    Returns (u, s, vh) with M = u @ diag(s) @ vh; the columns of u and the rows
    of vh are the local Schmidt vectors, s the Schmidt coefficients.
    """
    a = _finite_array(m)
    return np.linalg.svd(a, full_matrices=False)


def schmidt_rank_numeric(m: StateMatrix, tol: float = None) -> SchmidtInfo:
    if tol is None:
        tol = get_conf().numeric_tolerance
    if not tol > 0:
        raise DomainError("tol must be positive", tol=tol)

    s = np.linalg.svd(_finite_array(m), compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return SchmidtInfo(0, tuple(float(x) for x in s), 0.0)

    threshold = float(tol * s[0])
    return SchmidtInfo(
        int(np.count_nonzero(s > threshold)),
        tuple(float(x) for x in s),
        threshold
    )


def rank_exact(m: StateMatrix) -> int:
    if m.field == RATIONAL:
        return bareiss_rank(integer_rows(m))
    if m.field == GFP:
        return rank_gfp(m.as_rows(), m.p)
    raise FieldMismatchError("rank_exact needs a rational or GF(p) matrix")


def det_exact(m: StateMatrix):
    if m.rows != m.cols:
        raise DimensionError("Determinant of a non-square matrix", shape=m.shape)
    if m.field == RATIONAL:
        scales = [lcm(*(x.denominator for x in row)) for row in m.as_rows()]
        return Fraction(bareiss_det(integer_rows(m)), prod(scales))
    if m.field == GFP:
        return det_gfp(m.as_rows(), m.p)
    raise FieldMismatchError("det_exact needs a rational or GF(p) matrix")


def order_r_minors(m: StateMatrix, r: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], object]]:
    """
    Lazily yields (row_set, col_set, det) over all C(rows, r) * C(cols, r) minors.
    Row sets vary slowest; both sets are in lexicographic order.
    """
    if not 1 <= r <= min(m.rows, m.cols):
        raise DimensionError(f"Minor order {r} out of range for a {m.rows}x{m.cols} matrix")

    for row_set in itertools.combinations(range(m.rows), r):
        for col_set in itertools.combinations(range(m.cols), r):
            yield row_set, col_set, minor(m, row_set, col_set)


def minor(m: StateMatrix, row_set, col_set):
    sub = m.submatrix(row_set, col_set)
    if m.field == COMPLEX:
        return complex(np.linalg.det(sub.to_numpy()))
    return det_exact(sub)


def stack_rank(matrices: Sequence[StateMatrix], tol: float = None) -> int:
    """
    Rank of the |S| x (rows*cols) stack of vectorized matrices
    """
    if not matrices:
        return 0
    first = matrices[0]
    stacked = StateMatrix(
        len(matrices), first.rows * first.cols,
        tuple(x for m in matrices for x in m.entries),
        first.field, first.p)
    if first.field == COMPLEX:
        return schmidt_rank_numeric(stacked, tol).rank
    return rank_exact(stacked)


def integer_rows(m: StateMatrix):
    """
    Rows scaled by the lcm of their denominators; row scaling keeps the rank
    """
    rows = []
    for row in m.as_rows():
        scale = lcm(*(x.denominator for x in row))
        rows.append([x.numerator * (scale // x.denominator) for x in row])
    return rows


def bareiss_rank(rows) -> int:
    a = [list(r) for r in rows]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0

    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((i for i in range(rank, n_rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]

        piv = a[rank][col]
        for i in range(rank + 1, n_rows):
            lead = a[i][col]
            row_i, row_p = a[i], a[rank]
            for j in range(col + 1, n_cols):
                row_i[j] = (row_i[j] * piv - lead * row_p[j]) // prev
            row_i[col] = 0
        prev = piv
        rank += 1

    return rank


def bareiss_det(rows) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]

    return sign * a[n - 1][n - 1] if n else 1


def rank_gfp(rows, p) -> int:
    a = [[x % p for x in r] for r in rows]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0

    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((i for i in range(rank, n_rows) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]

        inv = pow(a[rank][col], -1, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for i in range(rank + 1, n_rows):
            factor = a[i][col]
            if factor:
                a[i] = [(x - factor * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1

    return rank


def det_gfp(rows, p) -> int:
    a = [[x % p for x in r] for r in rows]
    n = len(a)
    det = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k]), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det = det * a[k][k] % p
        inv = pow(a[k][k], -1, p)
        for i in range(k + 1, n):
            factor = a[i][k] * inv % p
            if factor:
                a[i] = [(x - factor * y) % p for x, y in zip(a[i], a[k])]

    return det % p


def _finite_array(m: StateMatrix):
    a = m.to_numpy()
    if not np.all(np.isfinite(a)):
        raise NumericError("Matrix has non-finite entries", shape=m.shape)
    return a
