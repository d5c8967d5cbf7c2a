"""
The coefficient isomorphism between bipartite states and dA x dB matrices.

Indexing is 0-based throughout: the amplitude c_ij of |i>|j>, with
i in [0, dA) and j in [0, dB), sits at flat position i * dB + j (row-major)
and becomes entry (i, j) of the matrix. States are never normalized.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from schmidt_subspaces.utils.exceptions import DimensionError, FieldMismatchError
from .field import COMPLEX, GFP, RATIONAL, check_field, coerce, infer_field


@dataclass(frozen=True)
class StateMatrix:
    rows: int
    cols: int
    entries: Tuple
    field: str = RATIONAL
    p: Optional[int] = None

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(
                f"Matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"Expected {self.rows * self.cols} entries, got {len(self.entries)}",
                rows=self.rows, cols=self.cols)

        check_field(self.field, self.p)
        object.__setattr__(
            self, "entries", tuple(coerce(x, self.field, self.p) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field=None, p=None):
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("Rows must be non-empty and of equal length")
        flat = [x for r in rows for x in r]
        return cls(len(rows), len(rows[0]), tuple(flat), field or infer_field(flat), p)

    @classmethod
    def zeros(cls, rows, cols, field=RATIONAL, p=None):
        return cls(rows, cols, (0,) * (rows * cols), field, p)

    @classmethod
    def elementary(cls, rows, cols, i, j, field=RATIONAL, p=None):
        entries = [0] * (rows * cols)
        entries[i * cols + j] = 1
        return cls(rows, cols, tuple(entries), field, p)

    @property
    def shape(self):
        return self.rows, self.cols

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def as_rows(self):
        return [
            list(self.entries[i * self.cols:(i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def is_zero(self):
        return all(x == 0 for x in self.entries)

    def transpose(self):
        return StateMatrix(
            self.cols, self.rows,
            tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
            self.field, self.p)

    def submatrix(self, row_set, col_set):
        return StateMatrix(
            len(row_set), len(col_set),
            tuple(self.entry(i, j) for i in row_set for j in col_set),
            self.field, self.p)

    def to_numpy(self):
        if self.field == GFP:
            raise FieldMismatchError("GF(p) matrices have no complex embedding")
        return np.array(
            [complex(x) for x in self.entries], dtype=complex).reshape(self.rows, self.cols)

    def as_complex(self):
        if self.field == COMPLEX:
            return self
        return StateMatrix(
            self.rows, self.cols, tuple(self.to_numpy().ravel()), COMPLEX)

    def reduce_mod_p(self, p):
        if self.field != RATIONAL:
            raise FieldMismatchError("Only rational matrices reduce mod p")
        return StateMatrix(self.rows, self.cols, self.entries, GFP, p)

    def is_integral(self):
        return self.field == RATIONAL and all(x.denominator == 1 for x in self.entries)


def matrix_of_state(amplitudes: Sequence, da: int, db: int, field=None, p=None) -> StateMatrix:
    """
    M(psi): amplitude at flat position i * db + j becomes entry (i, j)
    """
    amplitudes = list(amplitudes)
    if len(amplitudes) != da * db:
        raise DimensionError(
            f"State has {len(amplitudes)} amplitudes, expected {da}*{db}={da * db}",
            da=da, db=db)
    return StateMatrix(da, db, tuple(amplitudes), field or infer_field(amplitudes), p)


def state_of_matrix(m: StateMatrix) -> list:
    return list(m.entries)


def linear_combination(matrices: Sequence[StateMatrix], coeffs: Sequence) -> StateMatrix:
    if not matrices:
        raise DimensionError("Cannot combine an empty list of matrices")
    if len(matrices) != len(coeffs):
        raise DimensionError(
            f"{len(coeffs)} coefficients for {len(matrices)} matrices")

    first = matrices[0]
    for m in matrices:
        if m.shape != first.shape:
            raise DimensionError("Matrices in a combination must share dimensions")
        if (m.field, m.p) != (first.field, first.p):
            raise FieldMismatchError("Matrices in a combination must share one field")

    coeffs = [coerce(c, first.field, first.p) for c in coeffs]
    acc = [0] * (first.rows * first.cols)
    for c, m in zip(coeffs, matrices):
        if c == 0:
            continue
        for idx, e in enumerate(m.entries):
            if e != 0:
                acc[idx] += c * e

    if first.field == GFP:
        acc = [x % first.p for x in acc]
    return StateMatrix(first.rows, first.cols, tuple(acc), first.field, first.p)
