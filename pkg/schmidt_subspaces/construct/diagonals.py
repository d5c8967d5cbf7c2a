from dataclasses import dataclass
from typing import List, Tuple

from schmidt_subspaces.statemat import RATIONAL, StateMatrix
from schmidt_subspaces.tns import TnsMatrix
from schmidt_subspaces.utils.exceptions import DimensionError


@dataclass(frozen=True)
class DiagonalIndex:
    """
    Diagonal k = col - row of a da x db matrix; k runs from -(da - 1) at the
    lower-left corner to db - 1 at the upper-right one. Cells are ordered by
    increasing row.
    """
    da: int
    db: int
    k: int
    length: int
    cells: Tuple[Tuple[int, int], ...]


def diagonal_cells(da, db, k):
    return tuple((i, i + k) for i in range(da) if 0 <= i + k < db)


def diagonals(da: int, db: int) -> List[DiagonalIndex]:
    if da < 1 or db < 1:
        raise DimensionError(f"Matrix dimensions must be positive, got {da}x{db}")

    return [
        DiagonalIndex(
            da=da, db=db, k=k,
            length=min(da, db, da + k, db - k),
            cells=diagonal_cells(da, db, k)
        )
        for k in range(-(da - 1), db)
    ]


def build_diagonal_family(diag: DiagonalIndex, r: int, tns: TnsMatrix) -> List[StateMatrix]:
    """
    t = length - r + 1 matrices supported on diagonal k; the j-th one carries
    column j of the leading length x length block of `tns` down the diagonal.
    Any nonzero combination has at least r nonzero entries on the diagonal.
    Diagonals shorter than r give an empty family.
    """
    if diag.length < r:
        return []
    if tns.size < diag.length:
        raise DimensionError(
            f"TNS matrix of size {tns.size} is too small for a diagonal of length {diag.length}")

    family = []
    for j in range(diag.length - r + 1):
        entries = [0] * (diag.da * diag.db)
        for (row, col), value in zip(diag.cells, tns.column(j, diag.length)):
            entries[row * diag.db + col] = value
        family.append(StateMatrix(diag.da, diag.db, tuple(entries), RATIONAL))

    return family
