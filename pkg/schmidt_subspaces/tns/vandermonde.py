import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence, Tuple

from schmidt_subspaces.config import get_conf
from schmidt_subspaces.statemat import COMPLEX, RATIONAL, StateMatrix, det_exact
from schmidt_subspaces.statemat.field import to_rational
from schmidt_subspaces.utils.codec import encode_matrix, encode_scalars
from schmidt_subspaces.utils.exceptions import (
    ConstructionInconsistentError, DimensionError, DomainError, FieldMismatchError
)
from schmidt_subspaces.utils.logger import get_logger

logger = get_logger("tns")

EXHAUSTIVE = "exhaustive"
BY_THEOREM = "by-theorem"
UNCERTIFIED = "none"


@dataclass(frozen=True)
class TnsMatrix:
    size: int
    entries: Tuple[Tuple[Fraction, ...], ...]
    nodes: Optional[Tuple[Fraction, ...]] = None
    certified: str = UNCERTIFIED
    certification_cap: Optional[int] = None

    def value(self, i, j):
        return self.entries[i][j]

    def column(self, j, length=None):
        length = self.size if length is None else length
        return tuple(self.entries[i][j] for i in range(length))

    def as_state_matrix(self):
        return StateMatrix(
            self.size, self.size, tuple(x for row in self.entries for x in row), RATIONAL)

    def as_dict(self):
        return encode_matrix(
            self.as_state_matrix(),
            nodes=encode_scalars(self.nodes, RATIONAL) if self.nodes else None,
            certified=self.certified,
            certification_cap=self.certification_cap
        )


class TnsCheck(NamedTuple):
    ok: bool
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None


def vandermonde(nodes: Sequence = None, size: int = None, certify_cap: int = None) -> TnsMatrix:
    """
    Entry (i, j) = nodes[i] ** j. Nodes default to (1, 2, ..., size).

    Strictly increasing positive nodes make the matrix totally positive, hence
    totally non-singular. Up to `certify_cap` (config `tns_certification_cap`)
    every minor is checked; above it the total-positivity theorem is relied on.
    """
    if nodes is None:
        if not size or size < 1:
            raise DomainError("vandermonde needs nodes or a positive size")
        nodes = range(1, size + 1)

    nodes = tuple(to_rational(x) for x in nodes)
    if not nodes:
        raise DomainError("vandermonde needs at least one node")
    if nodes[0] <= 0:
        raise DomainError("Vandermonde nodes must be positive", nodes=[str(x) for x in nodes])
    if any(b <= a for a, b in zip(nodes, nodes[1:])):
        raise DomainError("Vandermonde nodes must be strictly increasing",
                          nodes=[str(x) for x in nodes])

    if certify_cap is None:
        certify_cap = get_conf().tns_certification_cap

    return _vandermonde(nodes, certify_cap)


@lru_cache(maxsize=64)
def _vandermonde(nodes, certify_cap):
    m = len(nodes)
    entries = tuple(tuple(x ** j for j in range(m)) for x in nodes)
    tns = TnsMatrix(m, entries, nodes, UNCERTIFIED, certify_cap)
    return certify(tns, certify_cap)


def certify(tns: TnsMatrix, cap: int) -> TnsMatrix:
    if tns.size > cap:
        if tns.nodes is None:
            raise DomainError(
                f"Matrix of size {tns.size} exceeds certification cap {cap}")
        logger.info("Vandermonde of size %s above cap %s: certified by theorem", tns.size, cap)
        return _replace_certified(tns, BY_THEOREM, cap)

    check = is_totally_nonsingular(tns.as_state_matrix())
    if not check.ok:
        raise ConstructionInconsistentError(
            "Matrix is not totally non-singular", witness=check.witness)
    return _replace_certified(tns, EXHAUSTIVE, cap)


def _replace_certified(tns, certified, cap):
    return TnsMatrix(tns.size, tns.entries, tns.nodes, certified, cap)


def minors_by_order(m: StateMatrix, order: int):
    """
    All minors of one order, in (row_set, col_set) lexicographic order.
    Orders are independent units of work; concatenating them by increasing
    order gives the full enumeration.
    """
    for row_set in itertools.combinations(range(m.rows), order):
        for col_set in itertools.combinations(range(m.cols), order):
            yield row_set, col_set, det_exact(m.submatrix(row_set, col_set))


def all_minors(m: StateMatrix, order_cap: int = None):
    top = min(m.rows, m.cols) if order_cap is None else min(order_cap, m.rows, m.cols)
    for order in range(1, top + 1):
        yield from minors_by_order(m, order)


def is_totally_nonsingular(m, order_cap: int = None) -> TnsCheck:
    if isinstance(m, TnsMatrix):
        m = m.as_state_matrix()
    if m.rows != m.cols:
        raise DimensionError("Total non-singularity is defined for square matrices")
    if m.field == COMPLEX:
        raise FieldMismatchError("Total non-singularity is checked over exact fields only")

    for row_set, col_set, value in all_minors(m, order_cap):
        if value == 0:
            return TnsCheck(False, (row_set, col_set))
    return TnsCheck(True)


def combination_nonzero_count(tns: TnsMatrix, cols: Sequence[int], coeffs: Sequence) -> int:
    """
    Number of nonzero entries of sum_c coeffs[c] * column(cols[c]).
    For n columns of an m x m totally non-singular matrix this is >= m - n + 1.
    """
    cols = list(cols)
    if len(cols) != len(coeffs):
        raise DimensionError(f"{len(coeffs)} coefficients for {len(cols)} columns")
    if len(set(cols)) != len(cols) or any(not 0 <= c < tns.size for c in cols):
        raise DomainError("Column indices must be distinct and within the matrix", cols=cols)

    coeffs = [to_rational(c) for c in coeffs]
    if all(c == 0 for c in coeffs):
        raise DomainError("Coefficients must not all be zero")

    combination = [
        sum(c * tns.value(i, j) for c, j in zip(coeffs, cols))
        for i in range(tns.size)
    ]
    return sum(1 for x in combination if x != 0)
