"""
Closed-form dimension bounds for subspaces of da x db matrices.

max_dim_geq      largest subspace whose nonzero elements all have rank >= r
flanders_max_leq largest subspace whose elements all have rank <= r
westwick_range   range for subspaces whose nonzero elements all have rank exactly r
variety_dim      dimension of the variety of matrices with rank < r
"""
from dataclasses import asdict, dataclass
from math import factorial
from typing import NamedTuple, Optional

from schmidt_subspaces.config import get_conf
from schmidt_subspaces.utils.exceptions import DomainError


def _check_dims(da, db):
    if da < 1 or db < 1:
        raise DomainError(f"Dimensions must be positive, got {da}x{db}", da=da, db=db)


def _check_r(da, db, r, lo, hi):
    _check_dims(da, db)
    if not lo <= r <= hi:
        raise DomainError("r out of range", da=da, db=db, r=r)


def max_dim_geq(da: int, db: int, r: int) -> int:
    _check_r(da, db, r, 1, min(da, db))
    return (da - r + 1) * (db - r + 1)


def flanders_max_leq(da: int, db: int, r: int) -> int:
    _check_r(da, db, r, 1, min(da, db))
    return r * max(da, db)


class WestwickRange(NamedTuple):
    lo: int
    hi: int
    exact: Optional[int]
    reason: str


def westwick_range(da: int, db: int, r: int) -> WestwickRange:
    if da > db:
        da, db = db, da
    _check_r(da, db, r, 2, da)

    lo = db - r + 1
    hi = da + db - 2 * r + 1

    if da <= get_conf().factorial_exact_cap:
        ratio = factorial(da - 1) // factorial(r - 1)
        if ratio % lo != 0:
            return WestwickRange(
                lo, hi, lo, f"db-r+1 = {lo} does not divide (da-1)!/(r-1)! = {ratio}")
        divisibility_checked = True
    else:
        divisibility_checked = False

    if da == r + 1 and db == 2 * r - 1:
        return WestwickRange(lo, hi, r + 1, "da = r+1 and db = 2r-1")
    if lo == hi:
        return WestwickRange(lo, hi, lo, "bounds coincide (r = da)")

    if not divisibility_checked:
        return WestwickRange(
            lo, hi, None, f"divisibility not evaluated for da > {get_conf().factorial_exact_cap}")
    return WestwickRange(lo, hi, None, "open in general")


class VarietyDim(NamedTuple):
    affine: int
    projective: int


def variety_dim(da: int, db: int, r: int) -> VarietyDim:
    _check_r(da, db, r, 1, min(da, db) + 1)
    affine = da * db - (da - r + 1) * (db - r + 1)
    return VarietyDim(affine, affine - 1)


@dataclass(frozen=True)
class BoundsTable:
    da: int
    db: int
    r: int
    max_dim_geq: int
    flanders_max_leq: int
    westwick_lo: int
    westwick_hi: int
    westwick_exact: Optional[int]
    westwick_reason: str
    naive_fixed_upper: int
    variety_dim: int
    transposed: bool = False

    def as_dict(self):
        return asdict(self)


def bounds_table(da: int, db: int, r: int) -> BoundsTable:
    transposed = da > db
    if transposed:
        da, db = db, da
    _check_r(da, db, r, 2, da)

    westwick = westwick_range(da, db, r)
    return BoundsTable(
        da=da,
        db=db,
        r=r,
        max_dim_geq=max_dim_geq(da, db, r),
        flanders_max_leq=flanders_max_leq(da, db, r),
        westwick_lo=westwick.lo,
        westwick_hi=westwick.hi,
        westwick_exact=westwick.exact,
        westwick_reason=westwick.reason,
        naive_fixed_upper=(db - r + 1) + (da - r),
        variety_dim=variety_dim(da, db, r).affine,
        transposed=transposed,
    )


def bounds_grid(da: int, db: int):
    return [bounds_table(da, db, r) for r in range(2, min(da, db) + 1)]
