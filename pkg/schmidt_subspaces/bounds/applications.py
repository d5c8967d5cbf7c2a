"""
Reports derived from the maximal dimension formula.

mixed_state_report: the normalized projector onto a maximal subspace of
Schmidt rank >= r, with r = ceil((1 - p) d), has a flat spectrum of length
dim, so its entropy is log2(dim) and every pure state decomposition uses
states of Schmidt rank >= r.

random_comparison: exact maximal dimension for r = ceil(k da) against the
asymptotic (1 - k)^2 da db and the threshold 2^(-da / (db ln 2)) above which
random-subspace entropy bounds become trivial.
"""
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import ceil, log, log2
from typing import NamedTuple

from schmidt_subspaces.utils.exceptions import DomainError
from .theorems import max_dim_geq

DECOMPOSITION_ARGUMENT = (
    "every pure state decomposition of the projector only contains state "
    "vectors from the subspace, all of Schmidt rank >= r"
)


def _exact(value, name):
    # decimal string form keeps 0.1 as 1/10 rather than its binary expansion
    try:
        return Fraction(str(value))
    except (TypeError, ValueError) as e:
        raise DomainError(f"{name} must be a real number", **{name: value}) from e


@dataclass(frozen=True)
class MixedStateReport:
    d: int
    p: float
    r: int
    dim: int
    rank_lower_asymptotic: int
    entropy_bits: float
    schmidt_measure_lb: int
    asymptotic_regime: bool
    justification: str = DECOMPOSITION_ARGUMENT

    def as_dict(self):
        return asdict(self)


def mixed_state_report(d: int, p: float) -> MixedStateReport:
    if d < 2:
        raise DomainError("d must be at least 2", d=d)
    exact_p = _exact(p, "p")
    if not 0 < exact_p < 1:
        raise DomainError("p must lie strictly between 0 and 1", p=p)

    r = ceil((1 - exact_p) * d)
    if r < 2:
        raise DomainError(
            f"r = ceil((1-p)d) = {r} < 2 makes the bound trivial", d=d, p=p, r=r)

    dim = max_dim_geq(d, d, r)
    asymptote = exact_p ** 2 * d ** 2

    return MixedStateReport(
        d=d,
        p=float(p),
        r=r,
        dim=dim,
        rank_lower_asymptotic=ceil(asymptote),
        entropy_bits=log2(dim),
        schmidt_measure_lb=r,
        asymptotic_regime=dim >= asymptote,
    )


class RandomComparison(NamedTuple):
    exact_dim: int
    threshold_k: float
    asymptotic: float
    r: int
    above_threshold: bool

    def as_dict(self):
        return self._asdict()


def random_comparison(da: int, db: int, k: float) -> RandomComparison:
    if da < 1 or db < 1:
        raise DomainError(f"Dimensions must be positive, got {da}x{db}", da=da, db=db)
    if da > db:
        raise DomainError("random comparison needs da <= db", da=da, db=db)
    exact_k = _exact(k, "k")
    if not 0 < exact_k <= 1:
        raise DomainError("k must lie in (0, 1]", k=k)

    r = ceil(exact_k * da)
    threshold = 2 ** (-da / (db * log(2)))

    return RandomComparison(
        exact_dim=max_dim_geq(da, db, r),
        threshold_k=threshold,
        asymptotic=float((1 - exact_k) ** 2 * da * db),
        r=r,
        above_threshold=float(exact_k) >= threshold,
    )
