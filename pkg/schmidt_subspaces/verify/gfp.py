"""
Exhaustive minimum rank over GF(p).

Reducing an integer basis mod p can only lower ranks, so a minimum >= r over
all projective points is evidence for rank >= r over the rationals, while a
smaller minimum proves nothing about the complex subspace.
"""
import itertools

from sympy import isprime

from schmidt_subspaces.config import get_conf
from schmidt_subspaces.construct import SubspaceBasis
from schmidt_subspaces.statemat import rank_gfp
from schmidt_subspaces.statemat.matrix import linear_combination
from schmidt_subspaces.statemat.rank import stack_rank
from schmidt_subspaces.utils.exceptions import CapExceededError, DomainError
from schmidt_subspaces.utils.logger import get_logger
from .report import CONSISTENT, GFP_EXHAUSTIVE, INCONCLUSIVE, VerificationReport

logger = get_logger("verify.gfp")


def projective_point_count(p: int, dim: int) -> int:
    return (p ** dim - 1) // (p - 1)


def projective_points(p: int, dim: int):
    """
    One representative per line of GF(p)^dim: the first nonzero coordinate is 1
    """
    for lead in range(dim):
        for tail in itertools.product(range(p), repeat=dim - lead - 1):
            yield (0,) * lead + (1,) + tail


def gfp_exhaustive_min_rank(basis: SubspaceBasis, p: int, r: int = None, cap: int = None) -> VerificationReport:
    if not isprime(p):
        raise DomainError("p must be prime", p=p)
    if r is None:
        r = basis.r
    if cap is None:
        cap = get_conf().gfp_enumeration_cap
    if not all(m.is_integral() for m in basis.matrices):
        raise DomainError("GF(p) enumeration needs an integer-entried rational basis")

    count = projective_point_count(p, basis.dim)
    if count > cap:
        raise CapExceededError(
            f"{count} projective points over GF({p}) exceed the enumeration cap {cap}; "
            f"raise the cap to at least {count}",
            required_cap=count, cap=cap)

    reduced = [m.reduce_mod_p(p) for m in basis.matrices]
    if stack_rank(reduced) != basis.dim:
        raise DomainError(f"Reduction mod {p} makes the basis linearly dependent", p=p)

    min_rank = None
    argmin = None
    for point in projective_points(p, basis.dim):
        rank = rank_gfp(linear_combination(reduced, point).as_rows(), p)
        if min_rank is None or rank < min_rank:
            min_rank, argmin = rank, point

    verdict = CONSISTENT if min_rank >= r else INCONCLUSIVE
    logger.info("GF(%s): %s points, min rank %s, verdict %s", p, count, min_rank, verdict)

    return VerificationReport(
        mode=GFP_EXHAUSTIVE,
        r=r,
        samples_or_points=count,
        min_rank_observed=min_rank,
        verdict=verdict,
        details={"prime": p, "argmin": list(argmin)},
    )
