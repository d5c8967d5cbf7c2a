"""
Runners behind `verify --mode`, registered in hooks.verification_modes.

Each takes the loaded basis and the RunConfig and returns a VerificationReport.
"""
from schmidt_subspaces.construct import MAX_RANK_LEQ, SubspaceBasis
from schmidt_subspaces.utils.exceptions import DomainError
from .gfp import gfp_exhaustive_min_rank
from .report import GEQ, LEQ, VerificationReport
from .sampling import sample_verify_exact
from .sigma import minimize_sigma_r
from .structural import structural_verify


def target_rank(basis: SubspaceBasis, config) -> int:
    return basis.r if config.r is None else config.r


def default_direction(basis: SubspaceBasis, config) -> str:
    if config.direction:
        return config.direction
    return LEQ if basis.kind == MAX_RANK_LEQ else GEQ


def run_sample(basis: SubspaceBasis, config) -> VerificationReport:
    return sample_verify_exact(
        basis,
        r=target_rank(basis, config),
        n=config.samples,
        seed=config.seed,
        direction=default_direction(basis, config),
    )


def run_gfp(basis: SubspaceBasis, config) -> VerificationReport:
    return gfp_exhaustive_min_rank(basis, config.p, r=target_rank(basis, config))


def run_sigma(basis: SubspaceBasis, config) -> VerificationReport:
    return minimize_sigma_r(
        basis,
        r=target_rank(basis, config),
        restarts=config.restarts,
        iters=config.iters,
        seed=config.seed,
        tol=config.tolerance,
    ).report


def run_structural(basis: SubspaceBasis, config) -> VerificationReport:
    # certificates are tied to the rank the basis was built for
    if config.r is not None and config.r != basis.r:
        raise DomainError(
            f"structural mode certifies the basis r = {basis.r}, got --r {config.r}",
            r=config.r, basis_r=basis.r)
    return structural_verify(basis, n=config.samples, seed=config.seed)
