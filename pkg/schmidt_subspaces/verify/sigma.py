"""
Numerical search for a low-rank element of a matrix subspace.

Minimizes sigma_r / sigma_1 of sum_i x_i B_i over unit coefficient vectors x
by alternating projections: truncate the current combination to rank r - 1
with an SVD, then least-squares fit the coefficients to that target. Each
restart starts from its own seeded complex Gaussian vector.
"""
from typing import NamedTuple, Tuple

import numpy as np

from schmidt_subspaces.config import get_conf
from schmidt_subspaces.construct import SubspaceBasis
from schmidt_subspaces.statemat import COMPLEX, StateMatrix, schmidt_rank_numeric
from schmidt_subspaces.utils.exceptions import DomainError, NumericError
from schmidt_subspaces.utils.logger import get_logger
from schmidt_subspaces.utils.seeds import substream
from .report import (
    INCONCLUSIVE, REFUTED, SIGMA_MIN, WITNESS_LT, RankCertificate, VerificationReport
)

logger = get_logger("verify.sigma")

# restarts stop once a value this far below the witness tolerance is reached
EARLY_STOP_FACTOR = 1e-3


class SigmaResult(NamedTuple):
    coeffs: Tuple[complex, ...]
    min_sigma_r: float
    report: VerificationReport


def minimize_sigma_r(
        basis: SubspaceBasis, r: int, restarts: int = None, iters: int = None,
        seed: int = 0, tol: float = None) -> SigmaResult:
    conf = get_conf()
    restarts = conf.sigma_restarts if restarts is None else restarts
    iters = conf.sigma_iters if iters is None else iters
    tol = conf.witness_tolerance if tol is None else tol

    if not 1 <= r <= min(basis.da, basis.db):
        raise DomainError("r out of range", r=r)
    if restarts < 1 or iters < 1:
        raise DomainError("restarts and iters must be at least 1")

    arrays = [m.to_numpy() for m in basis.matrices]
    if not all(np.all(np.isfinite(a)) for a in arrays):
        raise NumericError("Basis has non-finite entries")
    norms = np.array([np.linalg.norm(a) for a in arrays])
    # columns are the vectorized, unit Frobenius norm basis matrices
    stack = np.stack([a.ravel() / n for a, n in zip(arrays, norms)], axis=1)

    best_ratio = np.inf
    best_x = None
    stop_below = tol * EARLY_STOP_FACTOR
    restarts_run = 0
    for restart in range(restarts):
        restarts_run += 1
        ratio, x = _descend(
            stack, basis.da, basis.db, r, iters, stop_below, substream(seed, "sigma", restart))
        logger.debug("restart %s: sigma_r/sigma_1 = %.3e", restart, ratio)
        if ratio < best_ratio:
            best_ratio, best_x = ratio, x
        if best_ratio < stop_below:
            break

    # coefficients with respect to the original, unnormalized basis
    coeffs = tuple(complex(c) for c in best_x / norms)
    matrix = StateMatrix(
        basis.da, basis.db, tuple((stack @ best_x).ravel()), COMPLEX)

    witnesses = []
    rank_at_best = schmidt_rank_numeric(matrix, conf.witness_confirm_tolerance).rank
    if best_ratio < tol and rank_at_best < r:
        witnesses.append(RankCertificate(
            kind=WITNESS_LT,
            coeffs=coeffs,
            field=COMPLEX,
            rank_found=rank_at_best,
            matrix=matrix,
        ))

    verdict = REFUTED if witnesses else INCONCLUSIVE
    logger.info(
        "sigma search r=%s: best sigma_r/sigma_1 %.3e after %s restarts, verdict %s",
        r, best_ratio, restarts_run, verdict)

    report = VerificationReport(
        mode=SIGMA_MIN,
        r=r,
        samples_or_points=restarts_run,
        min_rank_observed=rank_at_best,
        min_sigma_r=float(best_ratio),
        tolerance=tol,
        seed=seed,
        verdict=verdict,
        witnesses=witnesses,
        details={"restarts": restarts, "iters": iters},
    )
    return SigmaResult(coeffs, float(best_ratio), report)


def _descend(stack, da, db, r, iters, stop_below, rng):
    dim = stack.shape[1]
    x = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    x /= np.linalg.norm(x)

    best_ratio, best_x = np.inf, x
    for _ in range(iters):
        u, s, vh = np.linalg.svd((stack @ x).reshape(da, db))
        ratio = s[r - 1] / s[0]
        if ratio < best_ratio:
            best_ratio, best_x = ratio, x
        if r == 1 or ratio < stop_below:
            break

        target = (u[:, :r - 1] * s[:r - 1]) @ vh[:r - 1, :]
        x, *_ = np.linalg.lstsq(stack, target.ravel(), rcond=None)
        norm = np.linalg.norm(x)
        if norm == 0:
            break
        x = x / norm

    return float(best_ratio), best_x
