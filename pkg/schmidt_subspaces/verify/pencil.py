"""
Roots of det(a + x b) for square a, b.

det(a + x b) = 0 iff -x is a generalized eigenvalue of (a, b), so the finite
roots are -alpha / beta over the QZ pairs with beta != 0. Pairs with beta = 0
are infinite eigenvalues: directions in which b alone is singular.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.linalg as la

from schmidt_subspaces.config import get_conf
from schmidt_subspaces.utils.exceptions import DimensionError, NumericError
from schmidt_subspaces.utils.logger import get_logger

logger = get_logger("verify.pencil")

FINITE_ROOTS = "finite_roots"
IDENTICALLY_SINGULAR = "identically_singular"
B_DIRECTION_SINGULAR = "b_direction_singular"

# fixed probe points for detecting det(a + x b) == 0 identically
PROBE_POINTS = (0.5 + 0.25j, -1.3 + 0.7j, 2.1 - 0.9j)


@dataclass(frozen=True)
class PencilResult:
    verdict: str
    roots: Tuple[complex, ...] = ()
    residuals: Tuple[float, ...] = ()
    infinite_count: int = 0

    def as_dict(self):
        return {
            "verdict": self.verdict,
            "roots": [[x.real, x.imag] for x in self.roots],
            "residuals": list(self.residuals),
            "infinite_count": self.infinite_count,
        }


def relative_sigma_min(m) -> float:
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0:
        return 0.0
    return float(s[-1] / s[0])


def pencil_low_rank(a, b, tol: float = None) -> PencilResult:
    if tol is None:
        tol = get_conf().pencil_tolerance

    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape != b.shape:
        raise DimensionError("Pencil matrices must be square and of equal size",
                             a=list(a.shape), b=list(b.shape))
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise NumericError("Pencil matrices have non-finite entries")

    if all(relative_sigma_min(a + x * b) < tol for x in PROBE_POINTS):
        logger.info("det(a + x b) vanishes identically; every x is a root")
        return PencilResult(IDENTICALLY_SINGULAR)

    w = la.eig(a, b, right=False, homogeneous_eigvals=True)
    alpha, beta = w[0], w[1]
    scale = np.maximum(np.abs(alpha), np.abs(beta))
    finite = np.abs(beta) > np.finfo(float).eps * 16 * scale

    roots = sorted(
        (complex(-al / be) for al, be, ok in zip(alpha, beta, finite) if ok),
        key=lambda x: (x.real, x.imag)
    )
    infinite_count = int(np.count_nonzero(~finite))
    residuals = tuple(relative_sigma_min(a + x * b) for x in roots)

    verdict = FINITE_ROOTS if roots else B_DIRECTION_SINGULAR
    logger.info("pencil of size %s: %s finite roots, %s infinite", a.shape[0], len(roots), infinite_count)
    return PencilResult(verdict, tuple(roots), residuals, infinite_count)
