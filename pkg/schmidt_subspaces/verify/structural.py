"""
Certificates that a combination of a diagonal-construction basis has rank >= r.

Let kappa be the largest diagonal label with a nonzero coefficient. The
combination vanishes on every diagonal above kappa and has at least r nonzero
entries on diagonal kappa. The r x r submatrix through r of them is then
triangular with those entries on its main diagonal, so its determinant is
their product and nonzero.
"""
from schmidt_subspaces.config import get_conf
from schmidt_subspaces.construct import DIAGONAL_KINDS, SubspaceBasis, diagonal_cells
from schmidt_subspaces.statemat import RATIONAL, det_exact
from schmidt_subspaces.statemat.field import to_rational
from schmidt_subspaces.utils.exceptions import (
    ConstructionInconsistentError, DimensionError, DomainError
)
from schmidt_subspaces.utils.logger import get_logger
from schmidt_subspaces.utils.seeds import draw_coefficients, substream
from .report import CONSISTENT, STRUCTURAL, STRUCTURAL_GEQ, RankCertificate, VerificationReport

logger = get_logger("verify.structural")


def structural_certificate(basis: SubspaceBasis, coeffs) -> RankCertificate:
    if basis.kind not in DIAGONAL_KINDS or "diagonals" not in basis.metadata:
        raise DomainError(
            "Structural certificates need a diagonal-construction basis", kind=basis.kind)
    if len(coeffs) != basis.dim:
        raise DimensionError(f"{len(coeffs)} coefficients for a basis of dimension {basis.dim}")

    coeffs = tuple(to_rational(c) for c in coeffs)
    if all(c == 0 for c in coeffs):
        raise DomainError("Coefficients must not all be zero")

    labels = basis.metadata["diagonals"]
    if len(labels) != basis.dim:
        raise DomainError(
            f"{len(labels)} diagonal labels for a basis of dimension {basis.dim}", kind=basis.kind)
    kappa = max(label for label, c in zip(labels, coeffs) if c != 0)

    combination = basis.combination(coeffs)
    # diagonal labels refer to the orientation the basis was built in
    work = combination.transpose() if basis.transposed else combination

    nonzero = [
        (i, j) for i, j in diagonal_cells(work.rows, work.cols, kappa)
        if work.entry(i, j) != 0
    ]
    if len(nonzero) < basis.r:
        raise ConstructionInconsistentError(
            f"Only {len(nonzero)} nonzero entries on diagonal {kappa}, need {basis.r}",
            coeffs=[str(c) for c in coeffs])

    chosen = nonzero[:basis.r]
    minor_value = det_exact(work.submatrix([i for i, _ in chosen], [j for _, j in chosen]))
    if minor_value == 0:
        raise ConstructionInconsistentError(
            f"Vanishing triangular minor on diagonal {kappa}",
            coeffs=[str(c) for c in coeffs])

    if basis.transposed:
        chosen = [(j, i) for i, j in chosen]

    return RankCertificate(
        kind=STRUCTURAL_GEQ,
        coeffs=coeffs,
        field=RATIONAL,
        kappa=kappa,
        positions=tuple(chosen),
        minor_value=minor_value,
    )


def structural_verify(basis: SubspaceBasis, n: int, seed: int, box: int = None) -> VerificationReport:
    """
    Issues a structural certificate for n seeded integer combinations
    """
    if box is None:
        box = get_conf().sample_box

    for idx in range(n):
        rng = substream(seed, "sample", idx)
        structural_certificate(basis, draw_coefficients(rng, basis.dim, box))

    logger.info("%s structural certificates issued for r=%s", n, basis.r)
    return VerificationReport(
        mode=STRUCTURAL,
        r=basis.r,
        samples_or_points=n,
        min_rank_observed=basis.r,
        verdict=CONSISTENT,
        seed=seed,
        details={"sample_box": box},
    )
