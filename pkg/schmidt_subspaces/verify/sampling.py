from schmidt_subspaces.config import get_conf
from schmidt_subspaces.construct import SubspaceBasis
from schmidt_subspaces.statemat import RATIONAL, rank_exact
from schmidt_subspaces.utils.exceptions import DomainError, FieldMismatchError
from schmidt_subspaces.utils.logger import get_logger
from schmidt_subspaces.utils.seeds import draw_coefficients, substream
from .report import (
    CONSISTENT, GEQ, LEQ, REFUTED, SAMPLE_EXACT, WITNESS_GT, WITNESS_LT,
    RankCertificate, VerificationReport
)

logger = get_logger("verify.sampling")


def sample_verify_exact(
        basis: SubspaceBasis, r: int, n: int, seed: int,
        direction: str = GEQ, box: int = None, start: int = 0) -> VerificationReport:
    """
    Exact ranks of n seeded integer combinations (entries in [-box, box]).

    direction="geq" refutes on any rank < r, direction="leq" on any rank > r.
    Sample i draws from its own sub-stream; samples start, ..., start + n - 1
    are drawn, so chunked runs merge back to the full one with merge_reports.
    """
    if basis.field != RATIONAL:
        raise FieldMismatchError("Exact sampling needs a rational basis", field=basis.field)
    if n < 1 or start < 0:
        raise DomainError("n must be at least 1 and start non-negative", n=n, start=start)
    if direction not in (GEQ, LEQ):
        raise DomainError("direction must be geq or leq", direction=direction)

    conf = get_conf()
    if box is None:
        box = conf.sample_box

    min_rank = max_rank = None
    witnesses = []
    violations = 0
    for idx in range(start, start + n):
        rng = substream(seed, "sample", idx)
        coeffs = draw_coefficients(rng, basis.dim, box)
        m = basis.combination(coeffs)
        rank = rank_exact(m)

        min_rank = rank if min_rank is None else min(min_rank, rank)
        max_rank = rank if max_rank is None else max(max_rank, rank)

        violated = rank < r if direction == GEQ else rank > r
        if not violated:
            continue
        violations += 1
        if len(witnesses) < conf.max_witnesses:
            witnesses.append(RankCertificate(
                kind=WITNESS_LT if direction == GEQ else WITNESS_GT,
                coeffs=tuple(coeffs),
                field=RATIONAL,
                rank_found=rank,
                matrix=m,
            ))

    verdict = REFUTED if violations else CONSISTENT
    logger.info(
        "Sampled %s combinations: ranks in [%s, %s], verdict %s", n, min_rank, max_rank, verdict)

    return VerificationReport(
        mode=SAMPLE_EXACT,
        r=r,
        direction=direction,
        samples_or_points=n,
        min_rank_observed=min_rank,
        max_rank_observed=max_rank,
        seed=seed,
        verdict=verdict,
        witnesses=witnesses,
        details={"sample_box": box, "violations": violations, "start": start},
    )
