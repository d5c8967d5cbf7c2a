from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from schmidt_subspaces.config import get_conf
from schmidt_subspaces.statemat import StateMatrix
from schmidt_subspaces.statemat.field import format_scalar
from schmidt_subspaces.utils.codec import encode_matrix, encode_scalars
from schmidt_subspaces.utils.exceptions import DomainError

STRUCTURAL_GEQ = "structural_geq"
WITNESS_LT = "witness_lt"
# rank above r for a subspace claimed to have rank <= r
WITNESS_GT = "witness_gt"

SAMPLE_EXACT = "sample_exact"
GFP_EXHAUSTIVE = "gfp_exhaustive"
SIGMA_MIN = "sigma_min"
STRUCTURAL = "structural"
MODES = (SAMPLE_EXACT, GFP_EXHAUSTIVE, SIGMA_MIN, STRUCTURAL)

CONSISTENT = "consistent"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"

GEQ = "geq"
LEQ = "leq"


@dataclass(frozen=True)
class RankCertificate:
    kind: str
    coeffs: Tuple
    field: str
    kappa: Optional[int] = None
    positions: Tuple[Tuple[int, int], ...] = ()
    minor_value: object = None
    rank_found: Optional[int] = None
    matrix: Optional[StateMatrix] = None

    @property
    def refutes(self):
        return self.kind in (WITNESS_LT, WITNESS_GT)

    def as_dict(self):
        out = {
            "kind": self.kind,
            "coeffs": encode_scalars(self.coeffs, self.field),
        }
        if self.kind == STRUCTURAL_GEQ:
            out.update(
                kappa=self.kappa,
                positions=[list(x) for x in self.positions],
                minor_value=format_scalar(self.minor_value, self.field),
            )
        else:
            out["rank_found"] = self.rank_found
        if self.matrix is not None:
            out["matrix"] = encode_matrix(self.matrix)
        return out


@dataclass
class VerificationReport:
    mode: str
    r: int
    samples_or_points: int
    min_rank_observed: Optional[int]
    verdict: str
    direction: str = GEQ
    max_rank_observed: Optional[int] = None
    min_sigma_r: Optional[float] = None
    tolerance: Optional[float] = None
    seed: Optional[int] = None
    witnesses: List[RankCertificate] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"Unknown verification mode {self.mode}")
        if self.verdict not in (CONSISTENT, REFUTED, INCONCLUSIVE):
            raise DomainError(f"Unknown verdict {self.verdict}")
        if self.verdict == REFUTED and not any(w.refutes for w in self.witnesses):
            raise DomainError("A refuted report needs a refuting witness")
        if self.min_sigma_r is not None and self.min_sigma_r < 0:
            raise DomainError("min_sigma_r must be non-negative")

    def as_dict(self):
        return {
            "mode": self.mode,
            "r": self.r,
            "direction": self.direction,
            "samples_or_points": self.samples_or_points,
            "min_rank_observed": self.min_rank_observed,
            "max_rank_observed": self.max_rank_observed,
            "min_sigma_r": self.min_sigma_r,
            "tolerance": self.tolerance,
            "seed": self.seed,
            "verdict": self.verdict,
            "witnesses": [w.as_dict() for w in self.witnesses],
            "details": self.details,
        }


def merge_reports(a: VerificationReport, b: VerificationReport) -> VerificationReport:
    """
    Combines two reports of the same mode over disjoint units of work
    """
    if (a.mode, a.r, a.direction) != (b.mode, b.r, b.direction):
        raise DomainError("Only reports of the same mode, r and direction merge")

    verdicts = {a.verdict, b.verdict}
    if REFUTED in verdicts:
        verdict = REFUTED
    elif INCONCLUSIVE in verdicts:
        verdict = INCONCLUSIVE
    else:
        verdict = CONSISTENT

    return VerificationReport(
        mode=a.mode,
        r=a.r,
        direction=a.direction,
        samples_or_points=a.samples_or_points + b.samples_or_points,
        min_rank_observed=_pick(min, a.min_rank_observed, b.min_rank_observed),
        max_rank_observed=_pick(max, a.max_rank_observed, b.max_rank_observed),
        min_sigma_r=_pick(min, a.min_sigma_r, b.min_sigma_r),
        tolerance=a.tolerance,
        seed=a.seed,
        verdict=verdict,
        witnesses=(a.witnesses + b.witnesses)[:get_conf().max_witnesses],
        details=_merge_details(a.details, b.details),
    )


def _merge_details(a, b):
    details = {**a, **b}
    if "violations" in a and "violations" in b:
        details["violations"] = a["violations"] + b["violations"]
    if "start" in a and "start" in b:
        details["start"] = min(a["start"], b["start"])
    return details


def _pick(fn, x, y):
    if x is None:
        return y
    if y is None:
        return x
    return fn(x, y)
