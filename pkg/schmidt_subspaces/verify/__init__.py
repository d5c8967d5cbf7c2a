from .report import (  # noqa
    CONSISTENT, GEQ, INCONCLUSIVE, LEQ, REFUTED, STRUCTURAL_GEQ, WITNESS_GT, WITNESS_LT,
    RankCertificate, VerificationReport, merge_reports
)
from .structural import structural_certificate, structural_verify  # noqa
from .sampling import sample_verify_exact  # noqa
from .gfp import gfp_exhaustive_min_rank, projective_point_count, projective_points  # noqa
from .sigma import SigmaResult, minimize_sigma_r  # noqa
from .pencil import PencilResult, pencil_low_rank  # noqa
