from .field import COMPLEX, EXACT_FIELDS, FIELDS, GFP, RATIONAL  # noqa
from .matrix import StateMatrix, matrix_of_state, state_of_matrix, linear_combination  # noqa
from .rank import (  # noqa
    SchmidtInfo, schmidt_decomposition, schmidt_rank_numeric, rank_exact, rank_gfp,
    det_exact, order_r_minors, minor, stack_rank
)
