from .basis import (  # noqa
    ANTISYMMETRIC, DIAGONAL_KINDS, FIXED_RANK, KINDS, MAX_RANK_LEQ, MIN_RANK_GEQ, RANDOM,
    USER, SubspaceBasis
)
from .diagonals import DiagonalIndex, build_diagonal_family, diagonal_cells, diagonals  # noqa
from .subspaces import (  # noqa
    antisymmetric_basis_3x3, construct_fixed_rank_subspace, construct_max_rank_leq_subspace,
    construct_min_rank_subspace, random_subspace, self_check, user_subspace
)
