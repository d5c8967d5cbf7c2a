# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from .config import RunConfig, get_conf  # noqa
from .utils.exceptions import ERROR_CODED_EXCEPTIONS, SchmidtSubspaceError  # noqa
from .statemat import StateMatrix, matrix_of_state, rank_exact, schmidt_rank_numeric  # noqa
from .construct import (  # noqa
    SubspaceBasis, antisymmetric_basis_3x3, construct_fixed_rank_subspace,
    construct_max_rank_leq_subspace, construct_min_rank_subspace
)
from .bounds import bounds_table, max_dim_geq  # noqa

__version__ = '1.0.0'
