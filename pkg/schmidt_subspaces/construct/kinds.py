"""
Builders behind `construct --kind`, registered in hooks.basis_constructors.

Each returns the basis together with the theoretical dimension it is compared against.
"""
from typing import Tuple

from schmidt_subspaces.bounds import flanders_max_leq, max_dim_geq, westwick_range
from .basis import SubspaceBasis
from .subspaces import (
    antisymmetric_basis_3x3, construct_fixed_rank_subspace, construct_max_rank_leq_subspace,
    construct_min_rank_subspace, random_subspace
)

DEFAULT_RANDOM_R = 2


def build_geq(config) -> Tuple[SubspaceBasis, int]:
    basis = construct_min_rank_subspace(config.da, config.db, config.r)
    return basis, max_dim_geq(config.da, config.db, config.r)


def build_flanders(config) -> Tuple[SubspaceBasis, int]:
    basis = construct_max_rank_leq_subspace(config.da, config.db, config.r)
    return basis, flanders_max_leq(config.da, config.db, config.r)


def build_fixed(config) -> Tuple[SubspaceBasis, int]:
    basis = construct_fixed_rank_subspace(config.da, config.db)
    return basis, westwick_range(config.da, config.db, config.da).lo


def build_antisymmetric(config) -> Tuple[SubspaceBasis, int]:
    return antisymmetric_basis_3x3(), westwick_range(3, 3, 2).exact


def build_random(config) -> Tuple[SubspaceBasis, int]:
    # the bound is the largest dimension that can still avoid rank < r
    r = min(DEFAULT_RANDOM_R, config.da, config.db) if config.r is None else config.r
    basis = random_subspace(config.da, config.db, config.dim, config.seed, r=r)
    return basis, max_dim_geq(config.da, config.db, r)
