"""
Explicit subspace constructions.

- construct_min_rank_subspace: every nonzero element has rank >= r, with the
  maximal dimension (da - r + 1)(db - r + 1). Diagonal k of length L >= r
  receives L - r + 1 matrices whose diagonal entries are the first columns
  of the leading L x L block of one Vandermonde matrix.
- construct_max_rank_leq_subspace: R (x) C^db with R spanned by the first r
  basis rows; every element has rank <= r, dimension r * db.
- construct_fixed_rank_subspace: the r = da case of the first construction.
- antisymmetric_basis_3x3: the antisymmetric subspace of C^3 (x) C^3.
"""
from dataclasses import replace
from typing import Sequence

from schmidt_subspaces.config import get_conf
from schmidt_subspaces.statemat import COMPLEX, RATIONAL, StateMatrix, rank_exact
from schmidt_subspaces.tns import vandermonde
from schmidt_subspaces.utils.codec import encode_scalars
from schmidt_subspaces.utils.exceptions import ConstructionInconsistentError, DomainError
from schmidt_subspaces.utils.logger import get_logger
from schmidt_subspaces.utils.seeds import draw_coefficients, substream
from .basis import (
    ANTISYMMETRIC, FIXED_RANK, MAX_RANK_LEQ, MIN_RANK_GEQ, RANDOM, USER, SubspaceBasis
)
from .diagonals import build_diagonal_family, diagonals

logger = get_logger("construct")

SELF_CHECK_SEED = 0


def construct_min_rank_subspace(da: int, db: int, r: int, check_samples: int = None) -> SubspaceBasis:
    if not 2 <= r <= min(da, db):
        raise DomainError("r out of range", da=da, db=db, r=r)

    if da > db:
        return construct_min_rank_subspace(db, da, r, check_samples).transpose()

    tns = vandermonde(size=da)
    matrices, labels, columns = [], [], []
    for diag in diagonals(da, db):
        family = build_diagonal_family(diag, r, tns)
        matrices.extend(family)
        labels.extend([diag.k] * len(family))
        columns.extend(range(len(family)))

    basis = SubspaceBasis(
        da=da, db=db, r=r, kind=MIN_RANK_GEQ,
        matrices=tuple(matrices),
        metadata={
            "diagonals": labels,
            "tns_columns": columns,
            "tns_nodes": encode_scalars(tns.nodes, RATIONAL),
            "tns_certified": tns.certified,
            "transposed": False,
        }
    )
    logger.info("Constructed rank >= %s subspace of %sx%s, dim %s", r, da, db, basis.dim)
    self_check(basis, lambda rank: rank >= r, check_samples)
    return basis


def construct_max_rank_leq_subspace(da: int, db: int, r: int, check_samples: int = None) -> SubspaceBasis:
    if not 1 <= r <= min(da, db):
        raise DomainError("r out of range", da=da, db=db, r=r)

    if da > db:
        return construct_max_rank_leq_subspace(db, da, r, check_samples).transpose()

    matrices = tuple(
        StateMatrix.elementary(da, db, i, j)
        for i in range(r)
        for j in range(db)
    )
    basis = SubspaceBasis(
        da=da, db=db, r=r, kind=MAX_RANK_LEQ,
        matrices=matrices,
        metadata={"factor_rows": list(range(r)), "transposed": False}
    )
    logger.info("Constructed rank <= %s subspace of %sx%s, dim %s", r, da, db, basis.dim)
    self_check(basis, lambda rank: rank <= r, check_samples)
    return basis


def construct_fixed_rank_subspace(da: int, db: int, check_samples: int = None) -> SubspaceBasis:
    if da > db:
        raise DomainError("fixed rank construction needs da <= db; transpose first", da=da, db=db)
    if da < 2:
        raise DomainError("fixed rank construction needs da >= 2", da=da)

    basis = replace(
        construct_min_rank_subspace(da, db, da, check_samples=0),
        kind=FIXED_RANK
    )
    self_check(basis, lambda rank: rank == da, check_samples)
    return basis


def antisymmetric_basis_3x3() -> SubspaceBasis:
    matrices = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        entries = [0] * 9
        entries[i * 3 + j] = 1
        entries[j * 3 + i] = -1
        matrices.append(StateMatrix(3, 3, tuple(entries), RATIONAL))

    return SubspaceBasis(da=3, db=3, r=2, kind=ANTISYMMETRIC, matrices=tuple(matrices))


def random_subspace(da: int, db: int, dim: int, seed: int, r: int = 2) -> SubspaceBasis:
    """
    dim matrices with independent complex Gaussian entries
    """
    if not 1 <= dim <= da * db:
        raise DomainError("dim must lie in [1, da*db]", dim=dim)

    rng = substream(seed, "random-subspace")
    matrices = []
    for _ in range(dim):
        values = rng.standard_normal(da * db) + 1j * rng.standard_normal(da * db)
        matrices.append(StateMatrix(da, db, tuple(values), COMPLEX))

    return SubspaceBasis(
        da=da, db=db, r=r, kind=RANDOM,
        matrices=tuple(matrices),
        metadata={"seed": seed}
    )


def user_subspace(matrices: Sequence[StateMatrix], r: int) -> SubspaceBasis:
    matrices = tuple(matrices)
    if not matrices:
        raise DomainError("A user basis needs at least one matrix")
    return SubspaceBasis(
        da=matrices[0].rows, db=matrices[0].cols, r=r, kind=USER, matrices=matrices)


def self_check(basis: SubspaceBasis, holds, samples: int = None):
    """
    Exact ranks of a few seeded combinations must satisfy `holds`.
    """
    if samples is None:
        samples = get_conf().structural_self_check_samples

    box = get_conf().sample_box
    for idx in range(samples):
        rng = substream(SELF_CHECK_SEED, f"self-check-{basis.kind}", idx)
        coeffs = draw_coefficients(rng, basis.dim, box)

        rank = rank_exact(basis.combination(coeffs))
        if not holds(rank):
            raise ConstructionInconsistentError(
                kind=basis.kind, da=basis.da, db=basis.db, r=basis.r,
                coeffs=coeffs, rank=rank)

    return basis
