from dataclasses import dataclass, field, replace
from typing import Tuple

from schmidt_subspaces.statemat import StateMatrix, linear_combination, stack_rank
from schmidt_subspaces.utils.codec import decode_matrix, encode_matrix
from schmidt_subspaces.utils.exceptions import (
    DimensionError, DomainError, FieldMismatchError, MatrixDecodeError
)

MIN_RANK_GEQ = "min_rank_geq_r"
MAX_RANK_LEQ = "max_rank_leq_r"
FIXED_RANK = "fixed_rank"
ANTISYMMETRIC = "antisymmetric"
RANDOM = "random"
USER = "user"

KINDS = (MIN_RANK_GEQ, MAX_RANK_LEQ, FIXED_RANK, ANTISYMMETRIC, RANDOM, USER)

# kinds whose matrices carry the per-diagonal metadata used by structural certificates
DIAGONAL_KINDS = (MIN_RANK_GEQ, FIXED_RANK)


@dataclass(frozen=True)
class SubspaceBasis:
    da: int
    db: int
    r: int
    kind: str
    matrices: Tuple[StateMatrix, ...]
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"Unknown basis kind {self.kind}", kind=self.kind)
        if not self.matrices:
            raise DimensionError("A basis needs at least one matrix")

        matrices = tuple(self.matrices)
        first = matrices[0]
        for idx, m in enumerate(matrices):
            if m.shape != (self.da, self.db):
                raise DimensionError(
                    f"Matrix {idx} is {m.rows}x{m.cols}, basis is {self.da}x{self.db}")
            if (m.field, m.p) != (first.field, first.p):
                raise FieldMismatchError("All basis matrices must share one field")
        object.__setattr__(self, "matrices", matrices)

        if stack_rank(matrices) != len(matrices):
            raise DimensionError("Basis matrices are linearly dependent", kind=self.kind)

    @property
    def dim(self):
        return len(self.matrices)

    @property
    def field(self):
        return self.matrices[0].field

    @property
    def transposed(self):
        return bool(self.metadata.get("transposed"))

    def combination(self, coeffs) -> StateMatrix:
        return linear_combination(self.matrices, coeffs)

    def transpose(self):
        metadata = dict(self.metadata)
        metadata["transposed"] = not self.transposed
        return replace(
            self,
            da=self.db,
            db=self.da,
            matrices=tuple(m.transpose() for m in self.matrices),
            metadata=metadata
        )

    def as_dict(self):
        return {
            "da": self.da,
            "db": self.db,
            "r": self.r,
            "kind": self.kind,
            "field": self.field,
            "matrices": [encode_matrix(m) for m in self.matrices],
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, obj, location="$"):
        if not isinstance(obj, dict):
            raise MatrixDecodeError(location, "basis must be a JSON object")
        for key in ("da", "db", "r", "kind", "matrices"):
            if key not in obj:
                raise MatrixDecodeError(location, f"missing field '{key}'")
        for key in ("da", "db", "r"):
            value = obj[key]
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise MatrixDecodeError(f"{location}.{key}", f"{key} must be a positive integer")
        if obj["kind"] not in KINDS:
            raise MatrixDecodeError(f"{location}.kind", f"kind must be one of {', '.join(KINDS)}")
        if not isinstance(obj["matrices"], list):
            raise MatrixDecodeError(f"{location}.matrices", "matrices must be a list")

        matrices = tuple(
            decode_matrix(m, f"{location}.matrices[{idx}]")
            for idx, m in enumerate(obj["matrices"])
        )
        if "field" in obj and matrices and matrices[0].field != obj["field"]:
            raise MatrixDecodeError(f"{location}.field", "basis field differs from its matrices")

        return cls(
            da=obj["da"],
            db=obj["db"],
            r=obj["r"],
            kind=obj["kind"],
            matrices=matrices,
            metadata=dict(obj.get("metadata") or {})
        )
