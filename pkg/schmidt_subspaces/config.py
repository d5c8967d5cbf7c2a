import json
import os
from dataclasses import dataclass, field, asdict
from typing import Optional

from mergedeep import merge
from sympy import isprime

from schmidt_subspaces.utils import AttrDict
from schmidt_subspaces.utils.exceptions import (
    ArtifactIOError, DomainError, MultipleValidationErrors
)

CONFIG_ENV_VAR = "SCHMIDT_SUBSPACES_CONFIG"
SITE_CONFIG_FILE = "schmidt_subspaces.json"

DEFAULTS = {
    "developer_mode": False,
    "log_level": "WARNING",
    "numeric_tolerance": 1e-9,
    "witness_tolerance": 1e-7,
    "witness_confirm_tolerance": 1e-6,
    "pencil_tolerance": 1e-8,
    "sample_box": 9,
    "max_witnesses": 10,
    "gfp_enumeration_cap": 10 ** 6,
    "tns_certification_cap": 8,
    "factorial_exact_cap": 64,
    "sigma_restarts": 64,
    "sigma_iters": 500,
    "structural_self_check_samples": 32,
}

_conf = None


def get_conf(overrides=None, reload=False) -> AttrDict:
    """
    Returns the effective settings: package defaults, deep-merged with the
    site config file (if any) and then with `overrides`.

    The merged result is cached; pass `reload=True` after changing the
    site file or the environment.
    """
    global _conf

    if _conf is None or reload:
        _conf = AttrDict(merge({}, DEFAULTS, read_site_config()))

    if not overrides:
        return _conf

    return AttrDict(merge({}, _conf, overrides))


def set_conf(**values):
    global _conf
    _conf = AttrDict(merge({}, get_conf(), values))
    return _conf


def read_site_config(path=None):
    path = path or os.environ.get(CONFIG_ENV_VAR) or SITE_CONFIG_FILE
    if not os.path.isfile(path):
        return {}

    try:
        with open(path, "r") as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        raise ArtifactIOError(f"Could not read config {path}: {e}", path=path) from e

    if not isinstance(data, dict):
        raise ArtifactIOError(f"Config {path} must hold a JSON object", path=path)

    return data


def _conf_default(key):
    return field(default_factory=lambda: get_conf()[key])


CONSTRUCT_KINDS = ("geq", "flanders", "fixed", "antisymmetric", "random")
VERIFY_MODES = ("sample", "gfp", "sigma", "structural")


@dataclass
class RunConfig:
    command: str
    da: Optional[int] = None
    db: Optional[int] = None
    r: Optional[int] = None
    kind: str = "geq"
    dim: Optional[int] = None
    mode: str = "sample"
    direction: Optional[str] = None
    seed: int = 0
    samples: int = 1000
    restarts: int = _conf_default("sigma_restarts")
    iters: int = _conf_default("sigma_iters")
    p: Optional[int] = None
    tolerance: Optional[float] = None
    grid: bool = False
    d: Optional[int] = None
    fraction: Optional[float] = None
    k: Optional[float] = None
    input: Optional[str] = None
    output: Optional[str] = None
    format: str = "json"

    def as_dict(self):
        return asdict(self)

    def validate(self):
        errors = list(self._collect_errors())
        if len(errors) == 1:
            raise errors[0]
        if errors:
            raise MultipleValidationErrors(errors)
        return self

    def _collect_errors(self):
        if self.format not in ("json", "text"):
            yield DomainError(f"format must be json or text, got {self.format}")
        if self.seed is None or self.seed < 0:
            yield DomainError("seed must be a non-negative integer")

        check = getattr(self, f"_check_{self.command}", None)
        if check is None:
            yield DomainError(f"unknown command {self.command}")
            return
        yield from check()

    def _check_dims(self):
        for name in ("da", "db"):
            value = getattr(self, name)
            if value is None or value < 1:
                yield DomainError(f"{name} must be a positive integer", field=name)

    def _check_construct(self):
        if self.kind not in CONSTRUCT_KINDS:
            yield DomainError(f"kind must be one of {', '.join(CONSTRUCT_KINDS)}")
            return
        # the antisymmetric subspace lives in 3x3 only
        if self.kind == "antisymmetric":
            return
        yield from self._check_dims()
        if not (self.da and self.db):
            return

        lo_r = 1 if self.kind == "flanders" else 2
        if self.kind == "fixed":
            if self.da > self.db:
                yield DomainError("fixed rank construction needs da <= db")
            if self.da < 2:
                yield DomainError("fixed rank construction needs da >= 2")
            return
        if self.r is None:
            # random subspaces carry no rank guarantee; r only sets the reported bound
            if self.kind != "random":
                yield DomainError("r out of range", r=self.r)
        elif not lo_r <= self.r <= min(self.da, self.db):
            yield DomainError("r out of range", r=self.r)
        if self.kind == "random" and (
                self.dim is None or not 1 <= self.dim <= self.da * self.db):
            yield DomainError("dim must lie in [1, da*db] for random subspaces")

    def _check_verify(self):
        if not self.input:
            yield DomainError("an input basis file is required")
        if self.mode not in VERIFY_MODES:
            yield DomainError(f"mode must be one of {', '.join(VERIFY_MODES)}")
        if self.direction not in (None, "geq", "leq"):
            yield DomainError("direction must be geq or leq")
        if self.r is not None and self.r < 1:
            yield DomainError("r out of range", r=self.r)
        if self.mode == "gfp" and (self.p is None or not isprime(self.p)):
            yield DomainError("p must be prime", p=self.p)
        if self.samples < 1:
            yield DomainError("samples must be at least 1")
        if self.restarts < 1 or self.iters < 1:
            yield DomainError("restarts and iters must be at least 1")
        if self.tolerance is not None and not self.tolerance > 0:
            yield DomainError("tolerance must be positive")

    def _check_bounds(self):
        yield from self._check_dims()
        if self.grid or not (self.da and self.db):
            return
        if self.r is None or not 2 <= self.r <= min(self.da, self.db):
            yield DomainError("r out of range", r=self.r)

    def _check_report(self):
        if self.d is None and self.da is None:
            yield DomainError("report needs --d/--p or --da/--db/--k")
        if self.d is not None:
            if self.d < 2:
                yield DomainError("d must be at least 2")
            if self.fraction is None or not 0 < self.fraction < 1:
                yield DomainError("p must lie strictly between 0 and 1")
        if self.da is not None:
            yield from self._check_dims()
            if self.k is None or not 0 < self.k <= 1:
                yield DomainError("k must lie in (0, 1]")
