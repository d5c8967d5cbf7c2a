import importlib
import json

from schmidt_subspaces.construct import SubspaceBasis
from .exceptions import ArtifactIOError, BasisFileSyntaxError, DomainError, MatrixDecodeError


def get_hooks(hook: str):
    from schmidt_subspaces import hooks
    return getattr(hooks, hook)


def get_attr(method_string: str):
    """
    Resolves a dotted path like `package.module.function`
    """
    module_name, _, attr = method_string.rpartition(".")
    return getattr(importlib.import_module(module_name), attr)


def resolve_hook(hook: str, name: str):
    registry = get_hooks(hook)
    if name not in registry:
        raise DomainError(
            f"{name} is not one of {', '.join(sorted(registry))}", hook=hook, name=name)
    return get_attr(registry[name])


def read_json_file(path: str):
    try:
        with open(path, "r") as f:
            text = f.read()
    except OSError as e:
        raise ArtifactIOError(f"Could not read {path}: {e}", path=str(path)) from e

    try:
        return json.loads(text)
    except ValueError as e:
        raise BasisFileSyntaxError(path, f"invalid JSON: {e}") from e


def load_basis(path: str) -> SubspaceBasis:
    """
    Reads a basis artifact written by `construct`. The basis may sit at the top
    level or under a "basis" key next to the run config.
    """
    obj = read_json_file(path)
    location = "$"
    if isinstance(obj, dict) and "basis" in obj:
        obj, location = obj["basis"], "$.basis"

    try:
        return SubspaceBasis.from_dict(obj, location)
    except MatrixDecodeError as e:
        raise BasisFileSyntaxError(path, e.message) from e
