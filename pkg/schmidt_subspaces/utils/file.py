import json
import os
import tempfile

from schmidt_subspaces.utils.exceptions import ArtifactIOError


def dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def write_artifact(path, contents: str):
    """
    Writes `contents` to `path` atomically (temp file in the same directory + rename)
    """
    target = os.path.abspath(path)
    target_dir = os.path.dirname(target)
    try:
        if not os.path.exists(target_dir):
            os.makedirs(target_dir)

        fd, tmp_path = tempfile.mkstemp(
            dir=target_dir, prefix=".tmp-", suffix=os.path.basename(target))
        try:
            with os.fdopen(fd, "w") as f:
                f.write(contents)
            os.replace(tmp_path, target)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise
    except OSError as e:
        raise ArtifactIOError(f"Could not write {path}: {e}", path=str(path)) from e

    return target
