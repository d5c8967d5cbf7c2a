"""
JSON encoding shared by matrices, bases and reports:

    {"rows": 2, "cols": 2, "field": "rational", "entries": ["1/1", "0/1", ...]}

rational entries are "num/den" strings, complex entries [re, im] pairs and
GF(p) entries integers (with "p" given on the matrix).
"""
from schmidt_subspaces.statemat import StateMatrix
from schmidt_subspaces.statemat.field import FIELDS, GFP, format_scalar, parse_scalar
from schmidt_subspaces.utils.exceptions import MatrixDecodeError, SchmidtSubspaceError


def encode_matrix(m: StateMatrix, **extra):
    out = {
        "rows": m.rows,
        "cols": m.cols,
        "field": m.field,
        "entries": [format_scalar(x, m.field) for x in m.entries],
    }
    if m.field == GFP:
        out["p"] = m.p
    out.update(extra)
    return out


def decode_matrix(obj, location="$") -> StateMatrix:
    if not isinstance(obj, dict):
        raise MatrixDecodeError(location, "matrix must be a JSON object")

    for key in ("rows", "cols", "field", "entries"):
        if key not in obj:
            raise MatrixDecodeError(location, f"missing field '{key}'")

    field = obj["field"]
    if field not in FIELDS:
        raise MatrixDecodeError(f"{location}.field", f"unknown field {field!r}")
    p = obj.get("p")
    if field == GFP and not isinstance(p, int):
        raise MatrixDecodeError(f"{location}.p", "gfp matrices need an integer 'p'")

    raw_entries = obj["entries"]
    if not isinstance(raw_entries, list):
        raise MatrixDecodeError(f"{location}.entries", "entries must be a list")

    entries = []
    for idx, raw in enumerate(raw_entries):
        try:
            entries.append(parse_scalar(raw, field, p))
        except (ValueError, ZeroDivisionError) as e:
            raise MatrixDecodeError(f"{location}.entries[{idx}]", str(e)) from e

    try:
        return StateMatrix(obj["rows"], obj["cols"], tuple(entries), field, p)
    except (SchmidtSubspaceError, TypeError) as e:
        raise MatrixDecodeError(location, str(e)) from e


def encode_scalars(values, field):
    return [format_scalar(x, field) for x in values]


def decode_scalars(raw, field, p=None, location="$"):
    if not isinstance(raw, list):
        raise MatrixDecodeError(location, "expected a list of scalars")
    try:
        return tuple(parse_scalar(x, field, p) for x in raw)
    except (ValueError, ZeroDivisionError) as e:
        raise MatrixDecodeError(location, str(e)) from e
