from typing import Sequence

from .theorems import BoundsTable

TABLE_COLUMNS = (
    ("da", "da"),
    ("db", "db"),
    ("r", "r"),
    ("max_dim_geq", "geq"),
    ("flanders_max_leq", "flanders"),
    ("westwick_lo", "w_lo"),
    ("westwick_hi", "w_hi"),
    ("westwick_exact", "w_exact"),
    ("naive_fixed_upper", "naive"),
    ("variety_dim", "variety"),
    ("westwick_reason", "reason"),
)


def _cell(value):
    if value is None:
        return "-"
    return str(value)


def render_table(rows: Sequence[BoundsTable]) -> str:
    """
    One header line and one line per row; columns left aligned, separated by two spaces.
    """
    grid = [[header for _, header in TABLE_COLUMNS]]
    for row in rows:
        grid.append([_cell(getattr(row, attr)) for attr, _ in TABLE_COLUMNS])

    widths = [max(len(line[i]) for line in grid) for i in range(len(TABLE_COLUMNS))]
    lines = [
        "  ".join(value.ljust(width) for value, width in zip(line, widths)).rstrip()
        for line in grid
    ]
    return "\n".join(lines) + "\n"


def render_fields(record: dict) -> str:
    """
    key = value lines for single-record reports
    """
    width = max(len(k) for k in record)
    return "".join(f"{k.ljust(width)} = {_cell(record[k])}\n" for k in record)
