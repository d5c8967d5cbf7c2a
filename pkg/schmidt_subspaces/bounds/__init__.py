from .theorems import (  # noqa
    BoundsTable, VarietyDim, WestwickRange, bounds_grid, bounds_table, flanders_max_leq,
    max_dim_geq, variety_dim, westwick_range
)
from .applications import MixedStateReport, RandomComparison, mixed_state_report, random_comparison  # noqa
from .render import render_fields, render_table  # noqa
