from energy_games.coloring.grid import Color, ColorGrid, StatePair, compute_coloring, spot_check_closure
from energy_games.coloring.periodicity import (
    LineStatus,
    LineSummary,
    NoStablePattern,
    detect_periodic_parameters,
    line_summaries,
    summarize_line,
)
from energy_games.coloring.render import RenderFormat, render_grid

__all__ = [
    "Color",
    "ColorGrid",
    "LineStatus",
    "LineSummary",
    "NoStablePattern",
    "RenderFormat",
    "StatePair",
    "compute_coloring",
    "detect_periodic_parameters",
    "line_summaries",
    "render_grid",
    "spot_check_closure",
    "summarize_line",
]
