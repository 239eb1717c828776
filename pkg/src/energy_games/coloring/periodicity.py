from __future__ import annotations
from enum import StrEnum
import logging

from pydantic import BaseModel, ConfigDict

from energy_games.coloring.grid import Color, ColorGrid
from energy_games.reductions import LineParams, OcaToOcnParams

logger = logging.getLogger(__name__)


class LineStatus(StrEnum):
    BLACK_WITHIN_GRID = "BlackWithinGrid"
    WHITE_FROM = "WhiteFrom"
    INCONCLUSIVE = "Inconclusive"


class LineSummary(BaseModel):
    """Classification of one vertical line; ``w`` is set only for ``WhiteFrom``."""

    model_config = ConfigDict(frozen=True)

    status: LineStatus
    w: int | None = None

    @property
    def definite(self) -> bool:
        return self.status is not LineStatus.INCONCLUSIVE

    @property
    def black(self) -> bool:
        return self.status is LineStatus.BLACK_WITHIN_GRID

    def __str__(self) -> str:
        return f"{self.status}({self.w})" if self.w is not None else str(self.status)


class NoStablePattern(BaseModel):
    model_config = ConfigDict(frozen=True)

    reason: str


def summarize_line(column: list[Color]) -> LineSummary:
    """
    Classifies a column read bottom-up.

    The column is ``WhiteFrom(w)`` when it is definite Black below ``w`` and definite White from
    ``w`` on, and ``BlackWithinGrid`` when it is definite Black everywhere.
    """
    if all(color is Color.BLACK for color in column):
        return LineSummary(status=LineStatus.BLACK_WITHIN_GRID)
    w = len(column)
    while w > 0 and column[w - 1] is Color.WHITE:
        w -= 1
    if w == len(column) or any(color is not Color.BLACK for color in column[:w]):
        return LineSummary(status=LineStatus.INCONCLUSIVE)
    return LineSummary(status=LineStatus.WHITE_FROM, w=w)


def line_summaries(grid: ColorGrid) -> dict[tuple[str, str, int], LineSummary]:
    return {
        (left, right, m): summarize_line(grid.column(left, right, m))
        for left, right in grid.pairs()
        for m in range(grid.m_max + 1)
    }


def _pattern_holds(grid: ColorGrid, lines: dict[tuple[str, str, int], LineSummary], level: int, period: int) -> bool:
    for left, right in grid.pairs():
        if not all(lines[(left, right, level + r)].definite for r in range(period)):
            return False
        for i in range(level, grid.m_max - period + 1):
            here, there = lines[(left, right, i)], lines[(left, right, i + period)]
            if not (here.definite and there.definite):
                continue
            if here.black != there.black:
                return False
            if here.w is not None and there.w is not None and here.w > there.w:
                return False
    return True


def detect_periodic_parameters(grid: ColorGrid) -> OcaToOcnParams | NoStablePattern:
    """
    Searches the least level ``l`` and period ``K`` (in this order) at which the grid repeats.

    Black lines must repeat with period ``K`` from level ``l`` on and the least White counters
    must not decrease along a period. The lines at levels ``l .. l+K-1`` must be definite for
    every pair, as the returned parameters are read off them. The result is a candidate only:
    nothing beyond the grid is checked.

    Args:
        grid (ColorGrid): A coloured grid.

    Returns:
        OcaToOcnParams | NoStablePattern: The parameters read at the detected level, or the
        reason why no pattern was found.
    """
    lines = line_summaries(grid)
    for level in range(1, max(1, grid.m_max // 2) + 1):
        for period in range(1, max(1, grid.m_max // 3) + 1):
            if level + period - 1 > grid.m_max or not _pattern_holds(grid, lines, level, period):
                continue
            logger.info("detected periodic pattern l=%d, K=%d", level, period)
            return OcaToOcnParams(
                l=level,
                k=period,
                lines=tuple(
                    LineParams(
                        left=left,
                        right=right,
                        w_at_l=lines[(left, right, level)].w,
                        black=tuple(lines[(left, right, level + r)].black for r in range(period)),
                    )
                    for left, right in grid.pairs()
                ),
            )
    return NoStablePattern(reason=f"no level and period fit a {grid.m_max + 1}-column grid")
