from __future__ import annotations
import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from energy_games.coloring import Color, ColorGrid, line_summaries
from energy_games.reductions import OcaToOcnParams
from energy_games.semilinear.upc import UltimatelyPeriodicColoring

logger = logging.getLogger(__name__)


class NotDistillable(BaseModel):
    model_config = ConfigDict(frozen=True)

    reason: str


def coloring_to_upc(grid: ColorGrid, params: OcaToOcnParams) -> UltimatelyPeriodicColoring | NotDistillable:
    """
    Turns a coloured grid and its periodic pattern into an ultimately periodic colouring.

    The window spans levels ``0 .. l+2K-1`` and Duplicator counters up to two above the largest
    White boundary inside it. Spoiler's period is ``K``; the slope is the growth of the White
    boundaries over one period, which has to be the same for every White line of the last
    window period. Duplicator's period is 1, as every line is constant above its boundary.
    The result must reproduce every definite cell of the grid.

    Args:
        grid (ColorGrid): A coloured grid reaching at least one period beyond the window.
        params (OcaToOcnParams): Level and period, as detected on the grid.

    Returns:
        UltimatelyPeriodicColoring | NotDistillable: The colouring, or why the grid does not fold.
    """
    level, period = params.l, params.k
    threshold = level + 2 * period - 1
    if threshold + period > grid.m_max:
        return NotDistillable(reason=f"grid of width {grid.m_max + 1} is too narrow for l={level}, K={period}")
    lines = line_summaries(grid)
    for left, right in grid.pairs():
        for m in range(threshold + period + 1):
            if not lines[(left, right, m)].definite:
                return NotDistillable(reason=f"line ({left},{right}) at level {m} is inconclusive")

    slopes = {
        lines[(left, right, m + period)].w - lines[(left, right, m)].w
        for left, right in grid.pairs()
        for m in range(threshold - period + 1, threshold + 1)
        if lines[(left, right, m)].w is not None and lines[(left, right, m + period)].w is not None
    }
    if len(slopes) > 1 or any(slope < 0 for slope in slopes):
        return NotDistillable(reason=f"White boundaries grow by {sorted(slopes)} over one period")
    slope = slopes.pop() if slopes else 0

    boundaries = [
        lines[(left, right, m)].w
        for left, right in grid.pairs()
        for m in range(threshold + 1)
        if lines[(left, right, m)].w is not None
    ]
    height = min(max(boundaries, default=0) + 2, grid.m_prime_max)
    cells = {pair: grid.cells[pair][: threshold + 1, : height + 1] == Color.WHITE for pair in grid.pairs()}
    upc = UltimatelyPeriodicColoring.from_cells(
        cells, grid.left_states, grid.right_states, period=period, period_prime=1, slope=slope
    )

    for left, right in grid.pairs():
        definite = np.argwhere(grid.cells[(left, right)] != Color.UNKNOWN)
        for m, m_prime in definite:
            expected = grid.cells[(left, right)][m, m_prime] == Color.WHITE
            if upc.is_white(left, right, int(m), int(m_prime)) != expected:
                return NotDistillable(reason=f"folding disagrees with ({left},{right}) at ({m},{m_prime})")
    logger.info("distilled colouring with window %s", upc.shape)
    return upc
