from __future__ import annotations
from io import BytesIO
from typing import Literal

import matplotlib.pyplot as plt
import numpy as np

from energy_games.coloring.grid import Color, ColorGrid, StatePair

RenderFormat = Literal["ascii", "pgm", "png"]

GREY_LEVELS = {Color.BLACK: 0, Color.WHITE: 255, Color.UNKNOWN: 128}


def _picture(grid: ColorGrid, pair: StatePair) -> np.ndarray:
    """Rows from the largest Duplicator counter down to 0, one column per Spoiler counter."""
    return grid.cells[pair].T[::-1]


def render_grid(grid: ColorGrid, format: RenderFormat = "ascii", pair: StatePair | None = None) -> bytes:
    """
    Renders the grid with one character or pixel per cell.

    Spoiler's counter grows to the right and Duplicator's counter grows upwards. Without
    ``pair`` every state pair is rendered, stacked in declaration order.

    Args:
        grid (ColorGrid): The coloured grid.
        format (str): ``ascii`` (W, B and ?), ``pgm`` (binary greymap) or ``png``.
        pair (tuple[str, str] | None): Only render this state pair.

    Returns:
        bytes: The rendering.
    """
    pairs = [pair] if pair is not None else list(grid.pairs())
    match format:
        case "ascii":
            return _ascii(grid, pairs)
        case "pgm":
            pixels = _grey(grid, pairs)
            height, width = pixels.shape
            return f"P5\n{width} {height}\n255\n".encode("ascii") + pixels.tobytes()
        case "png":
            return _png(grid, pairs)
    raise ValueError(f"unknown render format {format!r}")


def _ascii(grid: ColorGrid, pairs: list[StatePair]) -> bytes:
    blocks = []
    for left, right in pairs:
        rows = ["".join(Color(int(value)).symbol for value in row) for row in _picture(grid, (left, right))]
        if len(pairs) > 1:
            rows.insert(0, f"({left},{right})")
        blocks.append("\n".join(rows))
    return "\n\n".join(blocks).encode("ascii")


def _grey(grid: ColorGrid, pairs: list[StatePair]) -> np.ndarray:
    lookup = np.array([GREY_LEVELS[Color(value)] for value in range(len(Color))], dtype=np.uint8)
    return np.vstack([lookup[_picture(grid, pair)] for pair in pairs])


def _png(grid: ColorGrid, pairs: list[StatePair]) -> bytes:
    figure, axes = plt.subplots(1, len(pairs), squeeze=False, figsize=(3 * len(pairs), 3))
    for ax, (left, right) in zip(axes[0], pairs):
        ax.imshow(_grey(grid, [(left, right)]), cmap="gray", vmin=0, vmax=255)
        ax.set_title(f"({left},{right})")
        ax.set_xlabel("m")
        ax.set_ylabel("m'")
    buffer = BytesIO()
    figure.savefig(buffer, format="png")
    plt.close(figure)
    return buffer.getvalue()
