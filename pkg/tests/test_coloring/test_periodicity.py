import numpy as np
from energy_games.coloring import (
    Color,
    ColorGrid,
    LineStatus,
    LineSummary,
    NoStablePattern,
    compute_coloring,
    detect_periodic_parameters,
    line_summaries,
    summarize_line,
)
from energy_games.reductions import LineParams
from energy_games.solvers import Bounds
from tests.machines import one_counter

BOUNDS = Bounds(counter_cap=12, energy_cap=1, round_cap=30)
SYMBOLS = {"W": Color.WHITE, "B": Color.BLACK, "?": Color.UNKNOWN}


def grid_of(columns: list[str]) -> ColorGrid:
    """Single-pair grid from columns written bottom-up, one column per Spoiler counter."""
    cells = np.array([[SYMBOLS[symbol] for symbol in column] for column in columns], dtype=np.int8)
    return ColorGrid(
        left_states=("p",),
        right_states=("r",),
        m_max=len(columns) - 1,
        m_prime_max=len(columns[0]) - 1,
        bounds=BOUNDS,
        cells={("p", "r"): cells},
    )


def test_line_classification():
    """Tests the three line kinds."""
    assert summarize_line([Color.BLACK] * 6) == LineSummary(status=LineStatus.BLACK_WITHIN_GRID)
    assert summarize_line([SYMBOLS[s] for s in "BBBBWWW"]) == LineSummary(status=LineStatus.WHITE_FROM, w=4)
    assert summarize_line([SYMBOLS[s] for s in "WWWW"]) == LineSummary(status=LineStatus.WHITE_FROM, w=0)
    assert summarize_line([SYMBOLS[s] for s in "BBWW?"]).status is LineStatus.INCONCLUSIVE
    assert summarize_line([SYMBOLS[s] for s in "B?WW"]).status is LineStatus.INCONCLUSIVE


def test_line_summaries_cover_every_level():
    """Tests that one summary is produced per pair and level."""
    grid = grid_of(["WWW", "BWW", "BBB"])

    summaries = line_summaries(grid)

    assert set(summaries) == {("p", "r", 0), ("p", "r", 1), ("p", "r", 2)}
    assert summaries[("p", "r", 1)].w == 1
    assert summaries[("p", "r", 2)].black


def test_constant_white_boundary_gives_level_one_period_one():
    """Tests that constant lines are detected at the smallest level and period."""
    grid = grid_of(["WWWWW"] + ["BBWWW"] * 6)

    params = detect_periodic_parameters(grid)

    assert params.l == 1 and params.k == 1
    assert params.lines == (LineParams(left="p", right="r", w_at_l=2, black=(False,)),)


def test_alternating_lines_give_period_two():
    """Tests that lines alternating from level 2 on give level 2 and period 2."""
    grid = grid_of(["WWWW", "BBBB"] + ["BBBB", "BWWW"] * 4)

    params = detect_periodic_parameters(grid)

    assert (params.l, params.k) == (2, 2)
    assert params.lines == (LineParams(left="p", right="r", w_at_l=None, black=(True, False)),)


def test_unknown_grid_has_no_stable_pattern():
    """Tests that a grid without definite lines yields no candidate."""
    grid = grid_of(["????"] * 7)

    assert isinstance(detect_periodic_parameters(grid), NoStablePattern)


def test_staircase_parameters():
    """Tests the parameters detected on two decrement loops."""
    spoiler = one_counter([("p", "a", -1, "p")])
    duplicator = one_counter([("r", "a", -1, "r")])
    grid = compute_coloring(spoiler, duplicator, 9, 9, BOUNDS)

    params = detect_periodic_parameters(grid)

    assert (params.l, params.k) == (1, 1)
    assert params.line("p", "r") == LineParams(left="p", right="r", w_at_l=1, black=(False,))
