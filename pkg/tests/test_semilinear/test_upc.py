import numpy as np
import pytest
from energy_games.coloring import Color
from energy_games.semilinear import (
    UltimatelyPeriodicColoring,
    UnknownPairError,
    decode_runs,
    encode_runs,
    upc_color,
)

# Columns per Spoiler counter, rows per Duplicator counter.
WINDOW = np.array(
    [
        [False, True, True, True],
        [False, False, True, True],
        [False, False, False, True],
    ]
)


def make_upc(period: int = 1, period_prime: int = 2, slope: int = 0) -> UltimatelyPeriodicColoring:
    return UltimatelyPeriodicColoring.from_cells(
        {("p", "r"): WINDOW}, ("p",), ("r",), period=period, period_prime=period_prime, slope=slope
    )


def test_window_lookup():
    """Tests that cells inside the window keep their colour."""
    upc = make_upc()

    assert upc_color(upc, "p", "r", 0, 1) is Color.WHITE
    assert upc_color(upc, "p", "r", 2, 2) is Color.BLACK
    assert upc.windows[0].rows == ("BBB", "WBB", "WWB", "WWW")


def test_folding_outside_the_window():
    """Tests that points beyond the thresholds take the colour of their representative."""
    upc = make_upc()
    threshold, period, threshold_prime, period_prime, _ = upc.shape

    for m_prime in range(threshold_prime + 1):
        assert upc_color(upc, "p", "r", threshold + period, m_prime) == upc_color(upc, "p", "r", threshold, m_prime)
    far = upc_color(upc, "p", "r", threshold + 3 * period + 1, threshold_prime + 2 * period_prime)
    assert upc.representative(threshold + 3 * period + 1, threshold_prime + 2 * period_prime) == (2, 3)
    assert far == upc_color(upc, "p", "r", 2, 3)


def test_periodicity_is_sampled():
    """Tests periodicity in both coordinates above the thresholds."""
    upc = make_upc(period=2, period_prime=2)

    for m in range(upc.threshold + 1, upc.threshold + 12):
        for m_prime in range(upc.threshold_prime + 1, upc.threshold_prime + 12):
            assert upc.is_white("p", "r", m + 2, m_prime) == upc.is_white("p", "r", m, m_prime)
            assert upc.is_white("p", "r", m, m_prime + 2) == upc.is_white("p", "r", m, m_prime)


def test_slope_shifts_the_duplicator_counter():
    """Tests that each horizontal period moves the colouring up by the slope."""
    upc = make_upc(period=1, period_prime=1, slope=1)

    for m in range(upc.threshold + 1, upc.threshold + 8):
        for m_prime in range(0, 12):
            assert upc.is_white("p", "r", m + 1, m_prime + 1) == upc.is_white("p", "r", m, m_prime)
    assert upc_color(upc, "p", "r", 5, 0) is Color.BLACK
    assert upc_color(upc, "p", "r", 5, 6) is Color.WHITE


def test_unknown_pair():
    """Tests that undeclared pairs are rejected."""
    with pytest.raises(UnknownPairError):
        upc_color(make_upc(), "q", "r", 0, 0)


def test_run_length_rows():
    """Tests the run-length row encoding used in colouring files."""
    assert encode_runs("WWWBB") == "3W2B"
    assert decode_runs("3W2B") == "WWWBB"
    assert decode_runs("WBW") == "WBW"

    upc = make_upc()
    dumped = upc.model_dump(mode="json")

    assert dumped["windows"][0]["rows"] == ["3B", "1W2B", "2W1B", "3W"]
    assert UltimatelyPeriodicColoring.model_validate(dumped) == upc


def test_structural_problems():
    """Tests that malformed windows are reported."""
    upc = make_upc(period=4)

    assert upc.problems() == ["period 4 exceeds the window width 3"]
    assert make_upc().problems() == []
