import random
from functools import lru_cache

import numpy as np
import pytest
from energy_games.cli.generators import random_oca, random_ocn
from energy_games.coloring import Color, compute_coloring, spot_check_closure
from energy_games.models import InvalidModelError, OcaConf, steps
from energy_games.solvers import Bounds, SimPair, simulation_approximants
from tests.machines import one_counter

BOUNDS = Bounds(counter_cap=12, energy_cap=1, round_cap=30)
STAIRCASE = one_counter([("p", "a", -1, "p")]), one_counter([("r", "a", -1, "r")])


def brute_force_simulated(spoiler, duplicator, left: OcaConf, right: OcaConf, depth: int = 20) -> bool:
    """Bounded-round simulation approximant computed directly from the step relation."""

    @lru_cache(maxsize=None)
    def approximant(rounds: int, left: OcaConf, right: OcaConf) -> bool:
        if rounds == 0:
            return True
        answers = steps(duplicator, right)
        return all(
            any(answer == action and approximant(rounds - 1, target, response) for answer, response in answers)
            for action, target in steps(spoiler, left)
        )

    return approximant(depth, left, right)


def test_universal_duplicator_colours_everything_white():
    """Tests that a Duplicator answering every action everywhere simulates every cell."""
    spoiler = one_counter([("p", "a", 0, "p"), ("p", "a", -1, "p")])
    universal = one_counter([("u", "a", 0, "u")])

    grid = compute_coloring(spoiler, universal, 4, 4, BOUNDS)

    assert np.all(grid.cells[("p", "u")] == Color.WHITE)


def test_missing_action_colours_everything_black():
    """Tests that an action Duplicator lacks makes every cell Black."""
    spoiler = one_counter([("p", "b", 0, "p")])
    duplicator = one_counter([("u", "a", 0, "u")], states=["u"])

    grid = compute_coloring(spoiler, duplicator, 3, 5, BOUNDS)

    assert np.all(grid.cells[("p", "u")] == Color.BLACK)
    assert grid.bounds == BOUNDS


def test_staircase_matches_brute_force():
    """Tests the diagonal boundary of two decrement loops against the approximant table."""
    spoiler, duplicator = STAIRCASE

    grid = compute_coloring(spoiler, duplicator, 9, 9, BOUNDS)

    for m in range(10):
        for m_prime in range(10):
            expected = Color.WHITE if m <= m_prime else Color.BLACK
            assert grid.color("p", "r", m, m_prime) is expected
            simulated = brute_force_simulated(spoiler, duplicator, OcaConf("p", m), OcaConf("r", m_prime))
            assert simulated == (expected is Color.WHITE)
    table = simulation_approximants(spoiler, duplicator, [SimPair(OcaConf("p", 5), OcaConf("r", 2))], BOUNDS)
    assert table[SimPair(OcaConf("p", 5), OcaConf("r", 2))] == 3


def test_random_grids_are_column_monotone():
    """Tests the column property on random grids, with and without the fill shortcut."""
    rng = random.Random(7)
    checked = 0
    for _ in range(8):
        spoiler = random_oca(rng, max_states=2, max_rules=4, prefix="l")
        duplicator = random_ocn(rng, max_states=2, max_rules=4, prefix="r")
        filled = compute_coloring(spoiler, duplicator, 6, 6, Bounds(counter_cap=9, energy_cap=1, round_cap=20))
        plain = compute_coloring(
            spoiler, duplicator, 6, 6, Bounds(counter_cap=9, energy_cap=1, round_cap=20), fill=False
        )

        assert filled.monotonicity_violations() == []
        assert plain.monotonicity_violations() == []
        for pair, cells in plain.cells.items():
            definite = cells != Color.UNKNOWN
            assert np.array_equal(cells[definite], filled.cells[pair][definite])
        assert spot_check_closure(filled, spoiler, duplicator, rng) == []
        checked += filled.definite_count()
    assert checked > 0


def test_staircase_white_cells_are_closed():
    """Tests that every White cell of the staircase answers each step inside the White region."""
    spoiler, duplicator = STAIRCASE
    grid = compute_coloring(spoiler, duplicator, 6, 6, BOUNDS)

    assert spot_check_closure(grid, spoiler, duplicator, random.Random(3), samples=1000) == []


def test_duplicator_must_be_a_net():
    """Tests that zero tests on Duplicator's side are rejected."""
    spoiler, _ = STAIRCASE
    automaton = one_counter([("r", "a", -1, "r")], zero=[("r", "a", 0, "r")])

    with pytest.raises(InvalidModelError):
        compute_coloring(spoiler, automaton, 2, 2, BOUNDS)
