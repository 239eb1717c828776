import random

import pytest
from energy_games.cli.generators import random_oca, random_oceg
from energy_games.models import OcaConf, OcegConf
from energy_games.solvers import (
    Bounds,
    BoundsNotLargerError,
    EnergyProblem,
    Outcome,
    SimPair,
    SimulationProblem,
    refine,
    solve_energy_bounded,
    solve_simulation_bounded,
)
from tests.machines import counter_game

SMALL = Bounds(counter_cap=3, energy_cap=3, round_cap=3)
LARGE = Bounds(counter_cap=10, energy_cap=10, round_cap=20)


def test_unknown_resolves_with_larger_bounds():
    """Tests that more exploration turns an Unknown into a Win0."""
    game = counter_game([], ["q"], [("q", 0, "q", -1)])
    problem = EnergyProblem.of(game, OcegConf("q", 0, (5,)))

    previous = solve_energy_bounded(game, problem.position, SMALL)
    assert previous.outcome is Outcome.UNKNOWN

    refined = refine(previous, problem, LARGE)
    assert refined.outcome is Outcome.WIN0
    assert refined.bounds == LARGE


def test_win1_survives_refinement():
    """Tests that a definite verdict is kept."""
    game = counter_game([], ["q"], [("q", 0, "q", 0)])
    problem = EnergyProblem.of(game, OcegConf("q", 0, (0,)))

    previous = solve_energy_bounded(game, problem.position, SMALL)

    assert refine(previous, problem, LARGE).outcome is Outcome.WIN1


def test_bounds_must_be_larger():
    """Tests that refinement rejects bounds that do not dominate."""
    game = counter_game([], ["q"], [("q", 0, "q", 0)])
    problem = EnergyProblem.of(game, OcegConf("q", 0, (0,)))
    previous = solve_energy_bounded(game, problem.position, LARGE)

    with pytest.raises(BoundsNotLargerError):
        refine(previous, problem, SMALL)


def test_no_definite_flip_on_random_instances():
    """Tests monotone refinement on random energy and simulation instances."""
    rng = random.Random(2)
    middle = Bounds(counter_cap=6, energy_cap=6, round_cap=8)
    for _ in range(40):
        game = random_oceg(rng)
        problem = EnergyProblem.of(game, OcegConf(rng.choice(game.states), rng.randint(0, 2), (rng.randint(0, 2),)))
        refine(refine(solve_energy_bounded(game, problem.position, SMALL), problem, middle), problem, LARGE)

        left, right = random_oca(rng, prefix="l"), random_oca(rng, prefix="r")
        pair = SimPair(OcaConf(left.states[0], rng.randint(0, 2)), OcaConf(right.states[0], rng.randint(0, 2)))
        problem = SimulationProblem.of(left, right, pair)
        refine(refine(solve_simulation_bounded(left, right, pair, SMALL), problem, middle), problem, LARGE)
