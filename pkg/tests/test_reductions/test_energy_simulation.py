import random

from energy_games.cli.generators import random_oca, random_oceg, random_vass
from energy_games.models import (
    Oca,
    OcaConf,
    OcegConf,
    PegConf,
    PegTransition,
    PushdownEnergyGame,
    VassConf,
    validate,
)
from energy_games.reductions import Clause, energy_to_simulation, simulation_to_energy
from energy_games.reductions.output import answer_state, turn_state, unreachable_states
from energy_games.solvers import (
    Bounds,
    EnergyArenaSolver,
    Outcome,
    SimPair,
    SimulationGame,
    solve_energy_bounded,
    solve_simulation_bounded,
)
from tests.machines import counter_game, one_counter, vass

ENERGY_BOUNDS = Bounds(counter_cap=6, energy_cap=6, round_cap=6)
SIMULATION_BOUNDS = Bounds(counter_cap=6, energy_cap=6, round_cap=14)


def single_state_game(effect: int) -> PushdownEnergyGame:
    return PushdownEnergyGame(
        states_p0=(),
        states_p1=("q",),
        stack_alphabet=("bot",),
        dimension=1,
        transitions=(PegTransition(id="t", source="q", top="bot", target="q", push=("bot",), effect=(effect,)),),
    )


def agree(first: Outcome, second: Outcome) -> bool:
    return not (first.definite and second.definite and first != second)


def test_neutral_player_1_loop():
    """Tests the state sets and the verdicts for a single neutral Player 1 loop."""
    game = single_state_game(0)

    output = energy_to_simulation(game)

    assert set(output.left.states) == {"q", "hat(q)"}
    assert set(output.right.states) == {"q", "choice(t)", "universal"}
    assert validate(output.left) == [] and validate(output.right) == []
    for energy in range(4):
        position = PegConf("q", ("bot",), (energy,))
        pair = output.position_map.apply(position)
        assert solve_energy_bounded(game, position, ENERGY_BOUNDS).outcome is Outcome.WIN1
        assert solve_simulation_bounded(output.left, output.right, pair, SIMULATION_BOUNDS).outcome is Outcome.WIN1


def test_blocked_vass_step_is_a_spoiler_win():
    """Tests that a draining move at energy zero is lost on both sides."""
    game = single_state_game(-1)
    output = energy_to_simulation(game)
    position = PegConf("q", ("bot",), (0,))

    assert solve_energy_bounded(game, position, ENERGY_BOUNDS).outcome is Outcome.WIN0
    verdict = solve_simulation_bounded(
        output.left, output.right, output.position_map.apply(position), SIMULATION_BOUNDS
    )
    assert verdict.outcome is Outcome.WIN0


def test_one_counter_game_gives_one_counter_automaton():
    """Tests the shape of the output and the refutation of zero-test choices."""
    game = counter_game(
        ["p"],
        ["q"],
        [("p", 0, "q", 0), ("q", -1, "p", 0), ("q", 0, "q", -1)],
        zero=[("q", 0, "p", 1)],
    )

    output = energy_to_simulation(game)

    assert isinstance(output.left, Oca)
    assert validate(output.left) == []
    assert Clause.REFUTE in output.provenance.values()
    for counter in range(3):
        for energy in range(3):
            position = OcegConf("q", counter, (energy,))
            expected = solve_energy_bounded(game, position, ENERGY_BOUNDS).outcome
            actual = solve_simulation_bounded(
                output.left, output.right, output.position_map.apply(position), SIMULATION_BOUNDS
            ).outcome
            assert agree(expected, actual), str(position)


def test_random_one_counter_games_agree():
    """Tests verdict agreement between random games and their simulation games."""
    rng = random.Random(101)
    definite = 0
    for _ in range(15):
        game = random_oceg(rng)
        output = energy_to_simulation(game)
        positions = [OcegConf(q, m, (e,)) for q in game.states for m in range(3) for e in range(3)]
        energy = EnergyArenaSolver(game, positions, ENERGY_BOUNDS)
        pairs = [output.position_map.apply(position) for position in positions]
        simulation = SimulationGame(output.left, output.right, pairs, SIMULATION_BOUNDS)
        for position, pair in zip(positions, pairs):
            expected, actual = energy.outcome(position), simulation.outcome(pair)
            assert agree(expected, actual), str(position)
            definite += expected.definite and actual.definite
    assert definite > 0


def test_identical_systems_give_player_1_win():
    """Tests reflexivity through the reverse reduction."""
    spoiler = one_counter([("p", "a", 0, "p")])
    duplicator = vass(1, [("v", "a", (0,), "v")])

    output = simulation_to_energy(spoiler, duplicator)

    assert validate(output.left) == []
    for energy in range(4):
        position = output.position_map.apply(SimPair(OcaConf("p", 0), VassConf("v", (energy,))))
        assert solve_energy_bounded(output.left, position, ENERGY_BOUNDS).outcome is Outcome.WIN1


def test_extra_spoiler_action_drains_player_1():
    """Tests that a Spoiler action Duplicator lacks leaves Player 1 only the draining loop."""
    spoiler = one_counter([("p", "a", 0, "p"), ("p", "b", 0, "p")])
    duplicator = vass(1, [("v", "a", (0,), "v")])

    output = simulation_to_energy(spoiler, duplicator)
    position = output.position_map.apply(SimPair(OcaConf("p", 0), VassConf("v", (2,))))

    assert solve_energy_bounded(output.left, position, ENERGY_BOUNDS).outcome is Outcome.WIN0


def test_random_simulation_games_agree_and_compose():
    """Tests the reverse reduction and its composition with the forward one on random instances."""
    rng = random.Random(202)
    for _ in range(10):
        spoiler = random_oca(rng, max_states=2, max_rules=3, prefix="l")
        duplicator = random_vass(rng, dimension=1, max_states=2, max_rules=3, prefix="r")
        pairs = [
            SimPair(OcaConf(p, m), VassConf(q, (e,)))
            for p in spoiler.states
            for q in duplicator.states
            for m in range(2)
            for e in range(3)
        ]
        game = simulation_to_energy(spoiler, duplicator)
        back = energy_to_simulation(game.left)
        positions = [game.position_map.apply(pair) for pair in pairs]
        round_trip = [back.position_map.apply(position) for position in positions]

        direct = SimulationGame(spoiler, duplicator, pairs, SIMULATION_BOUNDS)
        energy = EnergyArenaSolver(game.left, positions, Bounds(counter_cap=6, energy_cap=6, round_cap=6))
        composed = SimulationGame(back.left, back.right, round_trip, Bounds(counter_cap=6, energy_cap=6, round_cap=40))
        for pair, position, target in zip(pairs, positions, round_trip):
            assert agree(direct.outcome(pair), energy.outcome(position)), str(pair)
            assert agree(direct.outcome(pair), composed.outcome(target)), str(pair)


def test_answer_states_no_spoiler_step_reaches_are_flagged():
    """Tests that only the answer states without an incoming Spoiler step are flagged."""
    spoiler = one_counter([("p", "a", 0, "p")], states=["p", "s"])
    duplicator = vass(1, [("v", "a", (0,), "v")])

    output = simulation_to_energy(spoiler, duplicator)

    assert output.entry_states == (turn_state("p", "v"), turn_state("s", "v"))
    assert output.flagged == (answer_state("s", "v", "a"),)


def test_energy_to_simulation_flags_only_unreachable_states():
    """Tests that every flagged state is unreachable from the source states on its side."""
    game = counter_game(["p"], ["q"], [("p", 0, "q", 0), ("q", 0, "p", -1)], zero=[("q", 1, "q", 0)])

    output = energy_to_simulation(game)

    assert set(output.entry_states) == {"p", "q"}
    assert set(output.flagged) == set(unreachable_states(output.left, game.states)) | set(
        unreachable_states(output.right, game.states)
    )
    assert not {"p", "q"} & set(output.flagged)
