import pytest
from energy_games.cli.schema import load_fixture
from energy_games.gadgets import ExpectedRelation, MissingMachineError, Role, mcm_to_ocn_vs_vass
from energy_games.gadgets.ocn_vass import UNIVERSAL, check_state
from energy_games.models import IncRule, InvalidModelError, Mcm, OcaConf, VassConf, steps, validate
from energy_games.solvers import Bounds, Outcome, SimPair, SimulationGame, solve_simulation_bounded

BOUNDS = Bounds(counter_cap=10, energy_cap=1, round_cap=40)


def test_output_machines_are_valid():
    """Tests that both machines have no violations and every rule has a role."""
    output = mcm_to_ocn_vs_vass(load_fixture("COLLATZ6"))

    assert output.expected_relation is ExpectedRelation.HALTS_IFF_NOT_SIMULATES
    assert output.spoiler.is_net
    assert output.duplicator.dimension == 2
    assert validate(output.spoiler) == []
    assert validate(output.duplicator) == []
    ids = {t.id for t in output.spoiler.delta_plus} | {t.id for t in output.duplicator.transitions}
    assert set(output.provenance) == ids
    assert output.initial_pair() == SimPair(OcaConf("q0", 0), VassConf("q0", (0, 0)))


def test_simulation_output_has_no_energy_game():
    """Tests that asking the simulation construction for a game position raises."""
    output = mcm_to_ocn_vs_vass(load_fixture("HALT3"))

    assert output.game is None
    with pytest.raises(MissingMachineError):
        output.initial_position()


def test_universal_state_answers_everything():
    """Tests that Duplicator's universal state has a loop for every action."""
    output = mcm_to_ocn_vs_vass(load_fixture("HALT3"))
    loops = [t for t in output.duplicator.transitions if output.provenance[t.id] is Role.UNIVERSAL]

    assert {t.action for t in loops} == set(output.duplicator.actions)
    assert all(t.source == t.target == UNIVERSAL for t in loops)


@pytest.mark.parametrize("name,round_cap", [("HALT3", 40), ("COLLATZ6", 60)])
def test_halting_machine_is_not_simulated(name: str, round_cap: int):
    """Tests that Spoiler wins the initial pair of a halting machine."""
    output = mcm_to_ocn_vs_vass(load_fixture(name))
    bounds = Bounds(counter_cap=10, energy_cap=1, round_cap=round_cap)

    verdict = solve_simulation_bounded(output.spoiler, output.duplicator, output.initial_pair(), bounds)

    assert verdict.outcome is Outcome.WIN0


def test_running_machine_is_not_refuted():
    """Tests that Spoiler cannot win the initial pair of a machine that runs forever."""
    output = mcm_to_ocn_vs_vass(load_fixture("LOOP"))

    verdict = solve_simulation_bounded(output.spoiler, output.duplicator, output.initial_pair(), BOUNDS)

    assert verdict.outcome is not Outcome.WIN0


def test_challenge_races_the_sum_against_the_other_counter():
    """Tests that a challenged zero claim is lost by Duplicator exactly when the claimed counter is positive."""
    output = mcm_to_ocn_vs_vass(load_fixture("HALT3"))
    check = check_state(1)
    honest = SimPair(OcaConf(check, 3), VassConf(check, (0, 3)))
    false_claim = SimPair(OcaConf(check, 2), VassConf(check, (1, 1)))
    empty = SimPair(OcaConf(check, 0), VassConf(check, (0, 0)))

    game = SimulationGame(output.spoiler, output.duplicator, [honest, false_claim, empty], BOUNDS)

    assert game.outcome(honest) is Outcome.WIN1
    assert game.outcome(false_claim) is Outcome.WIN0
    assert game.outcome(empty) is Outcome.WIN1


def test_invalid_machine_is_rejected():
    """Tests that a machine whose rule targets an undeclared state is not compiled."""
    broken = Mcm(
        states=("q0", "h"), init_state="q0", halt_state="h", rules=(IncRule(state="q0", counter=1, target="x"),)
    )

    with pytest.raises(InvalidModelError):
        mcm_to_ocn_vs_vass(broken)


def _unchallenged_plays(output, pair: SimPair, length: int):
    """Every pair reached in at most ``length`` rounds without a challenge or a spurious answer."""
    yield pair
    if length == 0:
        return
    for action, target in steps(output.spoiler, pair.left):
        if action not in ("a", "z", "nz"):
            continue
        for label, answer in steps(output.duplicator, pair.right):
            if label == action and answer.state != UNIVERSAL:
                yield from _unchallenged_plays(output, SimPair(target, answer), length - 1)


@pytest.mark.parametrize("name", ["HALT3", "COLLATZ6", "LOOP"])
def test_net_counter_is_the_sum_of_the_machine_counters(name: str):
    """Tests every unchallenged play of up to 8 rounds: in a shared machine state the net holds the sum of the counters."""
    m = load_fixture(name)
    output = mcm_to_ocn_vs_vass(m)
    visited = 0

    for pair in _unchallenged_plays(output, output.initial_pair(), 8):
        left, right = pair.left, pair.right
        if left.state == right.state and left.state in m.states:
            assert left.counter == sum(right.vector), str(pair)
            visited += 1

    assert visited >= 5
