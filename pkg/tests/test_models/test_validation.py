from energy_games.models import (
    OcaTransition,
    PegTransition,
    PushdownEnergyGame,
    complete_with_self_loops,
    validate,
)
from tests.machines import counter_game, one_counter


def test_well_formed_net_has_no_violations():
    """Tests that a one-state net with an a-loop is valid."""
    assert validate(one_counter([("p", "a", 0, "p")])) == []


def test_net_with_zero_test():
    """Tests that a net declaring zero rules is reported."""
    net = one_counter([("p", "a", 0, "p")]).model_copy(
        update={"delta_zero": (OcaTransition(id="z", source="p", action="a", delta=0, target="p"),)}
    )

    assert [violation.code for violation in validate(net)] == ["NetHasZeroTest"]


def test_undeclared_and_duplicate_ids():
    """Tests that unknown states and repeated transition ids are named."""
    net = one_counter([("p", "a", 0, "p"), ("p", "a", 1, "p")], states=["p"])
    broken = net.model_copy(
        update={
            "delta_plus": net.delta_plus
            + (OcaTransition(id="t0", source="p", action="a", delta=0, target="ghost"),)
        }
    )

    codes = {(violation.code, violation.element) for violation in validate(broken)}
    assert ("DuplicateId", "t0") in codes
    assert ("UndeclaredId", "t0") in codes


def test_pushdown_game_deadlock():
    """Tests that a (state, symbol) pair without transitions is reported and repaired."""
    game = PushdownEnergyGame(
        states_p0=("p",),
        states_p1=("q",),
        stack_alphabet=("bot",),
        dimension=1,
        transitions=(PegTransition(id="t", source="p", top="bot", target="q", push=("bot",), effect=(0,)),),
    )

    violations = validate(game)
    assert [(violation.code, violation.element) for violation in violations] == [("DeadlockAt", "q,bot")]

    repaired = complete_with_self_loops(game)
    assert validate(repaired) == []
    loop = repaired.transitions[-1]
    assert (loop.source, loop.target, loop.effect) == ("q", "q", (-1,))


def test_ownership_overlap():
    """Tests that a state owned by both players is reported."""
    game = counter_game(["p"], ["p"], [("p", 0, "p", 0)])

    assert [violation.code for violation in validate(game)] == ["OwnershipOverlap"]


def test_one_counter_game_deadlock_at_zero():
    """Tests that a state that can only decrement is deadlocked at counter zero."""
    game = counter_game(["p"], [], [("p", -1, "p", 0)])

    assert [violation.element for violation in validate(game)] == ["p,zero"]
    repaired = complete_with_self_loops(game)
    assert validate(repaired) == []
    assert repaired.delta_zero[-1].effect == (0,)


def test_push_too_long():
    """Tests the pushed-word cap."""
    game = PushdownEnergyGame(
        states_p0=("p",),
        states_p1=(),
        stack_alphabet=("A",),
        dimension=1,
        transitions=(PegTransition(id="t", source="p", top="A", target="p", push=("A", "A", "A"), effect=(0,)),),
    )

    assert [violation.code for violation in validate(game)] == ["PushTooLong"]
