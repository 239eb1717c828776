import random
from itertools import product

import pytest
from energy_games.cli.schema import load_fixture
from energy_games.gadgets import (
    BOTTOM,
    AuditKind,
    ExpectedRelation,
    Role,
    UnknownRecordError,
    audit_state,
    mcm_to_pushdown_energy,
    records_of,
)
from energy_games.models import (
    IncRule,
    InvalidModelError,
    Mcm,
    PegConf,
    Player,
    ZeroTestRule,
    game_moves,
    validate,
)
from energy_games.solvers import Bounds, EnergyArenaSolver, Outcome, solve_energy_bounded

BOUNDS = Bounds(counter_cap=12, energy_cap=12, round_cap=40)

TWO_COUNTERS = Mcm(
    states=("q0", "q1", "q2", "q3", "h"),
    init_state="q0",
    halt_state="h",
    rules=(
        IncRule(state="q0", counter=1, target="q1"),
        IncRule(state="q1", counter=2, target="q2"),
        ZeroTestRule(state="q2", counter=1, if_zero="q0", if_positive="q3"),
        ZeroTestRule(state="q3", counter=2, if_zero="h", if_positive="q0"),
    ),
)


def test_records_follow_rule_order():
    """Tests that a test rule yields its positive record before its zero record."""
    records = records_of(TWO_COUNTERS)

    assert [record.symbol for record in records] == [
        "inc(q0)",
        "inc(q1)",
        "pos(q2)",
        "zero(q2)",
        "pos(q3)",
        "zero(q3)",
    ]
    assert [record.audit for record in records] == [
        None,
        None,
        AuditKind.CLAIMED_POSITIVE,
        AuditKind.CLAIMED_ZERO,
        AuditKind.CLAIMED_POSITIVE,
        AuditKind.CLAIMED_ZERO,
    ]


def test_output_is_a_valid_game():
    """Tests that the produced game has no violations and every rule has a role."""
    output = mcm_to_pushdown_energy(load_fixture("COLLATZ6"))

    assert output.expected_relation is ExpectedRelation.HALTS_IFF_P0_WINS
    assert validate(output.game) == []
    assert set(output.provenance) == {t.id for t in output.game.transitions}
    assert output.initial_position(3) == PegConf("q0", (BOTTOM,), (3,))


def test_only_test_records_can_be_audited():
    """Tests that Player 0 may enter an audit right after a test record, and only then."""
    output = mcm_to_pushdown_energy(TWO_COUNTERS)
    entries = [t for t in output.game.transitions if output.provenance[t.id] is Role.ENTER_AUDIT]

    assert sorted(t.top for t in entries) == ["pos(q2)", "pos(q3)", "zero(q2)", "zero(q3)"]
    assert {t.target for t in entries} == {
        audit_state(AuditKind.CLAIMED_POSITIVE, 1),
        audit_state(AuditKind.CLAIMED_POSITIVE, 2),
        audit_state(AuditKind.CLAIMED_ZERO, 1),
        audit_state(AuditKind.CLAIMED_ZERO, 2),
    }


def test_unknown_record_raises():
    """Tests that looking up a symbol that is not a record raises."""
    output = mcm_to_pushdown_energy(TWO_COUNTERS)

    assert output.record("pos(q3)").counter == 2
    with pytest.raises(UnknownRecordError):
        output.record(BOTTOM)


def test_invalid_machine_is_rejected():
    """Tests that a machine with a missing rule is not compiled."""
    broken = Mcm(states=("q0", "h"), init_state="q0", halt_state="h", rules=())

    with pytest.raises(InvalidModelError):
        mcm_to_pushdown_energy(broken)


@pytest.mark.parametrize("credit", range(5))
def test_halting_machine_is_won_by_player_0(credit: int):
    """Tests that Player 0 wins from the initial position of a halting machine with any credit."""
    output = mcm_to_pushdown_energy(load_fixture("HALT3"))

    verdict = solve_energy_bounded(output.game, output.initial_position(credit), BOUNDS)

    assert verdict.outcome is Outcome.WIN0


def test_longer_halting_machine_is_won_by_player_0():
    """Tests the six-state machine that halts after thirteen steps."""
    output = mcm_to_pushdown_energy(load_fixture("COLLATZ6"))
    bounds = Bounds(counter_cap=16, energy_cap=16, round_cap=40)

    verdict = solve_energy_bounded(output.game, output.initial_position(0), bounds)

    assert verdict.outcome is Outcome.WIN0


def test_machine_halting_at_once():
    """Tests a machine whose initial state halts: Player 1 is drained right away."""
    output = mcm_to_pushdown_energy(Mcm(states=("h",), init_state="h", halt_state="h", rules=()))

    verdict = solve_energy_bounded(output.game, output.initial_position(0), BOUNDS)

    assert verdict.outcome is Outcome.WIN0
    assert verdict.rounds <= 2


def test_running_machine_is_not_won_by_player_0():
    """Tests that a machine running forever only grows the stack, so Player 0 never wins."""
    output = mcm_to_pushdown_energy(load_fixture("LOOP"))
    positions = [output.initial_position(credit) for credit in range(4)]

    solver = EnergyArenaSolver(output.game, positions, BOUNDS)

    assert all(solver.outcome(position) is not Outcome.WIN0 for position in positions)


def test_energy_tracks_the_stack_when_player_0_accepts():
    """Tests that an unchallenged run earns one unit per record."""
    m = load_fixture("COLLATZ6")
    output = mcm_to_pushdown_energy(m)
    rng = random.Random(7)

    for _ in range(200):
        credit = rng.randint(0, 3)
        position = output.initial_position(credit)
        for _ in range(40):
            player, successors = game_moves(output.game, position)
            if player is Player.P1 and position.state != m.halt_state:
                assert position.energy == (credit + len(position.stack) - 1,)
            if player is Player.P1:
                position = rng.choice(successors)
            else:
                position = next(s for s in successors if s.state in m.states)
            if position.state == m.halt_state:
                break


def _counters(prefix) -> tuple[int, int] | None:
    counters = [0, 0]
    for record in prefix:
        if record.change == "inc":
            counters[record.counter - 1] += 1
        elif record.change == "dec":
            counters[record.counter - 1] -= 1
            if counters[record.counter - 1] < 0:
                return None
    return counters[0], counters[1]


def _audit(output, audit: AuditKind, counter: int, stack: tuple[str, ...], credit: int) -> int:
    position = PegConf(audit_state(audit, counter), stack, (credit + len(stack) - 1,))
    while position.state != output.initial_state:
        _, successors = game_moves(output.game, position)
        assert len(successors) == 1
        position = successors[0]
    assert position.stack == (BOTTOM,)
    return position.energy[0]


def test_audit_ends_below_the_credit_iff_the_step_cheated():
    """Tests every short history: the audit of the last test record loses energy exactly for a false claim."""
    output = mcm_to_pushdown_energy(TWO_COUNTERS)
    tests = [record for record in output.records if record.audit is not None]
    credit = 10
    checked = 0

    for length in range(5):
        for prefix in product(output.records, repeat=length):
            counters = _counters(prefix)
            if counters is None:
                continue
            for last in tests:
                value = counters[last.counter - 1]
                cheat = value == 0 if last.change == "dec" else value > 0
                stack = (last.symbol, *(record.symbol for record in reversed(prefix)), BOTTOM)

                final = _audit(output, last.audit, last.counter, stack, credit)

                assert (final < credit) == cheat
                if last.audit is AuditKind.CLAIMED_ZERO:
                    assert final == credit - value
                checked += 1

    assert checked > 1000


def _run_prefixes(records, state: str, halt_state: str, length: int):
    """Every sequence of at most ``length`` records that follows the control graph from ``state``."""
    yield ()
    if length == 0 or state == halt_state:
        return
    for record in records:
        if record.source == state:
            for rest in _run_prefixes(records, record.target, halt_state, length - 1):
                yield (record, *rest)


@pytest.mark.parametrize("name", ["TWO_COUNTERS", "HALT3", "COLLATZ6"])
def test_audit_classifies_every_run_prefix(name: str):
    """Tests all run prefixes of length up to 8, with either branch at each test, against both audits."""
    m = TWO_COUNTERS if name == "TWO_COUNTERS" else load_fixture(name)
    output = mcm_to_pushdown_energy(m)
    credit = 12
    seen: set[bool] = set()

    for prefix in _run_prefixes(output.records, m.init_state, m.halt_state, 8):
        counters = _counters(prefix)
        if counters is None:
            continue
        state = prefix[-1].target if prefix else m.init_state
        for last in (record for record in output.records if record.audit is not None and record.source == state):
            value = counters[last.counter - 1]
            cheat = value == 0 if last.change == "dec" else value > 0
            stack = (last.symbol, *(record.symbol for record in reversed(prefix)), BOTTOM)

            final = _audit(output, last.audit, last.counter, stack, credit)

            assert (final < credit) == cheat, f"{[record.symbol for record in prefix]} then {last.symbol}"
            if last.audit is AuditKind.CLAIMED_ZERO:
                assert final == credit - value
            seen.add(cheat)

    assert seen == {True, False}
