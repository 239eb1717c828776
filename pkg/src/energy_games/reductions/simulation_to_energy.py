"""Compiles a simulation game between a pushdown (or one-counter) automaton and a VASS into an energy game.

One round of the simulation game takes two moves: Player 0 plays Spoiler's step without
changing the energy and records the action, then Player 1 plays a Duplicator response with
the same action and pays its effect. A player without a real move gets a loop that is
neutral for Player 0 and draining for Player 1.
"""

from __future__ import annotations
import logging

from energy_games.models import (
    InvalidModelError,
    Oca,
    OcegTransition,
    OneCounterEnergyGame,
    Pda,
    PegTransition,
    PushdownEnergyGame,
    Vass,
    validate,
)
from energy_games.reductions.output import (
    Clause,
    PositionMap,
    ReductionOutput,
    answer_state,
    turn_state,
)

logger = logging.getLogger(__name__)


def simulation_to_energy(a: Pda | Oca, v: Vass) -> ReductionOutput:
    """
    Builds the energy game in which Player 1 wins from ``(turn(q0,q1), stack, E)`` iff
    ``(q0, stack)`` is simulated by ``(q1, E)``.

    Args:
        a (Pda | Oca): Spoiler's system. A one-counter automaton yields a one-counter game.
        v (Vass): Duplicator's system; its dimension is the energy dimension.

    Returns:
        ReductionOutput: The game on the left, no right machine.

    Raises:
        InvalidModelError: If either system has violations.
    """
    violations = validate(a) + validate(v)
    if violations:
        raise InvalidModelError(violations)
    if isinstance(a, Oca):
        game, provenance = _one_counter(a, v)
    else:
        game, provenance = _pushdown(a, v)
    logger.info("simulation game compiled to an energy game with %d states", len(game.states))
    return ReductionOutput(
        left=game,
        position_map=PositionMap(kind="simulation-to-energy"),
        provenance=provenance,
        entry_states=tuple(turn_state(q0, q1) for q0 in a.states for q1 in v.states),
    )


def _states(a: Pda | Oca, v: Vass) -> tuple[tuple[str, ...], tuple[str, ...]]:
    turns = tuple(turn_state(q0, q1) for q0 in a.states for q1 in v.states)
    answers = tuple(answer_state(q0, q1, action) for q0 in a.states for q1 in v.states for action in a.actions)
    return turns, answers


def _pushdown(a: Pda, v: Vass) -> tuple[PushdownEnergyGame, dict[str, Clause]]:
    zero, drain = (0,) * v.dimension, (-1,) * v.dimension
    turns, answers = _states(a, v)
    transitions: list[PegTransition] = []
    provenance: dict[str, Clause] = {}

    def add(clause: Clause, source: str, top: str, target: str, push: tuple[str, ...], effect: tuple[int, ...]) -> None:
        identifier = f"G{len(transitions)}"
        provenance[identifier] = clause
        transitions.append(PegTransition(id=identifier, source=source, top=top, target=target, push=push, effect=effect))

    for t in a.transitions:
        for q1 in v.states:
            add(Clause.SPOILER_STEP, turn_state(t.source, q1), t.top, answer_state(t.target, q1, t.action), t.push, zero)
    for r in v.transitions:
        for q0 in a.states:
            for x in a.stack_alphabet:
                add(Clause.DUPLICATOR_STEP, answer_state(q0, r.source, r.action), x, turn_state(q0, r.target), (x,), r.effect)
    for x in a.stack_alphabet:
        for state in turns:
            add(Clause.P0_LOOP, state, x, state, (x,), zero)
        for state in answers:
            add(Clause.P1_LOOP, state, x, state, (x,), drain)

    game = PushdownEnergyGame(
        states_p0=turns,
        states_p1=answers,
        stack_alphabet=a.stack_alphabet,
        dimension=v.dimension,
        transitions=tuple(transitions),
        max_push=a.max_push,
    )
    return game, provenance


def _one_counter(a: Oca, v: Vass) -> tuple[OneCounterEnergyGame, dict[str, Clause]]:
    zero, drain = (0,) * v.dimension, (-1,) * v.dimension
    turns, answers = _states(a, v)
    plus: list[OcegTransition] = []
    zero_rules: list[OcegTransition] = []
    provenance: dict[str, Clause] = {}

    def add(rules: list[OcegTransition], clause: Clause, source: str, delta: int, target: str, effect: tuple[int, ...]) -> None:
        identifier = f"G{len(plus) + len(zero_rules)}"
        provenance[identifier] = clause
        rules.append(OcegTransition(id=identifier, source=source, counter_delta=delta, target=target, effect=effect))

    for rules, source_rules in ((plus, a.delta_plus), (zero_rules, a.delta_zero)):
        for t in source_rules:
            for q1 in v.states:
                add(rules, Clause.SPOILER_STEP, turn_state(t.source, q1), t.delta, answer_state(t.target, q1, t.action), zero)
    for r in v.transitions:
        for q0 in a.states:
            add(plus, Clause.DUPLICATOR_STEP, answer_state(q0, r.source, r.action), 0, turn_state(q0, r.target), r.effect)
    for state in turns:
        add(plus, Clause.P0_LOOP, state, 0, state, zero)
    for state in answers:
        add(plus, Clause.P1_LOOP, state, 0, state, drain)

    game = OneCounterEnergyGame(
        states_p0=turns,
        states_p1=answers,
        dimension=v.dimension,
        delta_plus=tuple(plus),
        delta_zero=tuple(zero_rules),
    )
    return game, provenance
