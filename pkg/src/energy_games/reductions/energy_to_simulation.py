"""Compiles an energy game into a simulation game between a pushdown (or one-counter) automaton and a VASS.

Every Player 0 move becomes one round with a label unique to the move. Every Player 1 move
takes two rounds: Spoiler announces what Player 1 may read, Duplicator records its choice
and pays its energy effect, then Spoiler has to implement that choice or let Duplicator
escape to a universal state.
"""

from __future__ import annotations
import logging

from energy_games.models import (
    InvalidModelError,
    Oca,
    OcaTransition,
    OcegTransition,
    OneCounterEnergyGame,
    Pda,
    PdaTransition,
    PushdownEnergyGame,
    Vass,
    VassTransition,
    validate,
)
from energy_games.reductions.output import Clause, PositionMap, ReductionOutput

logger = logging.getLogger(__name__)

UNIVERSAL = "universal"
DEAD = "dead"
SPARE = "spare"
TOP_ZERO = "top(zero)"
TOP_POSITIVE = "top(pos)"


def hat(state: str) -> str:
    return f"hat({state})"


def choice(transition_id: str) -> str:
    return f"choice({transition_id})"


def do(transition_id: str) -> str:
    return f"do({transition_id})"


def top(symbol: str) -> str:
    return f"top({symbol})"


class _Transitions:
    """Collects generated transitions with sequential ids and their provenance."""

    def __init__(self, prefix: str):
        self._prefix = prefix
        self.items: list = []
        self.provenance: dict[str, Clause] = {}

    def next_id(self, clause: Clause) -> str:
        identifier = f"{self._prefix}{len(self.items)}"
        self.provenance[identifier] = clause
        return identifier

    def add(self, transition) -> None:
        self.items.append(transition)


def energy_to_simulation(game: PushdownEnergyGame | OneCounterEnergyGame) -> ReductionOutput:
    """
    Builds Spoiler's automaton and Duplicator's VASS for an energy game.

    Player 1 wins from ``(q, stack, E)`` iff ``(q, stack)`` is simulated by ``(q, E)``.
    A one-counter game yields a one-counter automaton.

    Args:
        game: A deadlock-free pushdown or one-counter energy game.

    Returns:
        ReductionOutput: Spoiler automaton on the left, VASS on the right, provenance per transition.

    Raises:
        InvalidModelError: If the game has violations.
    """
    violations = validate(game)
    if violations:
        raise InvalidModelError(violations)
    if isinstance(game, OneCounterEnergyGame):
        output = _one_counter(game)
    else:
        output = _pushdown(game)
    logger.info(
        "energy game with %d states compiled to %d + %d states",
        len(game.states),
        len(output.left.states),
        len(output.right.states),
    )
    return output


def _universal(vass_rules: _Transitions, actions: list[str], dimension: int) -> None:
    for action in actions:
        vass_rules.add(
            VassTransition(
                id=vass_rules.next_id(Clause.UNIVERSAL),
                source=UNIVERSAL,
                action=action,
                target=UNIVERSAL,
                effect=(0,) * dimension,
            )
        )


def _pushdown(game: PushdownEnergyGame) -> ReductionOutput:
    zero = (0,) * game.dimension
    actions = [do(t.id) for t in game.transitions] + [top(x) for x in game.stack_alphabet] + [SPARE]
    automaton, vass_rules = _Transitions("A"), _Transitions("V")
    hats = [hat(q) for q in game.states_p1]
    choices = [choice(t.id) for t in game.transitions if t.source in game.states_p1]

    for t in game.transitions:
        if t.source in game.states_p0:
            automaton.add(
                PdaTransition(
                    id=automaton.next_id(Clause.P0_MOVE), source=t.source, top=t.top, action=do(t.id), target=t.target, push=t.push
                )
            )
            vass_rules.add(
                VassTransition(id=vass_rules.next_id(Clause.P0_MOVE), source=t.source, action=do(t.id), target=t.target, effect=t.effect)
            )
    for q in game.states_p1:
        for x in game.stack_alphabet:
            automaton.add(
                PdaTransition(id=automaton.next_id(Clause.ANNOUNCE_TOP), source=q, top=x, action=top(x), target=hat(q), push=(x,))
            )
    for t in game.transitions:
        if t.source not in game.states_p1:
            continue
        vass_rules.add(
            VassTransition(id=vass_rules.next_id(Clause.CHOOSE), source=t.source, action=top(t.top), target=choice(t.id), effect=t.effect)
        )
        automaton.add(
            PdaTransition(
                id=automaton.next_id(Clause.IMPLEMENT), source=hat(t.source), top=t.top, action=do(t.id), target=t.target, push=t.push
            )
        )
        vass_rules.add(
            VassTransition(id=vass_rules.next_id(Clause.CONFIRM), source=choice(t.id), action=do(t.id), target=t.target, effect=zero)
        )
        for action in actions:
            if action != do(t.id):
                vass_rules.add(
                    VassTransition(id=vass_rules.next_id(Clause.ESCAPE), source=choice(t.id), action=action, target=UNIVERSAL, effect=zero)
                )
    _universal(vass_rules, actions, game.dimension)

    left = Pda(
        states=game.states + tuple(hats),
        stack_alphabet=game.stack_alphabet,
        actions=tuple(actions),
        transitions=tuple(automaton.items),
        max_push=game.max_push,
    )
    right = Vass(
        dimension=game.dimension,
        states=game.states + tuple(choices) + (UNIVERSAL,),
        actions=tuple(actions),
        transitions=tuple(vass_rules.items),
    )
    return ReductionOutput(
        left=left,
        right=right,
        position_map=PositionMap(kind="energy-to-simulation"),
        provenance=automaton.provenance | vass_rules.provenance,
        entry_states=game.states,
    )


def _one_counter(game: OneCounterEnergyGame) -> ReductionOutput:
    zero = (0,) * game.dimension
    every_rule = (*game.delta_zero, *game.delta_plus)
    actions = [do(t.id) for t in every_rule] + [TOP_ZERO, TOP_POSITIVE, SPARE]
    plus, zero_rules, vass_rules = _Transitions("A"), _Transitions("Z"), _Transitions("V")
    zero_ids = {t.id for t in game.delta_zero}

    def spoiler(rules: _Transitions, clause: Clause, source: str, action: str, delta: int, target: str) -> None:
        rules.add(OcaTransition(id=rules.next_id(clause), source=source, action=action, delta=delta, target=target))

    def duplicator(clause: Clause, source: str, action: str, target: str, effect: tuple[int, ...]) -> None:
        vass_rules.add(VassTransition(id=vass_rules.next_id(clause), source=source, action=action, target=target, effect=effect))

    def implement(source: str, t: OcegTransition) -> None:
        rules = zero_rules if t.id in zero_ids else plus
        spoiler(rules, Clause.IMPLEMENT if source != t.source else Clause.P0_MOVE, source, do(t.id), t.counter_delta, t.target)

    for t in every_rule:
        if t.source in game.states_p0:
            implement(t.source, t)
            duplicator(Clause.P0_MOVE, t.source, do(t.id), t.target, t.effect)

    for q in game.states_p1:
        spoiler(zero_rules, Clause.ANNOUNCE_TOP, q, TOP_ZERO, 0, hat(q))
        spoiler(plus, Clause.ANNOUNCE_TOP, q, TOP_POSITIVE, 0, hat(q))
        spoiler(plus, Clause.REFUTE, hat(q), SPARE, -1, DEAD)
        for t in game.zero_from(q) + tuple(r for r in game.plus_from(q) if r.counter_delta >= 0):
            duplicator(Clause.CHOOSE, q, TOP_ZERO, choice(t.id), t.effect)
        for t in game.zero_from(q) + game.plus_from(q):
            duplicator(Clause.CHOOSE, q, TOP_POSITIVE, choice(t.id), t.effect)

    choices: list[str] = []
    for t in every_rule:
        if t.source not in game.states_p1:
            continue
        choices.append(choice(t.id))
        implement(hat(t.source), t)
        duplicator(Clause.CONFIRM, choice(t.id), do(t.id), t.target, zero)
        for action in actions:
            if action == do(t.id) or (action == SPARE and t.id in zero_ids):
                continue
            duplicator(Clause.ESCAPE, choice(t.id), action, UNIVERSAL, zero)
    _universal(vass_rules, actions, game.dimension)

    left = Oca(
        states=game.states + tuple(hat(q) for q in game.states_p1) + (DEAD,),
        actions=tuple(actions),
        delta_plus=tuple(plus.items),
        delta_zero=tuple(zero_rules.items),
    )
    right = Vass(
        dimension=game.dimension,
        states=game.states + tuple(choices) + (UNIVERSAL,),
        actions=tuple(actions),
        transitions=tuple(vass_rules.items),
    )
    return ReductionOutput(
        left=left,
        right=right,
        position_map=PositionMap(kind="energy-to-simulation"),
        provenance=plus.provenance | zero_rules.provenance | vass_rules.provenance,
        entry_states=game.states,
    )
