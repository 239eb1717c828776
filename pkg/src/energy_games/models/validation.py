from __future__ import annotations
from collections import Counter
from typing import Iterable

from pydantic import BaseModel, ConfigDict

from energy_games.models.games import (
    OcegTransition,
    OneCounterEnergyGame,
    PegTransition,
    PushdownEnergyGame,
)
from energy_games.models.machines import FrozenModel, Mcm, Oca, Pda, Vass


class Violation(BaseModel):
    """One broken invariant of a model, naming the offending element."""

    model_config = ConfigDict(frozen=True)

    code: str
    element: str
    detail: str = ""

    def __str__(self) -> str:
        suffix = f" ({self.detail})" if self.detail else ""
        return f"{self.code}({self.element}){suffix}"


def validate(model: FrozenModel) -> list[Violation]:
    """Check every invariant of a machine description.

    Args:
        model: Any machine or game description.

    Returns:
        list[Violation]: Empty iff the model is well-formed.
    """
    match model:
        case Pda():
            return _validate_pda(model)
        case Oca():
            return _validate_oca(model)
        case Vass():
            return _validate_vass(model)
        case PushdownEnergyGame():
            return _validate_peg(model)
        case OneCounterEnergyGame():
            return _validate_oceg(model)
        case Mcm():
            return _validate_mcm(model)
    return [Violation(code="UnknownModel", element=type(model).__name__)]


def _duplicates(kind: str, ids: Iterable[str]) -> list[Violation]:
    return [
        Violation(code="DuplicateId", element=identifier, detail=kind)
        for identifier, count in Counter(ids).items()
        if count > 1
    ]


def _undeclared(kind: str, owner_id: str, value: str, declared: set[str]) -> list[Violation]:
    if value in declared:
        return []
    return [Violation(code="UndeclaredId", element=owner_id, detail=f"{kind} {value}")]


def _validate_pda(pda: Pda) -> list[Violation]:
    states, symbols, actions = set(pda.states), set(pda.stack_alphabet), set(pda.actions)
    violations = _duplicates("state", pda.states) + _duplicates("symbol", pda.stack_alphabet)
    violations += _duplicates("transition", (t.id for t in pda.transitions))
    for t in pda.transitions:
        violations += _undeclared("state", t.id, t.source, states)
        violations += _undeclared("state", t.id, t.target, states)
        violations += _undeclared("symbol", t.id, t.top, symbols)
        violations += _undeclared("action", t.id, t.action, actions)
        for symbol in t.push:
            violations += _undeclared("symbol", t.id, symbol, symbols)
        if len(t.push) > pda.max_push:
            violations.append(Violation(code="PushTooLong", element=t.id, detail=f"max {pda.max_push}"))
    return violations


def _validate_oca(oca: Oca) -> list[Violation]:
    states, actions = set(oca.states), set(oca.actions)
    violations = _duplicates("state", oca.states)
    violations += _duplicates("transition", (t.id for t in (*oca.delta_plus, *oca.delta_zero)))
    for t in (*oca.delta_plus, *oca.delta_zero):
        violations += _undeclared("state", t.id, t.source, states)
        violations += _undeclared("state", t.id, t.target, states)
        violations += _undeclared("action", t.id, t.action, actions)
    for t in oca.delta_zero:
        if t.delta < 0:
            violations.append(Violation(code="ZeroRuleDecrement", element=t.id))
    if oca.is_net and oca.delta_zero:
        violations.append(
            Violation(code="NetHasZeroTest", element=oca.delta_zero[0].id, detail=f"{len(oca.delta_zero)} zero rules")
        )
    return violations


def _validate_vass(vass: Vass) -> list[Violation]:
    states, actions = set(vass.states), set(vass.actions)
    violations = _duplicates("state", vass.states) + _duplicates("transition", (t.id for t in vass.transitions))
    for t in vass.transitions:
        violations += _undeclared("state", t.id, t.source, states)
        violations += _undeclared("state", t.id, t.target, states)
        violations += _undeclared("action", t.id, t.action, actions)
        if len(t.effect) != vass.dimension:
            violations.append(Violation(code="EffectDimension", element=t.id, detail=f"expected {vass.dimension}"))
        if any(change not in (-1, 0, 1) for change in t.effect):
            violations.append(Violation(code="EffectRange", element=t.id))
    return violations


def _ownership(states_p0: tuple[str, ...], states_p1: tuple[str, ...]) -> list[Violation]:
    overlap = [state for state in states_p0 if state in set(states_p1)]
    if overlap:
        return [Violation(code="OwnershipOverlap", element=state) for state in overlap]
    return _duplicates("state", states_p0 + states_p1)


def _effect_dimension(t: PegTransition | OcegTransition, dimension: int) -> list[Violation]:
    if len(t.effect) == dimension:
        return []
    return [Violation(code="EffectDimension", element=t.id, detail=f"expected {dimension}")]


def _validate_peg(game: PushdownEnergyGame) -> list[Violation]:
    states, symbols = set(game.states), set(game.stack_alphabet)
    violations = _ownership(game.states_p0, game.states_p1)
    violations += _duplicates("symbol", game.stack_alphabet)
    violations += _duplicates("transition", (t.id for t in game.transitions))
    for t in game.transitions:
        violations += _undeclared("state", t.id, t.source, states)
        violations += _undeclared("state", t.id, t.target, states)
        violations += _undeclared("symbol", t.id, t.top, symbols)
        for symbol in t.push:
            violations += _undeclared("symbol", t.id, symbol, symbols)
        if len(t.push) > game.max_push:
            violations.append(Violation(code="PushTooLong", element=t.id, detail=f"max {game.max_push}"))
        violations += _effect_dimension(t, game.dimension)
    for state, symbol in peg_deadlocks(game):
        violations.append(Violation(code="DeadlockAt", element=f"{state},{symbol}"))
    return violations


def _validate_oceg(game: OneCounterEnergyGame) -> list[Violation]:
    states = set(game.states)
    violations = _ownership(game.states_p0, game.states_p1)
    violations += _duplicates("transition", (t.id for t in (*game.delta_plus, *game.delta_zero)))
    for t in (*game.delta_plus, *game.delta_zero):
        violations += _undeclared("state", t.id, t.source, states)
        violations += _undeclared("state", t.id, t.target, states)
        violations += _effect_dimension(t, game.dimension)
    for t in game.delta_zero:
        if t.counter_delta < 0:
            violations.append(Violation(code="ZeroRuleDecrement", element=t.id))
    for state, where in oceg_deadlocks(game):
        violations.append(Violation(code="DeadlockAt", element=f"{state},{where}"))
    return violations


def _validate_mcm(mcm: Mcm) -> list[Violation]:
    states = set(mcm.states)
    violations = _duplicates("state", mcm.states)
    violations += _undeclared("state", "init_state", mcm.init_state, states)
    violations += _undeclared("state", "halt_state", mcm.halt_state, states)
    per_state = Counter(rule.state for rule in mcm.rules)
    for rule in mcm.rules:
        violations += _undeclared("state", f"rule@{rule.state}", rule.state, states)
        targets = (rule.target,) if rule.kind == "inc" else (rule.if_zero, rule.if_positive)
        for target in targets:
            violations += _undeclared("state", f"rule@{rule.state}", target, states)
    for state in mcm.states:
        if state == mcm.halt_state:
            if per_state[state]:
                violations.append(Violation(code="HaltHasRule", element=state))
        elif per_state[state] == 0:
            violations.append(Violation(code="MissingRule", element=state))
        elif per_state[state] > 1:
            violations.append(Violation(code="DuplicateRule", element=state))
    return violations


def peg_deadlocks(game: PushdownEnergyGame) -> list[tuple[str, str]]:
    """(state, symbol) pairs without any outgoing transition."""
    return [
        (state, symbol)
        for state in game.states
        for symbol in game.stack_alphabet
        if not game.rules_from(state, symbol)
    ]


def oceg_deadlocks(game: OneCounterEnergyGame) -> list[tuple[str, str]]:
    """(state, "zero" | "positive") pairs without any available rule."""
    deadlocks: list[tuple[str, str]] = []
    for state in game.states:
        plus = game.plus_from(state)
        if not plus:
            deadlocks.append((state, "positive"))
        if not game.zero_from(state) and not any(rule.counter_delta >= 0 for rule in plus):
            deadlocks.append((state, "zero"))
    return deadlocks


def complete_with_self_loops(
    game: PushdownEnergyGame | OneCounterEnergyGame,
) -> PushdownEnergyGame | OneCounterEnergyGame:
    """Add self-loops at every deadlocked spot of an energy game.

    Player 0 receives neutral loops, Player 1 receives loops that decrease every energy
    coordinate, so a deadlocked Player 1 still loses eventually and a deadlocked Player 0
    still cannot force bankruptcy from there.

    Args:
        game: A pushdown or one-counter energy game.

    Returns:
        The same game with the extra transitions appended, ids prefixed ``loop(``.
    """
    def effect(state: str) -> tuple[int, ...]:
        return (0,) * game.dimension if state in game.states_p0 else (-1,) * game.dimension

    if isinstance(game, PushdownEnergyGame):
        extra = tuple(
            PegTransition(
                id=f"loop({state},{symbol})",
                source=state,
                top=symbol,
                target=state,
                push=(symbol,),
                effect=effect(state),
            )
            for state, symbol in peg_deadlocks(game)
        )
        return PushdownEnergyGame.model_validate(
            game.model_dump() | {"transitions": [t.model_dump() for t in game.transitions + extra]}
        )

    plus_loops: list[OcegTransition] = []
    zero_loops: list[OcegTransition] = []
    for state, where in oceg_deadlocks(game):
        if where == "zero" and any(loop.source == state for loop in plus_loops):
            continue
        loop = OcegTransition(
            id=f"loop({state},{where})", source=state, counter_delta=0, target=state, effect=effect(state)
        )
        (plus_loops if where == "positive" else zero_loops).append(loop)
    return OneCounterEnergyGame.model_validate(
        game.model_dump()
        | {
            "delta_plus": [t.model_dump() for t in (*game.delta_plus, *plus_loops)],
            "delta_zero": [t.model_dump() for t in (*game.delta_zero, *zero_loops)],
        }
    )
