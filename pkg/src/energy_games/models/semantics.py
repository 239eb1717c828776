"""Step semantics of the machine descriptions and move semantics of the energy games."""

from __future__ import annotations

from energy_games.models.configurations import (
    GamePosition,
    LtsConf,
    OcaConf,
    OcegConf,
    PdaConf,
    PegConf,
    VassConf,
)
from energy_games.models.games import OneCounterEnergyGame, Player, PushdownEnergyGame
from energy_games.models.machines import Oca, Pda, Vass
from energy_games.models.models_exceptions import KindMismatchError

Lts = Pda | Oca | Vass
EnergyGame = PushdownEnergyGame | OneCounterEnergyGame


def steps(machine: Lts, conf: LtsConf) -> list[tuple[str, LtsConf]]:
    """Return the labelled successors of a configuration.

    Zero rules of a one-counter automaton come first (only at counter zero), then the
    remaining rules, each group in declaration order.

    Args:
        machine (Pda | Oca | Vass): The transition system.
        conf (PdaConf | OcaConf | VassConf): A configuration of that system.

    Returns:
        list[tuple[str, LtsConf]]: Pairs of action and successor configuration.

    Raises:
        KindMismatchError: If the configuration does not belong to the machine kind.
    """
    match machine, conf:
        case Pda(), PdaConf():
            return _pda_steps(machine, conf)
        case Oca(), OcaConf():
            return _oca_steps(machine, conf)
        case Vass(), VassConf() if len(conf.vector) == machine.dimension:
            return _vass_steps(machine, conf)
    raise KindMismatchError(getattr(machine, "kind", type(machine).__name__), conf)


def _pda_steps(machine: Pda, conf: PdaConf) -> list[tuple[str, LtsConf]]:
    top, rest = conf.stack[0], conf.stack[1:]
    successors: list[tuple[str, LtsConf]] = []
    for rule in machine.rules_from(conf.state, top):
        stack = rule.push + rest
        if stack:
            successors.append((rule.action, PdaConf(rule.target, stack)))
    return successors


def _oca_steps(machine: Oca, conf: OcaConf) -> list[tuple[str, LtsConf]]:
    successors: list[tuple[str, LtsConf]] = []
    if conf.counter == 0:
        for rule in machine.zero_from(conf.state):
            if rule.delta >= 0:
                successors.append((rule.action, OcaConf(rule.target, rule.delta)))
    for rule in machine.plus_from(conf.state):
        counter = conf.counter + rule.delta
        if counter >= 0:
            successors.append((rule.action, OcaConf(rule.target, counter)))
    return successors


def _vass_steps(machine: Vass, conf: VassConf) -> list[tuple[str, LtsConf]]:
    successors: list[tuple[str, LtsConf]] = []
    for rule in machine.rules_from(conf.state):
        vector = tuple(value + change for value, change in zip(conf.vector, rule.effect))
        if min(vector, default=0) >= 0:
            successors.append((rule.action, VassConf(rule.target, vector)))
    return successors


def owner(game: EnergyGame, pos: GamePosition) -> Player:
    return game.owner(pos.state)


def game_moves(game: EnergyGame, pos: GamePosition) -> tuple[Player, list[GamePosition]]:
    """Return the owner of a position and its successor positions.

    A position with a negative energy coordinate is terminal and has no successors.
    Successors may carry negative energy.

    Raises:
        KindMismatchError: If the position does not belong to the game kind.
    """
    match game, pos:
        case PushdownEnergyGame(), PegConf() if len(pos.energy) == game.dimension:
            player = game.owner(pos.state)
            if min(pos.energy) < 0:
                return player, []
            return player, _peg_moves(game, pos)
        case OneCounterEnergyGame(), OcegConf() if len(pos.energy) == game.dimension:
            player = game.owner(pos.state)
            if min(pos.energy) < 0:
                return player, []
            return player, _oceg_moves(game, pos)
    raise KindMismatchError(getattr(game, "kind", type(game).__name__), pos)


def _add(energy: tuple[int, ...], effect: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(value + change for value, change in zip(energy, effect))


def _peg_moves(game: PushdownEnergyGame, pos: PegConf) -> list[GamePosition]:
    top, rest = pos.stack[0], pos.stack[1:]
    successors: list[GamePosition] = []
    for rule in game.rules_from(pos.state, top):
        stack = rule.push + rest
        if stack:
            successors.append(PegConf(rule.target, stack, _add(pos.energy, rule.effect)))
    return successors


def _oceg_moves(game: OneCounterEnergyGame, pos: OcegConf) -> list[GamePosition]:
    successors: list[GamePosition] = []
    if pos.counter == 0:
        for rule in game.zero_from(pos.state):
            if rule.counter_delta >= 0:
                successors.append(
                    OcegConf(rule.target, rule.counter_delta, _add(pos.energy, rule.effect))
                )
    for rule in game.plus_from(pos.state):
        counter = pos.counter + rule.counter_delta
        if counter >= 0:
            successors.append(OcegConf(rule.target, counter, _add(pos.energy, rule.effect)))
    return successors
