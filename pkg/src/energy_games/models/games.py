from __future__ import annotations
from enum import StrEnum
from typing import Literal

from pydantic import Field, PrivateAttr

from energy_games.models.machines import FrozenModel, Metadata


class Player(StrEnum):
    """Player 0 wants the energy to drop below zero (or is Spoiler), Player 1 opposes."""

    P0 = "P0"
    P1 = "P1"

    @property
    def opponent(self) -> Player:
        return Player.P1 if self is Player.P0 else Player.P0


class PegTransition(FrozenModel):
    id: str
    source: str
    top: str
    target: str
    push: tuple[str, ...]
    effect: tuple[Literal[-1, 0, 1], ...]


class OcegTransition(FrozenModel):
    id: str
    source: str
    counter_delta: Literal[-1, 0, 1]
    target: str
    effect: tuple[Literal[-1, 0, 1], ...]


class PushdownEnergyGame(FrozenModel):
    """Two-player game on the configurations of a pushdown automaton with an energy vector."""

    kind: Literal["peg"] = "peg"
    states_p0: tuple[str, ...]
    states_p1: tuple[str, ...]
    stack_alphabet: tuple[str, ...]
    dimension: int = Field(ge=1)
    transitions: tuple[PegTransition, ...]
    max_push: int = Field(default=2, ge=0)
    metadata: Metadata | None = None

    _by_head: dict[tuple[str, str], tuple[PegTransition, ...]] = PrivateAttr(default_factory=dict)
    _owners: dict[str, Player] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        index: dict[tuple[str, str], list[PegTransition]] = {}
        for transition in self.transitions:
            index.setdefault((transition.source, transition.top), []).append(transition)
        self._by_head = {head: tuple(rules) for head, rules in index.items()}
        self._owners = _owners(self.states_p0, self.states_p1)

    @property
    def states(self) -> tuple[str, ...]:
        return self.states_p0 + self.states_p1

    def owner(self, state: str) -> Player:
        return self._owners[state]

    def rules_from(self, state: str, top: str) -> tuple[PegTransition, ...]:
        return self._by_head.get((state, top), ())


class OneCounterEnergyGame(FrozenModel):
    """Two-player game on a one-counter automaton whose transitions also carry energy effects."""

    kind: Literal["oceg"] = "oceg"
    states_p0: tuple[str, ...]
    states_p1: tuple[str, ...]
    dimension: int = Field(ge=1)
    delta_plus: tuple[OcegTransition, ...]
    delta_zero: tuple[OcegTransition, ...] = ()
    metadata: Metadata | None = None

    _plus: dict[str, tuple[OcegTransition, ...]] = PrivateAttr(default_factory=dict)
    _zero: dict[str, tuple[OcegTransition, ...]] = PrivateAttr(default_factory=dict)
    _owners: dict[str, Player] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        for attribute, rules in (("_plus", self.delta_plus), ("_zero", self.delta_zero)):
            grouped: dict[str, list[OcegTransition]] = {}
            for transition in rules:
                grouped.setdefault(transition.source, []).append(transition)
            setattr(self, attribute, {state: tuple(group) for state, group in grouped.items()})
        self._owners = _owners(self.states_p0, self.states_p1)

    @property
    def states(self) -> tuple[str, ...]:
        return self.states_p0 + self.states_p1

    def owner(self, state: str) -> Player:
        return self._owners[state]

    def plus_from(self, state: str) -> tuple[OcegTransition, ...]:
        return self._plus.get(state, ())

    def zero_from(self, state: str) -> tuple[OcegTransition, ...]:
        return self._zero.get(state, ())


def _owners(states_p0: tuple[str, ...], states_p1: tuple[str, ...]) -> dict[str, Player]:
    owners = {state: Player.P1 for state in states_p1}
    owners.update({state: Player.P0 for state in states_p0})
    return owners
