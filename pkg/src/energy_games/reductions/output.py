from __future__ import annotations
from enum import StrEnum
from typing import Any, Iterable, Literal

import networkx as nx
from pydantic import BaseModel, ConfigDict, model_validator

from energy_games.models import (
    Lts,
    OcaConf,
    OcegConf,
    PdaConf,
    PegConf,
    VassConf,
)
from energy_games.reductions.reductions_exceptions import OutsideMapDomainError
from energy_games.solvers import SimPair


class Clause(StrEnum):
    """Proof clause a generated transition instantiates."""

    # energy game -> simulation
    P0_MOVE = "player-0 move, uniquely labelled on both sides"
    ANNOUNCE_TOP = "player-1 state, Spoiler announces the top"
    CHOOSE = "player-1 choice recorded on the Duplicator side"
    IMPLEMENT = "Spoiler implements a transition from the hatted state"
    CONFIRM = "Duplicator confirms the recorded choice"
    ESCAPE = "wrong implementation, Duplicator escapes to the universal state"
    REFUTE = "spare action refutes a zero-test choice at a positive counter"
    UNIVERSAL = "universal state loop"
    # simulation -> energy game
    SPOILER_STEP = "player-0 emulates a Spoiler step"
    DUPLICATOR_STEP = "player-1 emulates a Duplicator response"
    P0_LOOP = "player-0 neutral loop"
    P1_LOOP = "player-1 draining loop"
    # one-counter automaton -> one-counter net
    SPOILER_ANNOUNCE = "Spoiler plays a source transition"
    SPOILER_MIMIC = "Spoiler replays a target transition"
    DUPLICATOR_ANSWER = "Duplicator answers with a target transition"
    DUPLICATOR_COMMIT = "Duplicator commits to its answer"
    DUPLICATOR_ESCAPE = "Spoiler replays a different target transition"
    DOLLAR_DRAIN = "Duplicator dollar loop"
    BLACK_LOOP = "Spoiler dollar loop on a black line"
    CHAIN = "Spoiler dollar chain"


class PositionMap(BaseModel):
    """Maps source positions to target positions.

    ``kind`` selects the construction the map belongs to. The energy-to-simulation map sends a
    game position to a pair, the simulation-to-energy map sends a pair to a game position, and the
    residue map sends a pair of one-counter configurations at level ``>= offset`` to a pair of the
    constructed nets.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["energy-to-simulation", "simulation-to-energy", "residue"]
    offset: int = 0
    period: int = 1

    def apply(self, position: Any) -> Any:
        match self.kind:
            case "energy-to-simulation":
                return self._energy_to_simulation(position)
            case "simulation-to-energy":
                return self._simulation_to_energy(position)
        return self._residue(position)

    @staticmethod
    def _energy_to_simulation(position: PegConf | OcegConf) -> SimPair:
        if isinstance(position, PegConf):
            return SimPair(PdaConf(position.state, position.stack), VassConf(position.state, position.energy))
        if isinstance(position, OcegConf):
            return SimPair(OcaConf(position.state, position.counter), VassConf(position.state, position.energy))
        raise OutsideMapDomainError(position, "not an energy game position")

    @staticmethod
    def _simulation_to_energy(pair: SimPair) -> PegConf | OcegConf:
        if not isinstance(pair.right, VassConf):
            raise OutsideMapDomainError(pair, "Duplicator side must be a VASS configuration")
        state = turn_state(pair.left.state, pair.right.state)
        if isinstance(pair.left, PdaConf):
            return PegConf(state, pair.left.stack, pair.right.vector)
        if isinstance(pair.left, OcaConf):
            return OcegConf(state, pair.left.counter, pair.right.vector)
        raise OutsideMapDomainError(pair, "Spoiler side must be a pushdown or one-counter configuration")

    def _residue(self, pair: SimPair) -> SimPair:
        left, right = pair.left, pair.right
        if not isinstance(left, OcaConf) or not isinstance(right, OcaConf):
            raise OutsideMapDomainError(pair, "both sides must be one-counter configurations")
        if left.counter < self.offset:
            raise OutsideMapDomainError(pair, f"Spoiler counter below level {self.offset}")
        counter = left.counter - self.offset
        state = pair_state(left.state, right.state, counter % self.period)
        return SimPair(OcaConf(state, counter), OcaConf(state, right.counter))


def turn_state(left: str, right: str) -> str:
    return f"turn({left},{right})"


def answer_state(left: str, right: str, action: str) -> str:
    return f"answer({left},{right},{action})"


def pair_state(left: str, right: str, residue: int) -> str:
    return f"pair({left},{right},{residue})"


def _rules(machine: Any) -> tuple[Any, ...]:
    return (*getattr(machine, "transitions", ()), *getattr(machine, "delta_plus", ()), *getattr(machine, "delta_zero", ()))


def unreachable_states(machine: Any, entry_states: Iterable[str]) -> tuple[str, ...]:
    """States of a machine that no path of its control graph reaches from the given entry states."""
    graph = nx.DiGraph()
    graph.add_nodes_from(machine.states)
    graph.add_edges_from((rule.source, rule.target) for rule in _rules(machine))
    reached: set[str] = set()
    for state in entry_states:
        if state in graph and state not in reached:
            reached |= {state} | nx.descendants(graph, state)
    return tuple(state for state in machine.states if state not in reached)


class ReductionOutput(BaseModel):
    """Result of a reduction: the two target machines, the position map and the provenance notes.

    ``entry_states`` are the states the position map can produce. ``flagged`` is filled on
    construction with the generated states that no mapped position reaches, per machine.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    left: Any
    right: Any | None = None
    position_map: PositionMap
    provenance: dict[str, Clause]
    entry_states: tuple[str, ...]
    flagged: tuple[str, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def flag_unreachable_states(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        machines = [machine for machine in (data.get("left"), data.get("right")) if machine is not None]
        entry_states = tuple(data.get("entry_states", ()))
        flagged = dict.fromkeys(state for machine in machines for state in unreachable_states(machine, entry_states))
        return data | {"flagged": tuple(flagged)}

    def machines(self) -> tuple[Lts, ...]:
        return (self.left,) if self.right is None else (self.left, self.right)
