from __future__ import annotations
from enum import StrEnum
from typing import Literal

from pydantic import model_validator

from energy_games.gadgets.gadgets_exceptions import MissingMachineError, UnknownRecordError
from energy_games.models import FrozenModel, Oca, OcaConf, PegConf, PushdownEnergyGame, Vass, VassConf
from energy_games.solvers import SimPair


class ExpectedRelation(StrEnum):
    """How the halting of the compiled machine shows in the produced instance."""

    HALTS_IFF_P0_WINS = "HaltsIffP0Wins"
    HALTS_IFF_NOT_SIMULATES = "HaltsIffNotSimulates"


class Role(StrEnum):
    """Part of the construction a generated transition belongs to."""

    # pushdown energy game
    PUSH = "player 1 pushes the record of a machine step"
    ACCEPT = "player 0 accepts the last step"
    ENTER_AUDIT = "player 0 challenges the last step"
    POP = "audit pops a record"
    DRAIN = "second unit of a double-cost pop"
    RETURN = "audit reached the bottom and restarts the machine"
    HALT_DRAIN = "halting state drains the energy"
    # one-counter net against two-dimensional VASS
    INCREMENT = "both sides increment"
    TEST = "Duplicator claims the outcome of a test"
    ACCEPT_ZERO = "Spoiler accepts a zero claim"
    ACCEPT_POSITIVE = "Spoiler accepts a positive claim"
    SPURIOUS = "Spoiler accepted a claim that was not made"
    CHALLENGE = "Spoiler challenges a zero claim"
    EVALUATE = "challenge compares the counters"
    UNIVERSAL = "universal state loop"
    HALT = "halting action"


class AuditKind(StrEnum):
    """
    The two audits of a test step.

    ``claimed-zero`` checks a zero-branch step and lets Player 0 gain when the counter was
    positive; ``claimed-positive`` checks a decrementing step and lets Player 0 gain when the
    counter was zero.
    """

    CLAIMED_ZERO = "claimed-zero"
    CLAIMED_POSITIVE = "claimed-positive"


class Record(FrozenModel):
    """
    Stack symbol recording one edge of the machine's transition graph.

    ``change`` is ``inc`` for an increment, ``dec`` for the positive branch of a test (which
    decrements) and ``zero`` for the zero branch (which leaves the counter alone).
    """

    symbol: str
    source: str
    target: str
    counter: Literal[1, 2]
    change: Literal["inc", "dec", "zero"]

    @property
    def audit(self) -> AuditKind | None:
        """Audit Player 0 may start right after this record is pushed; increments cannot be challenged."""
        match self.change:
            case "zero":
                return AuditKind.CLAIMED_ZERO
            case "dec":
                return AuditKind.CLAIMED_POSITIVE
        return None

    def audit_cost(self, audit: AuditKind, counter: int) -> int:
        """Energy removed when the given audit of ``counter`` pops this record."""
        if self.counter != counter or self.change == "zero":
            return 1
        if audit is AuditKind.CLAIMED_ZERO:
            return 2 if self.change == "inc" else 0
        return 2 if self.change == "dec" else 0


class GadgetOutput(FrozenModel):
    """
    Instance compiled from a Minsky machine.

    The pushdown construction fills ``game``, ``bottom`` and ``records``; its initial position is
    ``(initial_state, [bottom])`` with any credit. The simulation construction fills ``spoiler``
    and ``duplicator``; its initial pair is ``(initial_state, 0)`` against
    ``(initial_state, (0, 0))``.
    """

    kind: Literal["gadget"] = "gadget"
    construction: Literal["pushdown-energy", "ocn-vass"]
    expected_relation: ExpectedRelation
    initial_state: str
    game: PushdownEnergyGame | None = None
    bottom: str | None = None
    records: tuple[Record, ...] = ()
    spoiler: Oca | None = None
    duplicator: Vass | None = None
    provenance: dict[str, Role]

    @model_validator(mode="after")
    def check_initial_position(self) -> GadgetOutput:
        if self.construction == "pushdown-energy":
            if self.game is None or self.bottom is None:
                raise ValueError("pushdown construction needs a game and a bottom symbol")
            if self.initial_state not in self.game.states or self.bottom not in self.game.stack_alphabet:
                raise ValueError(f"initial position {self.initial_state}[{self.bottom}] is not in the game")
        else:
            if self.spoiler is None or self.duplicator is None:
                raise ValueError("simulation construction needs both machines")
            if self.initial_state not in self.spoiler.states or self.initial_state not in self.duplicator.states:
                raise ValueError(f"initial state {self.initial_state} is missing from a machine")
        return self

    def initial_position(self, credit: int = 0) -> PegConf:
        if self.game is None:
            raise MissingMachineError(self.construction, "energy game")
        return PegConf(self.initial_state, (self.bottom,), (credit,))

    def initial_pair(self) -> SimPair:
        if self.spoiler is None:
            raise MissingMachineError(self.construction, "simulation pair")
        return SimPair(OcaConf(self.initial_state, 0), VassConf(self.initial_state, (0, 0)))

    def record(self, symbol: str) -> Record:
        for record in self.records:
            if record.symbol == symbol:
                return record
        raise UnknownRecordError(symbol)
