from __future__ import annotations
from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class Bounds(BaseModel):
    """Truncation parameters of a bounded solve.

    Attributes:
        counter_cap (int): Largest counter value, stack height or VASS coordinate explored.
        energy_cap (int): Largest energy value tracked per coordinate.
        round_cap (int): Number of simulation rounds Spoiler may use.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    counter_cap: int = Field(ge=1)
    energy_cap: int = Field(ge=1)
    round_cap: int = Field(ge=1)

    def dominates(self, other: Bounds) -> bool:
        return (
            self.counter_cap >= other.counter_cap
            and self.energy_cap >= other.energy_cap
            and self.round_cap >= other.round_cap
        )

    def scaled(self, factor: int) -> Bounds:
        return Bounds(
            counter_cap=self.counter_cap * factor,
            energy_cap=self.energy_cap * factor,
            round_cap=self.round_cap * factor,
        )

    def __str__(self) -> str:
        return f"({self.counter_cap},{self.energy_cap},{self.round_cap})"


class Outcome(StrEnum):
    WIN0 = "Win0"
    WIN1 = "Win1"
    UNKNOWN = "Unknown"

    @property
    def definite(self) -> bool:
        return self is not Outcome.UNKNOWN


class Verdict(BaseModel):
    """Three-valued result of a bounded solve.

    ``strategy`` maps explored positions owned by the winner to the chosen successor. For
    simulation games Spoiler's moves are ``SpoilerMove`` values and Duplicator's moves are pairs.
    ``rounds`` is the number of rounds (or moves) Player 0 needs, when Player 0 wins.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    outcome: Outcome
    bounds: Bounds
    positions_explored: int = 0
    strategy: dict[Any, Any] | None = None
    rounds: int | None = None

    def to_json_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "verdict": self.outcome.value,
            "boundsUsed": self.bounds.model_dump(),
            "positionsExplored": self.positions_explored,
        }
        if self.rounds is not None:
            payload["rounds"] = self.rounds
        if self.strategy is not None:
            payload["strategy"] = {str(position): str(choice) for position, choice in self.strategy.items()}
        return payload
