from __future__ import annotations
import os

from pydantic import BaseModel, ConfigDict, Field

POSITION_BUDGET_VARIABLE = "ENERGY_GAMES_POSITION_BUDGET"
DEFAULT_POSITION_BUDGET = 5_000_000


class SolverSettings(BaseModel):
    """Process-wide solver defaults.

    Attributes:
        position_budget (int): Maximum number of arena nodes a single exploration may create.
        max_push (int): Default pushed-word cap for pushdown models.
    """

    model_config = ConfigDict(frozen=True)

    position_budget: int = Field(default=DEFAULT_POSITION_BUDGET, ge=1)
    max_push: int = Field(default=2, ge=0)

    @classmethod
    def from_environment(cls) -> SolverSettings:
        budget = os.environ.get(POSITION_BUDGET_VARIABLE)
        if budget is None:
            return cls()
        return cls(position_budget=int(budget))
