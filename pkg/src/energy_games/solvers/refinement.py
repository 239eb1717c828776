from __future__ import annotations
from typing import Any
import logging

from pydantic import BaseModel, ConfigDict

from energy_games.models import EnergyGame, GamePosition, Lts
from energy_games.solvers.energy import solve_energy_bounded
from energy_games.solvers.settings import SolverSettings
from energy_games.solvers.simulation import SimPair, solve_simulation_bounded
from energy_games.solvers.solvers_exceptions import BoundsNotLargerError, ContradictionError
from energy_games.solvers.verdict import Bounds, Verdict

logger = logging.getLogger(__name__)


class EnergyProblem(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    game: Any
    position: Any

    @classmethod
    def of(cls, game: EnergyGame, position: GamePosition) -> EnergyProblem:
        return cls(game=game, position=position)


class SimulationProblem(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    left: Any
    right: Any
    pair: Any

    @classmethod
    def of(cls, left: Lts, right: Lts, pair: SimPair) -> SimulationProblem:
        return cls(left=left, right=right, pair=pair)


def refine(
    previous: Verdict,
    problem: EnergyProblem | SimulationProblem,
    larger_bounds: Bounds,
    *,
    settings: SolverSettings | None = None,
) -> Verdict:
    """
    Re-solves a problem with larger bounds.

    Args:
        previous (Verdict): The verdict obtained with smaller bounds.
        problem (EnergyProblem | SimulationProblem): The problem that produced it.
        larger_bounds (Bounds): Bounds dominating ``previous.bounds`` coordinatewise.

    Returns:
        Verdict: The new verdict. A definite previous verdict is never contradicted.

    Raises:
        BoundsNotLargerError: If ``larger_bounds`` does not dominate the previous bounds.
        ContradictionError: If the re-solve flips a definite verdict.
    """
    if not larger_bounds.dominates(previous.bounds):
        raise BoundsNotLargerError(previous.bounds, larger_bounds)
    if isinstance(problem, EnergyProblem):
        current = solve_energy_bounded(problem.game, problem.position, larger_bounds, settings=settings)
    else:
        current = solve_simulation_bounded(
            problem.left, problem.right, problem.pair, larger_bounds, settings=settings
        )
    if previous.outcome.definite and current.outcome != previous.outcome:
        raise ContradictionError(previous.outcome.value, current.outcome.value)
    logger.info("refined %s at %s to %s at %s", previous.outcome, previous.bounds, current.outcome, larger_bounds)
    return current
