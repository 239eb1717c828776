from energy_games.solvers.arena import Arena, NodeKind
from energy_games.solvers.energy import (
    CreditScan,
    EnergyArenaSolver,
    check_upward_closure,
    initial_position,
    minimal_credit_bounded,
    solve_energy_bounded,
)
from energy_games.solvers.refinement import EnergyProblem, SimulationProblem, refine
from energy_games.solvers.settings import SolverSettings
from energy_games.solvers.simulation import (
    SimPair,
    SimulationGame,
    SpoilerMove,
    replay_spoiler_strategy,
    simulation_approximants,
    solve_simulation_bounded,
)
from energy_games.solvers.solvers_exceptions import (
    BoundsNotLargerError,
    CapacityExceededError,
    ContradictionError,
    SolverException,
)
from energy_games.solvers.verdict import Bounds, Outcome, Verdict

__all__ = [
    "Arena",
    "Bounds",
    "BoundsNotLargerError",
    "CapacityExceededError",
    "ContradictionError",
    "CreditScan",
    "EnergyArenaSolver",
    "EnergyProblem",
    "NodeKind",
    "Outcome",
    "SimPair",
    "SimulationGame",
    "SimulationProblem",
    "SolverException",
    "SolverSettings",
    "SpoilerMove",
    "Verdict",
    "check_upward_closure",
    "initial_position",
    "minimal_credit_bounded",
    "refine",
    "replay_spoiler_strategy",
    "simulation_approximants",
    "solve_energy_bounded",
    "solve_simulation_bounded",
]
