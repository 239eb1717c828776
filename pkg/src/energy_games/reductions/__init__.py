from energy_games.reductions.energy_to_simulation import energy_to_simulation
from energy_games.reductions.oca_to_ocn import oca_ocn_to_ocn_ocn
from energy_games.reductions.output import Clause, PositionMap, ReductionOutput, pair_state
from energy_games.reductions.params import LineParams, OcaToOcnParams
from energy_games.reductions.reductions_exceptions import (
    InconsistentParamsError,
    OutsideMapDomainError,
    ReductionException,
)
from energy_games.reductions.simulation_to_energy import simulation_to_energy

__all__ = [
    "Clause",
    "InconsistentParamsError",
    "LineParams",
    "OcaToOcnParams",
    "OutsideMapDomainError",
    "PositionMap",
    "ReductionException",
    "ReductionOutput",
    "energy_to_simulation",
    "oca_ocn_to_ocn_ocn",
    "pair_state",
    "simulation_to_energy",
]
