from energy_games.models.configurations import (
    GamePosition,
    LtsConf,
    McmConf,
    OcaConf,
    OcegConf,
    PdaConf,
    PegConf,
    VassConf,
    structural_size,
)
from energy_games.models.conversions import (
    is_one_counter_shaped,
    oca_as_pda,
    oca_conf_as_pda,
    oca_conf_to_vass,
    oca_to_vass,
    vass_to_oca,
)
from energy_games.models.games import (
    OcegTransition,
    OneCounterEnergyGame,
    PegTransition,
    Player,
    PushdownEnergyGame,
)
from energy_games.models.machines import (
    FrozenModel,
    IncRule,
    Mcm,
    Metadata,
    Oca,
    OcaTransition,
    Pda,
    PdaTransition,
    Vass,
    VassTransition,
    ZeroTestRule,
)
from energy_games.models.minsky import Halted, HaltedAfter, StillRunning, mcm_run, mcm_step
from energy_games.models.models_exceptions import InvalidModelError, KindMismatchError, ModelsException
from energy_games.models.semantics import EnergyGame, Lts, game_moves, owner, steps
from energy_games.models.validation import Violation, complete_with_self_loops, validate

__all__ = [
    "EnergyGame",
    "FrozenModel",
    "GamePosition",
    "Halted",
    "HaltedAfter",
    "IncRule",
    "InvalidModelError",
    "KindMismatchError",
    "Lts",
    "LtsConf",
    "Mcm",
    "McmConf",
    "Metadata",
    "ModelsException",
    "Oca",
    "OcaConf",
    "OcaTransition",
    "OcegConf",
    "OcegTransition",
    "OneCounterEnergyGame",
    "Pda",
    "PdaConf",
    "PdaTransition",
    "PegConf",
    "PegTransition",
    "Player",
    "PushdownEnergyGame",
    "StillRunning",
    "Vass",
    "VassConf",
    "VassTransition",
    "Violation",
    "ZeroTestRule",
    "complete_with_self_loops",
    "game_moves",
    "is_one_counter_shaped",
    "mcm_run",
    "mcm_step",
    "oca_as_pda",
    "oca_conf_as_pda",
    "oca_conf_to_vass",
    "oca_to_vass",
    "owner",
    "steps",
    "structural_size",
    "validate",
    "vass_to_oca",
]
