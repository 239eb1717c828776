from energy_games.gadgets.gadgets_exceptions import GadgetException, MissingMachineError, UnknownRecordError
from energy_games.gadgets.ocn_vass import mcm_to_ocn_vs_vass
from energy_games.gadgets.output import AuditKind, ExpectedRelation, GadgetOutput, Record, Role
from energy_games.gadgets.pushdown_energy import BOTTOM, audit_state, mcm_to_pushdown_energy, records_of

__all__ = [
    "AuditKind",
    "BOTTOM",
    "ExpectedRelation",
    "GadgetException",
    "GadgetOutput",
    "MissingMachineError",
    "Record",
    "Role",
    "UnknownRecordError",
    "audit_state",
    "mcm_to_ocn_vs_vass",
    "mcm_to_pushdown_energy",
    "records_of",
]
