from energy_games.semilinear.checker import (
    Accepted,
    Point,
    Rejected,
    check_simulation_candidate,
    closure_window,
    unmatched_step,
    window_points,
)
from energy_games.semilinear.decide import (
    DecideBudget,
    Decision,
    candidate_shapes,
    enumerate_and_decide,
    greatest_candidate,
)
from energy_games.semilinear.distill import NotDistillable, coloring_to_upc
from energy_games.semilinear.semilinear_exceptions import InvalidUPCError, SemilinearException, UnknownPairError
from energy_games.semilinear.upc import PairWindow, UltimatelyPeriodicColoring, decode_runs, encode_runs, upc_color

__all__ = [
    "Accepted",
    "DecideBudget",
    "Decision",
    "InvalidUPCError",
    "NotDistillable",
    "PairWindow",
    "Point",
    "Rejected",
    "SemilinearException",
    "UltimatelyPeriodicColoring",
    "UnknownPairError",
    "candidate_shapes",
    "check_simulation_candidate",
    "closure_window",
    "coloring_to_upc",
    "decode_runs",
    "encode_runs",
    "enumerate_and_decide",
    "greatest_candidate",
    "unmatched_step",
    "upc_color",
    "window_points",
]
