"""Interleaves the two semi-decision procedures for simulation between a one-counter automaton and a net.

Non-simulation is found by bounded solving with growing bounds; simulation is certified by an
ultimately periodic colouring that passes the closure check. Candidates come from coloured grids
of growing size and from a systematic enumeration of small window shapes.
"""

from __future__ import annotations
from itertools import product
from typing import Iterator
import logging
import math
import time

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from energy_games.coloring import NoStablePattern, compute_coloring, detect_periodic_parameters
from energy_games.models import Oca
from energy_games.semilinear.checker import Accepted, check_simulation_candidate, unmatched_step, window_points
from energy_games.semilinear.distill import NotDistillable, coloring_to_upc
from energy_games.semilinear.upc import UltimatelyPeriodicColoring
from energy_games.solvers import (
    Bounds,
    CapacityExceededError,
    Outcome,
    SimPair,
    SolverSettings,
    Verdict,
    solve_simulation_bounded,
)

logger = logging.getLogger(__name__)

Shape = tuple[int, int, int, int, int]


class DecideBudget(BaseModel):
    """Limits of ``enumerate_and_decide``.

    Attributes:
        max_window (int): Largest threshold, on both axes, of enumerated shapes.
        max_period (int): Largest period, on both axes, of enumerated shapes.
        max_slope (int): Largest slope of enumerated shapes.
        bounds (Bounds): Solver bounds of the first stage; stage ``s`` uses ``s + 1`` times them.
        stages (int): Number of stages.
        grid_size (int): Grid size of the first stage; stage ``s`` uses ``s + 1`` times it.
        wall_clock (float): Seconds after which the search gives up.
    """

    model_config = ConfigDict(frozen=True)

    max_window: int = Field(default=3, ge=0)
    max_period: int = Field(default=2, ge=1)
    max_slope: int = Field(default=1, ge=0)
    bounds: Bounds = Bounds(counter_cap=8, energy_cap=1, round_cap=16)
    stages: int = Field(default=3, ge=1)
    grid_size: int = Field(default=8, ge=3)
    wall_clock: float = Field(default=60.0, gt=0)


class Decision(BaseModel):
    """
    Outcome of the interleaved search.

    ``Win0`` carries the bounded verdict with Spoiler's strategy, ``Win1`` carries the accepted
    colouring and ``Unknown`` means the budget ran out. ``evidence`` holds the last bounded verdict.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    outcome: Outcome
    certificate: UltimatelyPeriodicColoring | None = None
    evidence: Verdict | None = None
    stage: int
    candidates_checked: int = 0


def candidate_shapes(budget: DecideBudget) -> list[Shape]:
    """Window shapes ``(M, P, M', P', D)`` by total size, then lexicographically."""
    window = range(budget.max_window + 1)
    periods = range(1, budget.max_period + 1)
    slopes = range(budget.max_slope + 1)
    shapes = [
        (m, p, m_prime, p_prime, d)
        for m, p, m_prime, p_prime, d in product(window, periods, window, periods, slopes)
        if p <= m + 1 and p_prime <= m_prime + 1
    ]
    return sorted(shapes, key=lambda shape: (sum(shape), shape))


def greatest_candidate(a: Oca, a_prime: Oca, shape: Shape) -> UltimatelyPeriodicColoring:
    """
    Greatest colouring of the given shape whose White points are closed.

    Starts from the all-White window and blackens the representative of every point whose closure
    fails, until nothing changes. Simulations of one shape are closed under union, so the result
    contains every simulation of that shape.
    """
    threshold, period, threshold_prime, period_prime, slope = shape
    cells = {
        (left, right): np.ones((threshold + 1, threshold_prime + 1), dtype=bool)
        for left in a.states
        for right in a_prime.states
    }
    while True:
        upc = UltimatelyPeriodicColoring.from_cells(
            cells, a.states, a_prime.states, period=period, period_prime=period_prime, slope=slope
        )
        changed = False
        for point in window_points(upc):
            left, m, right, m_prime = point
            if upc.is_white(left, right, m, m_prime) and unmatched_step(a, a_prime, upc, point) is not None:
                cells[(left, right)][upc.representative(m, m_prime)] = False
                changed = True
        if not changed:
            return upc


def enumerate_and_decide(
    a: Oca,
    a_prime: Oca,
    pair: SimPair,
    budget: DecideBudget | None = None,
    *,
    settings: SolverSettings | None = None,
) -> Decision:
    """
    Decides whether Duplicator's configuration simulates Spoiler's, within a budget.

    Args:
        a (Oca): Spoiler's automaton.
        a_prime (Oca): Duplicator's net.
        pair (SimPair): Pair of one-counter configurations.
        budget (DecideBudget | None): Search limits, defaults when None.
        settings (SolverSettings | None): Solver defaults.

    Returns:
        Decision: A certified answer, or ``Unknown`` when the budget is exhausted.
    """
    budget = budget or DecideBudget()
    point = (pair.left.state, pair.left.counter, pair.right.state, pair.right.counter)
    shapes = candidate_shapes(budget)
    chunk = math.ceil(len(shapes) / budget.stages)
    deadline = time.monotonic() + budget.wall_clock
    evidence: Verdict | None = None
    checked = 0
    logger.info("++ decide %s with %d shapes in %d stages", pair, len(shapes), budget.stages)

    for stage in range(budget.stages):
        bounds = budget.bounds.scaled(stage + 1)
        try:
            evidence = solve_simulation_bounded(a, a_prime, pair, bounds, settings=settings)
        except CapacityExceededError as error:
            logger.warning("stage %d: %s", stage, error)
        if evidence is not None and evidence.outcome is Outcome.WIN0:
            logger.info("-- decide: Spoiler wins at stage %d", stage)
            return Decision(outcome=Outcome.WIN0, evidence=evidence, stage=stage, candidates_checked=checked)

        stage_shapes = shapes[stage * chunk : (stage + 1) * chunk]
        grid_size = budget.grid_size * (stage + 1)
        for upc in _stage_candidates(a, a_prime, pair, stage_shapes, grid_size, bounds, deadline, settings):
            checked += 1
            if isinstance(check_simulation_candidate(a, a_prime, upc, [point]), Accepted):
                logger.info("-- decide: simulation certified at stage %d by window %s", stage, upc.shape)
                return Decision(
                    outcome=Outcome.WIN1, certificate=upc, evidence=evidence, stage=stage, candidates_checked=checked
                )
        if time.monotonic() > deadline:
            logger.info("-- decide: wall clock exhausted at stage %d", stage)
            return Decision(outcome=Outcome.UNKNOWN, evidence=evidence, stage=stage, candidates_checked=checked)

    logger.info("-- decide: budget exhausted")
    return Decision(outcome=Outcome.UNKNOWN, evidence=evidence, stage=budget.stages - 1, candidates_checked=checked)


def _distilled_candidate(
    a: Oca,
    a_prime: Oca,
    pair: SimPair,
    size: int,
    bounds: Bounds,
    settings: SolverSettings | None,
) -> UltimatelyPeriodicColoring | None:
    size = max(size, pair.left.counter, pair.right.counter)
    grid_bounds = Bounds(
        counter_cap=max(bounds.counter_cap, size + 2), energy_cap=bounds.energy_cap, round_cap=bounds.round_cap
    )
    try:
        grid = compute_coloring(a, a_prime, size, size, grid_bounds, settings=settings)
    except CapacityExceededError as error:
        logger.warning("grid of size %d: %s", size, error)
        return None
    params = detect_periodic_parameters(grid)
    if isinstance(params, NoStablePattern):
        logger.debug("no periodic pattern: %s", params.reason)
        return None
    upc = coloring_to_upc(grid, params)
    if isinstance(upc, NotDistillable):
        logger.debug("not distillable: %s", upc.reason)
        return None
    return upc



def _stage_candidates(
    a: Oca,
    a_prime: Oca,
    pair: SimPair,
    shapes: list[Shape],
    grid_size: int,
    bounds: Bounds,
    deadline: float,
    settings: SolverSettings | None,
) -> Iterator[UltimatelyPeriodicColoring]:
    distilled = _distilled_candidate(a, a_prime, pair, grid_size, bounds, settings)
    if distilled is not None:
        yield distilled
    for shape in shapes:
        if time.monotonic() > deadline:
            return
        yield greatest_candidate(a, a_prime, shape)
