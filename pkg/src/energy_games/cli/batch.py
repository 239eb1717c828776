"""Batch verification campaigns: random instances solved on both sides of a reduction.

Each instance draws from its own seeded generator, so rows do not depend on the order in which
instances run. A row compares the two verdicts of one position; a pair of definite verdicts
that differ is a ``DISAGREE`` and fails the batch.
"""

from __future__ import annotations
from enum import StrEnum
from typing import Literal
import asyncio
import logging
import random

from pydantic import BaseModel, ConfigDict, Field

from energy_games.cli.generators import random_oca, random_oceg, random_vass
from energy_games.cli.schema import canonical_json
from energy_games.models import Oca, OcaConf, OcegConf, Vass, VassConf
from energy_games.reductions import energy_to_simulation, simulation_to_energy
from energy_games.solvers import (
    Bounds,
    CapacityExceededError,
    EnergyArenaSolver,
    Outcome,
    SimPair,
    SimulationGame,
    SolverSettings,
)

logger = logging.getLogger(__name__)

Operation = Literal["energy-to-sim", "sim-to-energy", "compose", "refine"]


class Agreement(StrEnum):
    AGREE = "Agree"
    LEFT_UNKNOWN = "LeftUnknown"
    RIGHT_UNKNOWN = "RightUnknown"
    BOTH_UNKNOWN = "BothUnknown"
    DISAGREE = "DISAGREE"

    @classmethod
    def of(cls, left: Outcome, right: Outcome) -> Agreement:
        if left.definite and right.definite:
            return cls.AGREE if left == right else cls.DISAGREE
        if left.definite:
            return cls.RIGHT_UNKNOWN
        return cls.LEFT_UNKNOWN if right.definite else cls.BOTH_UNKNOWN


class BatchSpec(BaseModel):
    """What a batch runs.

    Attributes:
        operation (Operation): ``energy-to-sim`` compares an energy game with its simulation
            game, ``sim-to-energy`` the converse, ``compose`` a simulation game with the result
            of both reductions in a row, ``refine`` an energy game at two bound levels.
        seed (int): Seed of the whole batch.
        count (int): Number of random instances.
        bounds (Bounds): Bounds of every solve; ``refine`` also solves at twice these.
        max_states (int): Largest number of states per player or per side.
        max_rules (int): Largest number of rules per generated machine.
        max_counter (int): Largest counter or stack-free value of the compared positions.
        max_energy (int): Largest initial energy of the compared positions.
        concurrency (int): Instances in flight in ``run_batch_async``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    operation: Operation
    seed: int = 42
    count: int = Field(default=50, ge=0)
    bounds: Bounds = Bounds(counter_cap=12, energy_cap=12, round_cap=40)
    max_states: int = Field(default=3, ge=1)
    max_rules: int = Field(default=5, ge=1)
    max_counter: int = Field(default=3, ge=0)
    max_energy: int = Field(default=3, ge=0)
    concurrency: int = Field(default=4, ge=1)


class BatchRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: int
    position: str
    left: Outcome | None = None
    right: Outcome | None = None
    agreement: Agreement = Agreement.BOTH_UNKNOWN
    error: str | None = None


class BatchReport(BaseModel):
    """Rows in instance order, then position order, with counts per agreement flag."""

    model_config = ConfigDict(frozen=True)

    spec: BatchSpec
    rows: tuple[BatchRow, ...]
    summary: dict[Agreement, int]
    errors: int

    @classmethod
    def of(cls, spec: BatchSpec, rows: list[BatchRow]) -> BatchReport:
        summary = {flag: sum(row.agreement is flag for row in rows if row.error is None) for flag in Agreement}
        return cls(spec=spec, rows=tuple(rows), summary=summary, errors=sum(row.error is not None for row in rows))

    @property
    def passed(self) -> bool:
        return self.summary[Agreement.DISAGREE] == 0 and self.errors == 0

    @property
    def definite_share(self) -> float:
        compared = [row for row in self.rows if row.error is None]
        if not compared:
            return 0.0
        return (self.summary[Agreement.AGREE] + self.summary[Agreement.DISAGREE]) / len(compared)

    def to_json(self) -> bytes:
        return canonical_json(self.model_dump(mode="json", exclude_none=True))

    def summary_text(self) -> str:
        counts = ", ".join(f"{flag}={count}" for flag, count in self.summary.items())
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{verdict}: {self.spec.operation} seed={self.spec.seed} instances={self.spec.count} "
            f"rows={len(self.rows)} errors={self.errors} {counts} definite={self.definite_share:.0%}"
        )


def instance_rng(spec: BatchSpec, index: int) -> random.Random:
    return random.Random(spec.seed * 1_000_003 + index)


def _compare(index: int, labels: list[str], left: list[Outcome], right: list[Outcome]) -> list[BatchRow]:
    return [
        BatchRow(instance=index, position=label, left=first, right=second, agreement=Agreement.of(first, second))
        for label, first, second in zip(labels, left, right)
    ]


def _energy_to_sim(spec: BatchSpec, index: int, settings: SolverSettings | None) -> list[BatchRow]:
    game = random_oceg(instance_rng(spec, index), spec.max_states, spec.max_rules)
    positions = [
        OcegConf(state, counter, (energy,))
        for state in game.states
        for counter in range(spec.max_counter + 1)
        for energy in range(spec.max_energy + 1)
    ]
    solver = EnergyArenaSolver(game, positions, spec.bounds, settings=settings)
    output = energy_to_simulation(game)
    pairs = [output.position_map.apply(position) for position in positions]
    simulation = SimulationGame(output.left, output.right, pairs, spec.bounds, settings=settings)
    return _compare(
        index,
        [str(position) for position in positions],
        [solver.outcome(position) for position in positions],
        [simulation.outcome(pair) for pair in pairs],
    )


def _random_pairs(spec: BatchSpec, index: int) -> tuple[Oca, Vass, list[SimPair]]:
    rng = instance_rng(spec, index)
    spoiler = random_oca(rng, spec.max_states, spec.max_rules, prefix="p")
    duplicator = random_vass(rng, 1, spec.max_states, spec.max_rules, prefix="r")
    pairs = [
        SimPair(OcaConf(left, counter), VassConf(right, (energy,)))
        for left in spoiler.states
        for right in duplicator.states
        for counter in range(spec.max_counter + 1)
        for energy in range(spec.max_energy + 1)
    ]
    return spoiler, duplicator, pairs


def _sim_to_energy(spec: BatchSpec, index: int, settings: SolverSettings | None) -> list[BatchRow]:
    spoiler, duplicator, pairs = _random_pairs(spec, index)
    simulation = SimulationGame(spoiler, duplicator, pairs, spec.bounds, settings=settings)
    output = simulation_to_energy(spoiler, duplicator)
    positions = [output.position_map.apply(pair) for pair in pairs]
    solver = EnergyArenaSolver(output.left, positions, spec.bounds, settings=settings)
    return _compare(
        index,
        [str(pair) for pair in pairs],
        [simulation.outcome(pair) for pair in pairs],
        [solver.outcome(position) for position in positions],
    )


def _compose(spec: BatchSpec, index: int, settings: SolverSettings | None) -> list[BatchRow]:
    spoiler, duplicator, pairs = _random_pairs(spec, index)
    simulation = SimulationGame(spoiler, duplicator, pairs, spec.bounds, settings=settings)
    to_energy = simulation_to_energy(spoiler, duplicator)
    back = energy_to_simulation(to_energy.left)
    composed = [back.position_map.apply(to_energy.position_map.apply(pair)) for pair in pairs]
    # A source round is two energy moves and an energy move takes at most three rounds.
    composed_bounds = Bounds(
        counter_cap=spec.bounds.counter_cap,
        energy_cap=spec.bounds.energy_cap,
        round_cap=6 * spec.bounds.round_cap,
    )
    round_trip = SimulationGame(back.left, back.right, composed, composed_bounds, settings=settings)
    return _compare(
        index,
        [str(pair) for pair in pairs],
        [simulation.outcome(pair) for pair in pairs],
        [round_trip.outcome(pair) for pair in composed],
    )


def _refine(spec: BatchSpec, index: int, settings: SolverSettings | None) -> list[BatchRow]:
    game = random_oceg(instance_rng(spec, index), spec.max_states, spec.max_rules)
    positions = [
        OcegConf(state, counter, (energy,))
        for state in game.states
        for counter in range(spec.max_counter + 1)
        for energy in range(spec.max_energy + 1)
    ]
    coarse = EnergyArenaSolver(game, positions, spec.bounds, settings=settings)
    fine = EnergyArenaSolver(game, positions, spec.bounds.scaled(2), settings=settings)
    return _compare(
        index,
        [str(position) for position in positions],
        [coarse.outcome(position) for position in positions],
        [fine.outcome(position) for position in positions],
    )


_OPERATIONS = {
    "energy-to-sim": _energy_to_sim,
    "sim-to-energy": _sim_to_energy,
    "compose": _compose,
    "refine": _refine,
}


def run_instance(spec: BatchSpec, index: int, settings: SolverSettings | None = None) -> list[BatchRow]:
    """Rows of one instance; an exhausted position budget gives a single error row."""
    try:
        return _OPERATIONS[spec.operation](spec, index, settings)
    except CapacityExceededError as error:
        logger.warning("instance %d: %s", index, error)
        return [BatchRow(instance=index, position="*", error=str(error))]


def run_batch(spec: BatchSpec, *, settings: SolverSettings | None = None) -> BatchReport:
    """
    Runs a batch one instance after the other.

    Args:
        spec (BatchSpec): What to run.
        settings (SolverSettings | None): Solver defaults.

    Returns:
        BatchReport: Deterministic for a given spec.
    """
    logger.info("++ batch %s seed=%d count=%d", spec.operation, spec.seed, spec.count)
    rows = [row for index in range(spec.count) for row in run_instance(spec, index, settings)]
    report = BatchReport.of(spec, rows)
    logger.info("-- batch: %s", report.summary_text())
    return report


async def run_batch_async(spec: BatchSpec, *, settings: SolverSettings | None = None) -> BatchReport:
    """Runs the instances in worker threads, ``spec.concurrency`` at a time; same report as ``run_batch``."""
    semaphore = asyncio.Semaphore(spec.concurrency)

    async def run(index: int) -> list[BatchRow]:
        async with semaphore:
            return await asyncio.to_thread(run_instance, spec, index, settings)

    logger.info("++ batch %s seed=%d count=%d, %d at a time", spec.operation, spec.seed, spec.count, spec.concurrency)
    results = await asyncio.gather(*(run(index) for index in range(spec.count)))
    report = BatchReport.of(spec, [row for rows in results for row in rows])
    logger.info("-- batch: %s", report.summary_text())
    return report
