"""Colour grids of the simulation preorder between a one-counter automaton and a one-counter net."""

from __future__ import annotations
from enum import IntEnum
from random import Random
from typing import Iterator
import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from energy_games.models import InvalidModelError, Oca, OcaConf, Violation, steps, validate
from energy_games.solvers import Bounds, Outcome, SimPair, SimulationGame, SolverSettings

logger = logging.getLogger(__name__)

StatePair = tuple[str, str]


class Color(IntEnum):
    BLACK = 0
    WHITE = 1
    UNKNOWN = 2

    @property
    def symbol(self) -> str:
        return {Color.BLACK: "B", Color.WHITE: "W", Color.UNKNOWN: "?"}[self]

    @classmethod
    def of(cls, outcome: Outcome) -> Color:
        return {Outcome.WIN0: cls.BLACK, Outcome.WIN1: cls.WHITE, Outcome.UNKNOWN: cls.UNKNOWN}[outcome]


class ColorGrid(BaseModel):
    """
    Colouring of ``(p m, p' m')`` for every state pair, ``m <= m_max`` and ``m' <= m_prime_max``.

    ``cells[(p, p')]`` is an ``int8`` array of shape ``(m_max + 1, m_prime_max + 1)`` holding
    ``Color`` values, indexed by Spoiler's counter first. White cells are simulated pairs, Black
    cells are not, Unknown cells were not decided within ``bounds``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    left_states: tuple[str, ...]
    right_states: tuple[str, ...]
    m_max: int
    m_prime_max: int
    bounds: Bounds
    cells: dict[StatePair, np.ndarray]

    def pairs(self) -> Iterator[StatePair]:
        for left in self.left_states:
            for right in self.right_states:
                yield left, right

    def color(self, left: str, right: str, m: int, m_prime: int) -> Color:
        return Color(int(self.cells[(left, right)][m, m_prime]))

    def column(self, left: str, right: str, m: int) -> list[Color]:
        return [Color(int(value)) for value in self.cells[(left, right)][m]]

    def definite_count(self) -> int:
        return sum(int(np.count_nonzero(cells != Color.UNKNOWN)) for cells in self.cells.values())

    def monotonicity_violations(self) -> list[tuple[str, str, int, int]]:
        """Cells that are White while a definite cell above them in the column is Black."""
        violations = []
        for (left, right), cells in self.cells.items():
            for m in range(self.m_max + 1):
                seen_white = False
                for m_prime in range(self.m_prime_max + 1):
                    value = cells[m, m_prime]
                    if value == Color.WHITE:
                        seen_white = True
                    elif value == Color.BLACK and seen_white:
                        violations.append((left, right, m, m_prime))
        return violations


def _require_net(a_prime: Oca) -> None:
    if a_prime.delta_zero or not a_prime.is_net:
        raise InvalidModelError([Violation(code="NotANet", element="a_prime", detail="Duplicator must be a net")])


def compute_coloring(
    a: Oca,
    a_prime: Oca,
    m_max: int,
    m_prime_max: int,
    bounds: Bounds,
    *,
    fill: bool = True,
    settings: SolverSettings | None = None,
) -> ColorGrid:
    """
    Colours every cell of the grid with one shared bounded simulation game.

    Args:
        a (Oca): Spoiler's automaton.
        a_prime (Oca): Duplicator's net.
        m_max (int): Largest Spoiler counter.
        m_prime_max (int): Largest Duplicator counter.
        bounds (Bounds): Solver bounds; the counter cap should exceed both grid sizes.
        fill (bool): Upgrade Unknown cells to the colour forced by column monotonicity.
        settings (SolverSettings | None): Solver defaults.

    Returns:
        ColorGrid: The colouring.

    Raises:
        InvalidModelError: If a machine has violations or Duplicator's machine has zero tests.
        CapacityExceededError: If the shared arena exceeds the position budget.
    """
    violations = validate(a) + validate(a_prime)
    if violations:
        raise InvalidModelError(violations)
    _require_net(a_prime)

    roots = [
        SimPair(OcaConf(left, m), OcaConf(right, m_prime))
        for left in a.states
        for right in a_prime.states
        for m in range(m_max + 1)
        for m_prime in range(m_prime_max + 1)
    ]
    logger.info("++ coloring %dx%d for %d state pairs", m_max + 1, m_prime_max + 1, len(a.states) * len(a_prime.states))
    game = SimulationGame(a, a_prime, roots, bounds, settings=settings)
    cells: dict[StatePair, np.ndarray] = {}
    for left in a.states:
        for right in a_prime.states:
            grid = np.full((m_max + 1, m_prime_max + 1), Color.UNKNOWN, dtype=np.int8)
            for m in range(m_max + 1):
                for m_prime in range(m_prime_max + 1):
                    grid[m, m_prime] = Color.of(game.outcome(SimPair(OcaConf(left, m), OcaConf(right, m_prime))))
                if fill:
                    _fill_column(grid[m])
            cells[(left, right)] = grid

    colored = ColorGrid(
        left_states=a.states,
        right_states=a_prime.states,
        m_max=m_max,
        m_prime_max=m_prime_max,
        bounds=bounds,
        cells=cells,
    )
    logger.info("-- coloring, %d definite cells from %d positions", colored.definite_count(), game.positions_explored)
    return colored


def _fill_column(column: np.ndarray) -> None:
    whites = np.flatnonzero(column == Color.WHITE)
    if whites.size:
        above = column[whites[0]:]
        above[above == Color.UNKNOWN] = Color.WHITE
    blacks = np.flatnonzero(column == Color.BLACK)
    if blacks.size:
        below = column[: blacks[-1] + 1]
        below[below == Color.UNKNOWN] = Color.BLACK


def spot_check_closure(grid: ColorGrid, a: Oca, a_prime: Oca, rng: Random, samples: int = 100) -> list[str]:
    """
    Re-checks the one-step closure of randomly sampled White cells.

    A White cell is closed when every Spoiler step can be answered by a step with the same action
    that does not lead to a Black cell. Steps leaving the grid are accepted.

    Returns:
        list[str]: Descriptions of the unmatched steps, empty when every sampled cell is closed.
    """
    whites = [
        (left, right, int(m), int(m_prime))
        for (left, right), cells in grid.cells.items()
        for m, m_prime in np.argwhere(cells == Color.WHITE)
    ]
    failures = []
    for left, right, m, m_prime in rng.sample(whites, min(samples, len(whites))):
        answers = steps(a_prime, OcaConf(right, m_prime))
        for action, target in steps(a, OcaConf(left, m)):
            if not any(
                answer == action and _not_black(grid, target, response) for answer, response in answers
            ):
                failures.append(f"{left}{m} <= {right}{m_prime}: {action} -> {target} unmatched")
    return failures


def _not_black(grid: ColorGrid, left: OcaConf, right: OcaConf) -> bool:
    if left.counter > grid.m_max or right.counter > grid.m_prime_max:
        return True
    return grid.color(left.state, right.state, left.counter, right.counter) is not Color.BLACK
