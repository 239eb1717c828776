"""Bounded solver for pushdown and one-counter energy games with a fixed initial credit."""

from __future__ import annotations
from collections import deque
from dataclasses import replace
from typing import Iterable, Sequence
import logging

from pydantic import BaseModel, ConfigDict

from energy_games.models import (
    EnergyGame,
    GamePosition,
    InvalidModelError,
    OcegConf,
    OneCounterEnergyGame,
    PegConf,
    Player,
    game_moves,
    structural_size,
    validate,
)
from energy_games.solvers.arena import Arena, NodeKind
from energy_games.solvers.settings import SolverSettings
from energy_games.solvers.verdict import Bounds, Outcome, Verdict

logger = logging.getLogger(__name__)


class EnergyArenaSolver:
    """
    Solves an energy game from a set of initial positions on two truncated arenas.

    The exact arena keeps energies as they are and turns every position above a cap into
    a frontier leaf; the Player 0 attractor to bankruptcy on it is a sound Win0 region.
    The saturated arena clamps energy at the energy cap, which only weakens Player 1, and
    the complement of the Player 0 attractor to bankruptcy or frontier is a sound Win1 region.
    """

    def __init__(
        self,
        game: EnergyGame,
        roots: Sequence[GamePosition],
        bounds: Bounds,
        *,
        settings: SolverSettings | None = None,
    ):
        """
        Explores the exact arena and computes the Player 0 winning region on it.

        Args:
            game (EnergyGame): A valid pushdown or one-counter energy game.
            roots (Sequence[GamePosition]): Initial positions, all energies non-negative.
            bounds (Bounds): Truncation parameters.
            settings (SolverSettings | None): Solver defaults, read from the environment if None.

        Raises:
            InvalidModelError: If the game has violations.
            CapacityExceededError: If an arena exceeds the position budget.
        """
        violations = validate(game)
        if violations:
            raise InvalidModelError(violations)
        for root in roots:
            if min(root.energy) < 0:
                raise ValueError(f"Initial position {root} has negative energy")
        self._game = game
        self._roots = list(roots)
        self._bounds = bounds
        self._settings = settings or SolverSettings.from_environment()
        self._exact = self._explore(self._roots, saturate=False)
        self._win0 = self._exact.attractor(Player.P0, self._exact.nodes_of_kind(NodeKind.BANKRUPT))
        self._saturated: Arena | None = None
        self._safe: set[GamePosition] | None = None

    @property
    def positions_explored(self) -> int:
        return len(self._exact) + (len(self._saturated) if self._saturated is not None else 0)

    def _clamp(self, position: GamePosition) -> GamePosition:
        cap = self._bounds.energy_cap
        if max(position.energy) <= cap:
            return position
        return replace(position, energy=tuple(min(value, cap) for value in position.energy))

    def _classify(self, position: GamePosition, saturate: bool) -> NodeKind:
        if min(position.energy) < 0:
            return NodeKind.BANKRUPT
        if structural_size(position) > self._bounds.counter_cap:
            return NodeKind.FRONTIER
        if not saturate and max(position.energy) > self._bounds.energy_cap:
            return NodeKind.FRONTIER
        return NodeKind.INNER

    def _explore(self, roots: Iterable[GamePosition], *, saturate: bool) -> Arena:
        arena = Arena(
            position_budget=self._settings.position_budget,
            name="saturated energy arena" if saturate else "exact energy arena",
        )
        queue: deque[GamePosition] = deque()

        def visit(position: GamePosition) -> GamePosition:
            if saturate:
                position = self._clamp(position)
            if position not in arena:
                arena.add_position(position, self._game.owner(position.state), self._classify(position, saturate))
                queue.append(position)
            return position

        for root in roots:
            visit(root)
        while queue:
            position = queue.popleft()
            if arena.kind(position) != NodeKind.INNER:
                continue
            _, successors = game_moves(self._game, position)
            for successor in successors:
                arena.add_move(position, visit(successor))

        logger.debug("explored %d positions (saturate=%s)", len(arena), saturate)
        return arena

    def _safe_region(self) -> set[GamePosition]:
        if self._safe is None:
            self._saturated = self._explore(self._roots, saturate=True)
            losing = self._saturated.nodes_of_kind(NodeKind.BANKRUPT) + self._saturated.nodes_of_kind(
                NodeKind.FRONTIER
            )
            danger = self._saturated.attractor(Player.P0, losing)
            self._safe = {
                node
                for node in self._saturated.graph.nodes
                if node not in danger and self._saturated.kind(node) == NodeKind.INNER
            }
        return self._safe

    def outcome(self, position: GamePosition) -> Outcome:
        if position in self._win0:
            return Outcome.WIN0
        if self._clamp(position) in self._safe_region():
            return Outcome.WIN1
        return Outcome.UNKNOWN

    def verdict(self, position: GamePosition, *, with_strategy: bool = True) -> Verdict:
        """
        Returns the verdict for one of the roots.

        Args:
            position (GamePosition): A root given at construction.
            with_strategy (bool): Whether to attach the winner's strategy on the positions
                reachable under it.

        Returns:
            Verdict: Win0 with a bankruptcy-forcing strategy, Win1 with a safe strategy, or Unknown.
        """
        outcome = self.outcome(position)
        strategy = None
        rounds = None
        if outcome is Outcome.WIN0:
            rounds = self._win0[position]
            if with_strategy:
                full = self._exact.attractor_strategy(Player.P0, self._win0)
                reachable = self._exact.reachable([position], full, Player.P0)
                strategy = {node: move for node, move in full.items() if node in reachable}
        elif outcome is Outcome.WIN1 and with_strategy:
            full = self._saturated.safe_strategy(Player.P1, self._safe)
            reachable = self._saturated.reachable([self._clamp(position)], full, Player.P1)
            strategy = {node: move for node, move in full.items() if node in reachable}
        return Verdict(
            outcome=outcome,
            bounds=self._bounds,
            positions_explored=self.positions_explored,
            strategy=strategy,
            rounds=rounds,
        )


def solve_energy_bounded(
    game: EnergyGame,
    init_pos: GamePosition,
    bounds: Bounds,
    *,
    settings: SolverSettings | None = None,
) -> Verdict:
    """
    Solves an energy game from one initial position.

    Args:
        game (EnergyGame): A valid pushdown or one-counter energy game.
        init_pos (GamePosition): Initial position with non-negative energy.
        bounds (Bounds): Truncation parameters.
        settings (SolverSettings | None): Solver defaults.

    Returns:
        Verdict: The three-valued verdict, sound for the unbounded game.

    Raises:
        InvalidModelError: If the game has violations.
        CapacityExceededError: If an arena exceeds the position budget.
    """
    return EnergyArenaSolver(game, [init_pos], bounds, settings=settings).verdict(init_pos)


def initial_position(
    game: EnergyGame, state: str, payload: tuple[str, ...] | int, credit: int
) -> GamePosition:
    """Position with the given state, stack or counter, and ``credit`` in every energy coordinate."""
    energy = (credit,) * game.dimension
    if isinstance(game, OneCounterEnergyGame):
        return OcegConf(state, int(payload), energy)
    return PegConf(state, tuple(payload), energy)


class CreditScan(BaseModel):
    """Verdicts of a scan over the initial credits ``0..energy_cap``."""

    model_config = ConfigDict(frozen=True)

    outcomes: tuple[Outcome, ...]
    minimal_win1_credit: int | None
    win0_credits: tuple[int, ...]
    conclusive: bool


def minimal_credit_bounded(
    game: EnergyGame,
    state: str,
    payload: tuple[str, ...] | int,
    bounds: Bounds,
    *,
    settings: SolverSettings | None = None,
) -> CreditScan:
    """
    Scans the initial credits ``0..bounds.energy_cap`` for the least one certified Win1.

    The scan is conclusive when a Win1 credit exists and every smaller credit is certified Win0.
    """
    positions = [initial_position(game, state, payload, credit) for credit in range(bounds.energy_cap + 1)]
    solver = EnergyArenaSolver(game, positions, bounds, settings=settings)
    outcomes = tuple(solver.outcome(position) for position in positions)
    win1 = [credit for credit, outcome in enumerate(outcomes) if outcome is Outcome.WIN1]
    minimal = win1[0] if win1 else None
    win0 = tuple(credit for credit, outcome in enumerate(outcomes) if outcome is Outcome.WIN0)
    conclusive = minimal is not None and all(
        outcome is Outcome.WIN0 for outcome in outcomes[:minimal]
    )
    return CreditScan(outcomes=outcomes, minimal_win1_credit=minimal, win0_credits=win0, conclusive=conclusive)


def check_upward_closure(
    game: EnergyGame,
    state: str,
    payload: tuple[str, ...] | int,
    bounds: Bounds,
    *,
    settings: SolverSettings | None = None,
) -> list[tuple[int, int]]:
    """
    Returns every pair ``(e, e2)`` with ``e <= e2`` where credit ``e`` is Win1 but ``e2`` is Win0.

    An empty list means the verdicts are upward closed in the credit.
    """
    scan = minimal_credit_bounded(game, state, payload, bounds, settings=settings)
    return [
        (low, high)
        for low, outcome in enumerate(scan.outcomes)
        if outcome is Outcome.WIN1
        for high in scan.win0_credits
        if high >= low
    ]
