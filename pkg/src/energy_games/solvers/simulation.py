"""Bounded solver for simulation games between two labelled transition systems."""

from __future__ import annotations
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Sequence
import logging

from energy_games.models import (
    InvalidModelError,
    KindMismatchError,
    Lts,
    LtsConf,
    Oca,
    OcaConf,
    Pda,
    PdaConf,
    Player,
    Vass,
    VassConf,
    steps,
    structural_size,
    validate,
)
from energy_games.solvers.arena import Arena, NodeKind
from energy_games.solvers.settings import SolverSettings
from energy_games.solvers.verdict import Bounds, Outcome, Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SimPair:
    """Spoiler configuration on the left, Duplicator configuration on the right."""

    left: LtsConf
    right: LtsConf

    def __str__(self) -> str:
        return f"{self.left} <= {self.right}"


@dataclass(frozen=True, slots=True)
class SpoilerMove:
    """Duplicator's turn after Spoiler moved from ``pair.left`` with ``action`` to ``target``."""

    pair: SimPair
    action: str
    target: LtsConf

    def __str__(self) -> str:
        return f"{self.action} -> {self.target}"


_CONF_TYPES: dict[type, type] = {Pda: PdaConf, Oca: OcaConf, Vass: VassConf}


def _check_kind(machine: Lts, conf: LtsConf) -> None:
    expected = _CONF_TYPES.get(type(machine))
    if expected is None or not isinstance(conf, expected):
        raise KindMismatchError(getattr(machine, "kind", type(machine).__name__), conf)
    if isinstance(machine, Vass) and len(conf.vector) != machine.dimension:
        raise KindMismatchError(machine.kind, conf)


class SimulationGame:
    """
    Truncated simulation game explored from a set of pairs.

    Spoiler owns the pairs, Duplicator owns the intermediate ``SpoilerMove`` nodes. Pairs with
    a configuration above the counter cap are frontier leaves. Spoiler wins a pair when the
    rank-limited attractor reaches it within ``round_cap`` rounds; Duplicator wins the pairs
    from which Spoiler cannot even force a frontier leaf, and those pairs form a simulation
    of the unbounded systems.
    """

    def __init__(
        self,
        left: Lts,
        right: Lts,
        roots: Sequence[SimPair],
        bounds: Bounds,
        *,
        settings: SolverSettings | None = None,
    ):
        """
        Explores the arena and solves it.

        Args:
            left (Lts): Spoiler's system.
            right (Lts): Duplicator's system.
            roots (Sequence[SimPair]): The pairs of interest.
            bounds (Bounds): Truncation parameters.
            settings (SolverSettings | None): Solver defaults, read from the environment if None.

        Raises:
            InvalidModelError: If either system has violations.
            KindMismatchError: If a pair does not match the systems.
            CapacityExceededError: If the arena exceeds the position budget.
        """
        violations = validate(left) + validate(right)
        if violations:
            raise InvalidModelError(violations)
        for root in roots:
            _check_kind(left, root.left)
            _check_kind(right, root.right)
        self._left = left
        self._right = right
        self._bounds = bounds
        self._settings = settings or SolverSettings.from_environment()
        self._arena = self._explore(roots)
        self._win0 = self._arena.attractor(Player.P0, [], max_rank=2 * bounds.round_cap)
        danger = self._arena.attractor(Player.P0, self._arena.nodes_of_kind(NodeKind.FRONTIER))
        self._safe = {node for node in self._arena.graph.nodes if node not in danger}

    @property
    def arena(self) -> Arena:
        return self._arena

    @property
    def positions_explored(self) -> int:
        return len(self._arena)

    def _explore(self, roots: Sequence[SimPair]) -> Arena:
        arena = Arena(position_budget=self._settings.position_budget, name="simulation arena")
        cap = self._bounds.counter_cap
        queue: deque[SimPair] = deque()

        def visit(pair: SimPair) -> None:
            if pair in arena:
                return
            frontier = structural_size(pair.left) > cap or structural_size(pair.right) > cap
            arena.add_position(pair, Player.P0, NodeKind.FRONTIER if frontier else NodeKind.INNER)
            if not frontier:
                queue.append(pair)

        for root in roots:
            visit(root)
        while queue:
            pair = queue.popleft()
            responses: dict[str, list[LtsConf]] = {}
            for action, target in steps(self._right, pair.right):
                responses.setdefault(action, []).append(target)
            for action, target in steps(self._left, pair.left):
                move = SpoilerMove(pair, action, target)
                if move in arena:
                    continue
                arena.add_position(move, Player.P1)
                arena.add_move(pair, move)
                for response in responses.get(action, ()):
                    successor = SimPair(target, response)
                    visit(successor)
                    arena.add_move(move, successor)

        logger.debug("explored %d simulation positions", len(arena))
        return arena

    def outcome(self, pair: SimPair) -> Outcome:
        if pair in self._win0:
            return Outcome.WIN0
        if pair in self._safe:
            return Outcome.WIN1
        return Outcome.UNKNOWN

    def rounds(self, pair: SimPair) -> int | None:
        """Least number of rounds in which Spoiler wins, if at most ``round_cap``."""
        rank = self._win0.get(pair)
        return None if rank is None else (rank + 1) // 2

    def verdict(self, pair: SimPair, *, with_strategy: bool = True) -> Verdict:
        """
        Returns the verdict for one of the roots, with the winner's strategy on the pairs
        reachable under it when requested.
        """
        outcome = self.outcome(pair)
        strategy: dict[Hashable, Hashable] | None = None
        if with_strategy and outcome is Outcome.WIN0:
            full = self._arena.attractor_strategy(Player.P0, self._win0)
            reachable = self._arena.reachable([pair], full, Player.P0)
            strategy = {node: move for node, move in full.items() if node in reachable}
        elif with_strategy and outcome is Outcome.WIN1:
            full = self._arena.safe_strategy(Player.P1, self._safe)
            reachable = self._arena.reachable([pair], full, Player.P1)
            strategy = {node: move for node, move in full.items() if node in reachable}
        return Verdict(
            outcome=outcome,
            bounds=self._bounds,
            positions_explored=self.positions_explored,
            strategy=strategy,
            rounds=self.rounds(pair),
        )


def solve_simulation_bounded(
    left: Lts,
    right: Lts,
    pair: SimPair,
    bounds: Bounds,
    *,
    settings: SolverSettings | None = None,
) -> Verdict:
    """
    Decides, within the bounds, whether Duplicator's configuration simulates Spoiler's.

    Args:
        left (Lts): Spoiler's system.
        right (Lts): Duplicator's system.
        pair (SimPair): The pair to decide.
        bounds (Bounds): Truncation parameters.
        settings (SolverSettings | None): Solver defaults.

    Returns:
        Verdict: Win0 (non-simulation, sound absolutely), Win1 (simulation) or Unknown.
    """
    return SimulationGame(left, right, [pair], bounds, settings=settings).verdict(pair)


def simulation_approximants(
    left: Lts,
    right: Lts,
    pairs: Sequence[SimPair],
    bounds: Bounds,
    *,
    settings: SolverSettings | None = None,
) -> dict[SimPair, int | None]:
    """Least round index at which Spoiler wins each pair, ``None`` when not within ``round_cap``."""
    game = SimulationGame(left, right, pairs, bounds, settings=settings)
    return {pair: game.rounds(pair) for pair in pairs}


def replay_spoiler_strategy(left: Lts, right: Lts, pair: SimPair, verdict: Verdict, bounds: Bounds) -> bool:
    """
    Replays a Spoiler strategy against every Duplicator response.

    Only ``steps`` is used, so the check does not depend on the arena or the attractor.

    Returns:
        bool: True iff following the strategy wins within ``bounds.round_cap`` rounds.
    """
    strategy = verdict.strategy or {}
    memo: dict[tuple[SimPair, int], bool] = {}

    def wins(current: SimPair, rounds_left: int) -> bool:
        key = (current, rounds_left)
        if key in memo:
            return memo[key]
        result = False
        move = strategy.get(current)
        if rounds_left > 0 and isinstance(move, SpoilerMove):
            if (move.action, move.target) in steps(left, current.left):
                result = all(
                    wins(SimPair(move.target, response), rounds_left - 1)
                    for action, response in steps(right, current.right)
                    if action == move.action
                )
        memo[key] = result
        return result

    return wins(pair, bounds.round_cap)
