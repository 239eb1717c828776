from __future__ import annotations
from collections import deque
from enum import StrEnum
from typing import Any, Hashable, Iterable
import logging

import matplotlib.pyplot as plt
import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from energy_games.models import Player
from energy_games.solvers.solvers_exceptions import CapacityExceededError

logger = logging.getLogger(__name__)


class NodeKind(StrEnum):
    INNER = "inner"
    FRONTIER = "frontier"
    BANKRUPT = "bankrupt"


class ArenaSettings(BaseModel):
    position_budget: int = Field(ge=1)
    name: str = "arena"

    model_config = ConfigDict(frozen=True)


class Arena:
    """
    Explicit finite two-player arena explored from a set of roots.

    The arena is stored as a networkx DiGraph. Every node carries an ``owner`` attribute
    (the player choosing the next move) and a ``kind`` attribute: inner nodes are expanded,
    frontier nodes lie beyond the exploration caps and bankrupt nodes are terminal losses
    for Player 1 in energy games.

    Features:
        - Layered attractor computation with ranks, optionally cut at a maximal rank
        - Strategy extraction with lowest-index tie-breaking
        - Budget check on the number of explored positions
        - Drawing of small arenas with matplotlib
    """

    def __init__(self, *, position_budget: int, name: str = "arena"):
        """
        Initializes an empty arena.

        Args:
            position_budget (int): Maximum number of nodes.
            name (str): Name used in log messages.
        """
        self._settings = ArenaSettings(position_budget=position_budget, name=name)
        self._graph = nx.DiGraph()

    @property
    def graph(self) -> nx.DiGraph:
        return self._graph

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __contains__(self, node: Hashable) -> bool:
        return node in self._graph

    def add_position(self, node: Hashable, owner: Player, kind: NodeKind = NodeKind.INNER) -> None:
        """
        Adds a node to the arena.

        Raises:
            CapacityExceededError: If the arena would grow beyond the position budget.
        """
        if len(self) >= self._settings.position_budget:
            raise CapacityExceededError(len(self) + 1, self._settings.position_budget)
        self._graph.add_node(node, owner=owner, kind=kind)

    def add_move(self, source: Hashable, target: Hashable) -> None:
        self._graph.add_edge(source, target)

    def owner(self, node: Hashable) -> Player:
        return self._graph.nodes[node]["owner"]

    def kind(self, node: Hashable) -> NodeKind:
        return self._graph.nodes[node]["kind"]

    def successors(self, node: Hashable) -> Iterable[Hashable]:
        return self._graph.successors(node)

    def nodes_of_kind(self, kind: NodeKind) -> list[Hashable]:
        return [node for node, node_kind in self._graph.nodes(data="kind") if node_kind == kind]

    def attractor(
        self,
        player: Player,
        targets: Iterable[Hashable],
        *,
        max_rank: int | None = None,
    ) -> dict[Hashable, int]:
        """
        Computes the nodes from which ``player`` can force a visit to ``targets``.

        Inner nodes of the opponent without successors belong to the attractor with rank 0,
        since the owner of a stuck position loses. Frontier and bankrupt nodes are reached
        only when they are targets.

        Args:
            player (Player): The attracting player.
            targets (Iterable[Hashable]): Nodes already won by ``player``.
            max_rank (int | None): If given, nodes whose rank would exceed it are left out.

        Returns:
            dict[Hashable, int]: Rank of every attracted node, the number of moves ``player``
                needs to force the visit.
        """
        logger.info("++ attractor %s for %s", self._settings.name, player.value)
        graph = self._graph
        rank: dict[Hashable, int] = {node: 0 for node in targets}
        for node, data in graph.nodes(data=True):
            if (
                node not in rank
                and data["kind"] == NodeKind.INNER
                and data["owner"] != player
                and graph.out_degree(node) == 0
            ):
                rank[node] = 0

        pending: dict[Hashable, int] = {}
        queue = deque(rank)
        while queue:
            node = queue.popleft()
            node_rank = rank[node]
            if max_rank is not None and node_rank >= max_rank:
                continue
            for predecessor in graph.predecessors(node):
                if predecessor in rank:
                    continue
                data = graph.nodes[predecessor]
                if data["kind"] != NodeKind.INNER:
                    continue
                if data["owner"] == player:
                    rank[predecessor] = node_rank + 1
                    queue.append(predecessor)
                    continue
                left = pending.get(predecessor, graph.out_degree(predecessor)) - 1
                pending[predecessor] = left
                if left == 0:
                    rank[predecessor] = node_rank + 1
                    queue.append(predecessor)

        logger.debug("%d opponent nodes left partially attracted", sum(1 for node in pending if node not in rank))
        logger.info("-- attractor %s: %d of %d nodes", self._settings.name, len(rank), len(self))
        return rank

    def attractor_strategy(self, player: Player, rank: dict[Hashable, int]) -> dict[Hashable, Hashable]:
        """
        Picks, for every attracted inner node of ``player``, the first successor with a lower rank.
        """
        strategy: dict[Hashable, Hashable] = {}
        for node, node_rank in rank.items():
            if node_rank == 0 or self.owner(node) != player or self.kind(node) != NodeKind.INNER:
                continue
            for successor in self._graph.successors(node):
                if rank.get(successor, node_rank) < node_rank:
                    strategy[node] = successor
                    break
        return strategy

    def safe_strategy(self, player: Player, safe: set[Hashable]) -> dict[Hashable, Hashable]:
        """
        Picks, for every safe inner node of ``player``, the first successor that stays safe.
        """
        strategy: dict[Hashable, Hashable] = {}
        for node in safe:
            if self.owner(node) != player or self.kind(node) != NodeKind.INNER:
                continue
            for successor in self._graph.successors(node):
                if successor in safe:
                    strategy[node] = successor
                    break
        return strategy

    def reachable(self, roots: Iterable[Hashable], strategy: dict[Hashable, Hashable], player: Player) -> set[Hashable]:
        """Nodes reachable from ``roots`` when ``player`` follows ``strategy``."""
        seen: set[Hashable] = set()
        stack = [root for root in roots if root in self._graph]
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            if self.owner(node) == player and node in strategy:
                stack.append(strategy[node])
            elif self.owner(node) != player:
                stack.extend(self._graph.successors(node))
        return seen

    def draw(self, *, labels: dict[Hashable, Any] | None = None, path: str | None = None) -> None:
        """
        Draws the arena. Player 0 nodes are squares, Player 1 nodes are circles,
        frontier nodes are grey and bankrupt nodes are red.

        Args:
            labels (dict | None): Optional node labels, ``str(node)`` by default.
            path (str | None): If given the drawing is saved there instead of shown.
        """
        colors = {NodeKind.INNER: "skyblue", NodeKind.FRONTIER: "lightgrey", NodeKind.BANKRUPT: "salmon"}
        layout = nx.spring_layout(self._graph, seed=0)
        labels = labels or {node: str(node) for node in self._graph.nodes}
        figure = plt.figure()
        for player, shape in ((Player.P0, "s"), (Player.P1, "o")):
            nodes = [node for node in self._graph.nodes if self.owner(node) == player]
            nx.draw_networkx_nodes(
                self._graph,
                layout,
                nodelist=nodes,
                node_shape=shape,
                node_color=[colors[self.kind(node)] for node in nodes],
                node_size=900,
            )
        nx.draw_networkx_edges(self._graph, layout, arrows=True)
        nx.draw_networkx_labels(self._graph, layout, labels=labels, font_size=7)
        if path is None:
            plt.show()
        else:
            figure.savefig(path)
        plt.close(figure)
