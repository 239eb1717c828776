import matplotlib

matplotlib.use("Agg")

from energy_games.models import Player
from energy_games.solvers import Arena, CapacityExceededError, NodeKind
import pytest


def build_arena() -> Arena:
    # Arena initialization: p0 -> {x, y}, x -> bad, y -> y
    arena = Arena(position_budget=10)
    arena.add_position("p0", Player.P0)
    arena.add_position("x", Player.P1)
    arena.add_position("y", Player.P1)
    arena.add_position("bad", Player.P1, NodeKind.BANKRUPT)
    arena.add_move("p0", "x")
    arena.add_move("p0", "y")
    arena.add_move("x", "bad")
    arena.add_move("y", "y")
    return arena


def test_attractor_ranks():
    """Tests the layered attractor and the strategy picked from it."""
    arena = build_arena()

    rank = arena.attractor(Player.P0, ["bad"])

    assert rank == {"bad": 0, "x": 1, "p0": 2}
    assert arena.attractor_strategy(Player.P0, rank) == {"p0": "x"}


def test_attractor_rank_limit():
    """Tests that nodes beyond the maximal rank are left out."""
    arena = build_arena()

    assert arena.attractor(Player.P0, ["bad"], max_rank=1) == {"bad": 0, "x": 1}


def test_stuck_opponent_is_attracted():
    """Tests that a node whose owner cannot move is lost by its owner."""
    arena = Arena(position_budget=10)
    arena.add_position("p", Player.P0)
    arena.add_position("stuck", Player.P1)
    arena.add_position("idle", Player.P0)
    arena.add_move("p", "stuck")

    assert arena.attractor(Player.P0, []) == {"stuck": 0, "p": 1}


def test_safe_strategy():
    """Tests that the opponent keeps to the safe region."""
    arena = build_arena()

    assert arena.safe_strategy(Player.P1, {"y"}) == {"y": "y"}


def test_budget():
    """Tests that the arena refuses to grow beyond its budget."""
    arena = Arena(position_budget=1)
    arena.add_position("a", Player.P0)

    with pytest.raises(CapacityExceededError):
        arena.add_position("b", Player.P0)


def test_draw_to_file(tmp_path):
    """Tests that a small arena can be drawn to an image file."""
    arena = build_arena()
    path = tmp_path / "arena.png"

    arena.draw(path=str(path))

    assert path.exists()
