"""Seeded random instances for the batch harness and the property tests."""

from __future__ import annotations
import random

from energy_games.models import (
    Oca,
    OcaTransition,
    OcegTransition,
    OneCounterEnergyGame,
    PegTransition,
    PushdownEnergyGame,
    Vass,
    VassTransition,
    complete_with_self_loops,
)

ACTIONS = ("a", "b")


def random_ocn(rng: random.Random, max_states: int = 3, max_rules: int = 5, prefix: str = "s") -> Oca:
    return random_oca(rng, max_states, max_rules, prefix, zero_tests=False)


def random_oca(
    rng: random.Random,
    max_states: int = 3,
    max_rules: int = 5,
    prefix: str = "s",
    zero_tests: bool = True,
) -> Oca:
    states = tuple(f"{prefix}{index}" for index in range(rng.randint(1, max_states)))
    plus = tuple(
        OcaTransition(
            id=f"{prefix}t{index}",
            source=rng.choice(states),
            action=rng.choice(ACTIONS),
            delta=rng.choice((-1, 0, 1)),
            target=rng.choice(states),
        )
        for index in range(rng.randint(1, max_rules))
    )
    zero: tuple[OcaTransition, ...] = ()
    if zero_tests:
        zero = tuple(
            OcaTransition(
                id=f"{prefix}z{index}",
                source=rng.choice(states),
                action=rng.choice(ACTIONS),
                delta=rng.choice((0, 1)),
                target=rng.choice(states),
            )
            for index in range(rng.randint(0, 2))
        )
    return Oca(states=states, actions=ACTIONS, delta_plus=plus, delta_zero=zero, is_net=not zero_tests)


def random_vass(
    rng: random.Random, dimension: int = 1, max_states: int = 3, max_rules: int = 5, prefix: str = "v"
) -> Vass:
    states = tuple(f"{prefix}{index}" for index in range(rng.randint(1, max_states)))
    return Vass(
        dimension=dimension,
        states=states,
        actions=ACTIONS,
        transitions=tuple(
            VassTransition(
                id=f"{prefix}t{index}",
                source=rng.choice(states),
                action=rng.choice(ACTIONS),
                target=rng.choice(states),
                effect=tuple(rng.choice((-1, 0, 1)) for _ in range(dimension)),
            )
            for index in range(rng.randint(1, max_rules))
        ),
    )


def random_oceg(rng: random.Random, max_states_per_player: int = 2, max_rules: int = 6) -> OneCounterEnergyGame:
    """Random one-dimensional one-counter energy game, completed to be deadlock-free."""
    states_p0 = tuple(f"x{index}" for index in range(rng.randint(1, max_states_per_player)))
    states_p1 = tuple(f"y{index}" for index in range(rng.randint(1, max_states_per_player)))
    states = states_p0 + states_p1

    def rule(identifier: str, deltas: tuple[int, ...]) -> OcegTransition:
        return OcegTransition(
            id=identifier,
            source=rng.choice(states),
            counter_delta=rng.choice(deltas),
            target=rng.choice(states),
            effect=(rng.choice((-1, 0, 1)),),
        )

    game = OneCounterEnergyGame(
        states_p0=states_p0,
        states_p1=states_p1,
        dimension=1,
        delta_plus=tuple(rule(f"g{index}", (-1, 0, 1)) for index in range(rng.randint(1, max_rules))),
        delta_zero=tuple(rule(f"gz{index}", (0, 1)) for index in range(rng.randint(0, 2))),
    )
    return complete_with_self_loops(game)


def random_peg(rng: random.Random, max_states_per_player: int = 2, max_rules: int = 6) -> PushdownEnergyGame:
    """Random one-dimensional pushdown energy game over ``{A, bot}``, completed to be deadlock-free."""
    states_p0 = tuple(f"x{index}" for index in range(rng.randint(1, max_states_per_player)))
    states_p1 = tuple(f"y{index}" for index in range(rng.randint(1, max_states_per_player)))
    states = states_p0 + states_p1
    transitions = []
    for index in range(rng.randint(1, max_rules)):
        top = rng.choice(("A", "bot"))
        push = rng.choice(((), ("A",), ("A", "A"))) if top == "A" else rng.choice((("bot",), ("A", "bot")))
        transitions.append(
            PegTransition(
                id=f"g{index}",
                source=rng.choice(states),
                top=top,
                target=rng.choice(states),
                push=push,
                effect=(rng.choice((-1, 0, 1)),),
            )
        )
    game = PushdownEnergyGame(
        states_p0=states_p0,
        states_p1=states_p1,
        stack_alphabet=("A", "bot"),
        dimension=1,
        transitions=tuple(transitions),
    )
    return complete_with_self_loops(game)
