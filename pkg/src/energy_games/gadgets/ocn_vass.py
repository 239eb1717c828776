"""Compiles a Minsky machine into a one-counter net and a two-dimensional VASS.

The VASS keeps the two machine counters and the net keeps their sum. Duplicator picks the
branch of every test and Spoiler may challenge a zero claim, which turns the rest of the play
into a race between the net counter and the other machine counter. Spoiler wins iff the
machine halts.
"""

from __future__ import annotations
import logging

from energy_games.gadgets.output import ExpectedRelation, GadgetOutput, Role
from energy_games.models import (
    IncRule,
    InvalidModelError,
    Mcm,
    Oca,
    OcaTransition,
    Vass,
    VassTransition,
    validate,
)

logger = logging.getLogger(__name__)

ACTIONS = ("a", "z", "nz", "c", "h")
UNIVERSAL = "U"


def hat_state(state: str) -> str:
    return f"{state}^"


def zero_claim_state(state: str) -> str:
    return f"{state}=0"


def positive_claim_state(state: str) -> str:
    return f"{state}>0"


def check_state(counter: int) -> str:
    return f"check(c{counter})"


def unit(counter: int, sign: int = 1) -> tuple[int, int]:
    return (sign, 0) if counter == 1 else (0, sign)


def mcm_to_ocn_vs_vass(m: Mcm) -> GadgetOutput:
    """
    Builds the net and the VASS whose initial pair is simulated iff the machine runs forever.

    Args:
        m (Mcm): A valid deterministic Minsky machine.

    Returns:
        GadgetOutput: Spoiler's net and Duplicator's VASS; ``(init, 0)`` is not simulated by
        ``(init, (0, 0))`` iff ``m`` halts.

    Raises:
        InvalidModelError: If the machine has violations.
    """
    violations = validate(m)
    if violations:
        raise InvalidModelError(violations)

    spoiler: list[OcaTransition] = []
    duplicator: list[VassTransition] = []
    provenance: dict[str, Role] = {}

    def left(role: Role, source: str, action: str, delta: int, target: str) -> None:
        identifier = f"A{len(spoiler)}"
        provenance[identifier] = role
        spoiler.append(OcaTransition(id=identifier, source=source, action=action, delta=delta, target=target))

    def right(role: Role, source: str, action: str, target: str, effect: tuple[int, int] = (0, 0)) -> None:
        identifier = f"V{len(duplicator)}"
        provenance[identifier] = role
        duplicator.append(VassTransition(id=identifier, source=source, action=action, target=target, effect=effect))

    tests: list[str] = []
    for rule in m.rules:
        if isinstance(rule, IncRule):
            left(Role.INCREMENT, rule.state, "a", 1, rule.target)
            right(Role.INCREMENT, rule.state, "a", rule.target, unit(rule.counter))
            continue
        tests.append(rule.state)
        q, zero, positive = rule.state, zero_claim_state(rule.state), positive_claim_state(rule.state)
        left(Role.TEST, q, "a", 0, hat_state(q))
        right(Role.TEST, q, "a", zero)
        right(Role.TEST, q, "a", positive, unit(rule.counter, -1))
        left(Role.ACCEPT_POSITIVE, hat_state(q), "nz", -1, rule.if_positive)
        right(Role.ACCEPT_POSITIVE, positive, "nz", rule.if_positive)
        left(Role.ACCEPT_ZERO, hat_state(q), "z", 0, rule.if_zero)
        right(Role.ACCEPT_ZERO, zero, "z", rule.if_zero)
        right(Role.SPURIOUS, positive, "z", UNIVERSAL)
        right(Role.SPURIOUS, zero, "nz", UNIVERSAL)
        left(Role.CHALLENGE, hat_state(q), "c", 0, check_state(rule.counter))
        right(Role.CHALLENGE, zero, "c", check_state(rule.counter))
        right(Role.SPURIOUS, positive, "c", UNIVERSAL)

    # A challenge of counter 1 races the net counter against counter 2, and vice versa.
    for counter in (1, 2):
        left(Role.EVALUATE, check_state(counter), "c", -1, check_state(counter))
        right(Role.EVALUATE, check_state(counter), "c", check_state(counter), unit(3 - counter, -1))
    for action in ACTIONS:
        right(Role.UNIVERSAL, UNIVERSAL, action, UNIVERSAL)
    left(Role.HALT, m.halt_state, "h", 0, m.halt_state)

    checks = (check_state(1), check_state(2))
    net = Oca(
        states=(*m.states, *(hat_state(q) for q in tests), *checks),
        actions=ACTIONS,
        delta_plus=tuple(spoiler),
        is_net=True,
    )
    vass = Vass(
        dimension=2,
        states=(
            *m.states,
            *(zero_claim_state(q) for q in tests),
            *(positive_claim_state(q) for q in tests),
            UNIVERSAL,
            *checks,
        ),
        actions=ACTIONS,
        transitions=tuple(duplicator),
    )
    logger.info(
        "machine with %d states compiled to a net with %d rules and a VASS with %d rules",
        len(m.states),
        len(spoiler),
        len(duplicator),
    )
    return GadgetOutput(
        construction="ocn-vass",
        expected_relation=ExpectedRelation.HALTS_IFF_NOT_SIMULATES,
        initial_state=m.init_state,
        spoiler=net,
        duplicator=vass,
        provenance=provenance,
    )
