from __future__ import annotations
from typing import Iterator, Literal
import logging

from pydantic import BaseModel, ConfigDict

from energy_games.models import InvalidModelError, Oca, OcaConf, Violation, steps, validate
from energy_games.semilinear.semilinear_exceptions import InvalidUPCError, UnknownPairError
from energy_games.semilinear.upc import UltimatelyPeriodicColoring

logger = logging.getLogger(__name__)

Point = tuple[str, int, str, int]

CLOSURE_VIOLATED = "ClosureViolated"
REQUIRED_PAIR_NOT_INCLUDED = "RequiredPairNotIncluded"


class Accepted(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["accepted"] = "accepted"


class Rejected(BaseModel):
    """Witness of a failed check: the White point and, for closure failures, its unmatched Spoiler step."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["rejected"] = "rejected"
    point: Point
    reason: Literal["ClosureViolated", "RequiredPairNotIncluded"]
    step: str | None = None


def closure_window(u: UltimatelyPeriodicColoring) -> tuple[int, int]:
    """Largest Spoiler and Duplicator counters the closure check visits."""
    return u.threshold + 2 * u.period, u.threshold_prime + 2 * u.period_prime + 3 * u.slope


def window_points(u: UltimatelyPeriodicColoring) -> Iterator[Point]:
    m_limit, m_prime_limit = closure_window(u)
    for left in u.left_states:
        for right in u.right_states:
            for m in range(m_limit + 1):
                for m_prime in range(m_prime_limit + 1):
                    yield left, m, right, m_prime


def unmatched_step(a: Oca, a_prime: Oca, u: UltimatelyPeriodicColoring, point: Point) -> str | None:
    """First Spoiler step from a point that no Duplicator step answers inside the White region."""
    left, m, right, m_prime = point
    answers = steps(a_prime, OcaConf(right, m_prime))
    for action, target in steps(a, OcaConf(left, m)):
        if not any(
            answer == action and u.is_white(target.state, response.state, target.counter, response.counter)
            for answer, response in answers
        ):
            return f"{action} -> {target}"
    return None


def _check_inputs(a: Oca, a_prime: Oca, u: UltimatelyPeriodicColoring) -> None:
    violations = validate(a) + validate(a_prime)
    if a_prime.delta_zero:
        violations.append(Violation(code="NotANet", element="a_prime", detail="Duplicator must be a net"))
    if violations:
        raise InvalidModelError(violations)
    problems = u.problems()
    if problems:
        raise InvalidUPCError(problems)
    for left in a.states:
        for right in a_prime.states:
            if (left not in u.left_states) or (right not in u.right_states):
                raise UnknownPairError(left, right)


def check_simulation_candidate(
    a: Oca,
    a_prime: Oca,
    u: UltimatelyPeriodicColoring,
    must_contain: list[Point] | None = None,
) -> Accepted | Rejected:
    """
    Checks that the White points of a colouring form a simulation containing the given points.

    Closure is verified on ``[0, M+2P] x [0, M'+2P'+3D]`` per pair. Every point beyond that
    window has a representative inside it with the same Spoiler steps and a smaller Duplicator
    counter whose White answers lift back, so the window decides closure everywhere.

    Args:
        a (Oca): Spoiler's automaton.
        a_prime (Oca): Duplicator's net.
        u (UltimatelyPeriodicColoring): The candidate.
        must_contain (list | None): Points ``(p, m, p', m')`` that have to be White.

    Returns:
        Accepted | Rejected: Rejected carries the first failing point in window order.

    Raises:
        InvalidModelError: If a machine has violations or Duplicator's machine has zero tests.
        InvalidUPCError: If the colouring is malformed.
        UnknownPairError: If a state pair of the machines, or of ``must_contain``, is not declared.
    """
    _check_inputs(a, a_prime, u)
    for point in must_contain or []:
        left, m, right, m_prime = point
        if not u.is_white(left, right, m, m_prime):
            return Rejected(point=point, reason=REQUIRED_PAIR_NOT_INCLUDED)
    checked = 0
    for point in window_points(u):
        left, m, right, m_prime = point
        if not u.is_white(left, right, m, m_prime):
            continue
        checked += 1
        step = unmatched_step(a, a_prime, u, point)
        if step is not None:
            logger.debug("closure fails at %s after %d points", point, checked)
            return Rejected(point=point, reason=CLOSURE_VIOLATED, step=step)
    logger.debug("closure holds on %d white points", checked)
    return Accepted()
