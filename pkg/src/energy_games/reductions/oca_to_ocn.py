"""Replaces Spoiler's one-counter automaton by a one-counter net, given the periodic colour pattern.

Both nets track the state pair and the residue of Spoiler's counter modulo ``K`` in their
control states. One source round becomes two rounds: Spoiler announces a source transition and
Duplicator answers with a transition of the same action, then Spoiler replays Duplicator's
transition and Duplicator confirms it (any other replay sends Duplicator to a universal
state). Zero tests of Spoiler are dropped. In their place Spoiler gets ``$`` moves that
Duplicator can only answer by decrementing: a loop on pairs whose line is black, and a chain
of ``W`` moves below the least white Duplicator counter at level ``l``.
"""

from __future__ import annotations
import logging

from energy_games.models import InvalidModelError, Oca, OcaTransition, Violation, validate
from energy_games.reductions.output import Clause, PositionMap, ReductionOutput, pair_state
from energy_games.reductions.params import OcaToOcnParams
from energy_games.reductions.reductions_exceptions import InconsistentParamsError

logger = logging.getLogger(__name__)

DOLLAR = "$"
UNIVERSAL = "universal"


def source_action(transition_id: str) -> str:
    return f"A:{transition_id}"


def target_action(transition_id: str) -> str:
    return f"A':{transition_id}"


def spoil_state(transition_id: str, right: str, residue: int) -> str:
    return f"spoil({transition_id},{right},{residue})"


def dup_state(transition_id: str, answer_id: str, residue: int) -> str:
    return f"dup({transition_id},{answer_id},{residue})"


def chain_state(left: str, right: str, remaining: int) -> str:
    return f"chain({left},{right},{remaining})"


class _Net:
    def __init__(self, prefix: str, provenance: dict[str, Clause]):
        self._prefix = prefix
        self._provenance = provenance
        self.states: dict[str, None] = {}
        self.rules: list[OcaTransition] = []

    def add(self, clause: Clause, source: str, action: str, delta: int, target: str) -> None:
        identifier = f"{self._prefix}{len(self.rules)}"
        self._provenance[identifier] = clause
        self.states.setdefault(source)
        self.states.setdefault(target)
        self.rules.append(OcaTransition(id=identifier, source=source, action=action, delta=delta, target=target))


def oca_ocn_to_ocn_ocn(a: Oca, a_prime: Oca, params: OcaToOcnParams) -> ReductionOutput:
    """
    Builds the nets ``B`` (Spoiler) and ``B'`` (Duplicator).

    For every state pair and every Spoiler counter ``m``, ``p(m+l)`` is simulated by ``p'm'`` iff
    ``(pair(p,p',m mod K), m)`` is simulated by ``(pair(p,p',m mod K), m')``.

    Args:
        a (Oca): Spoiler's automaton; its zero rules are not used.
        a_prime (Oca): Duplicator's net.
        params (OcaToOcnParams): Level, period and colour pattern of the pair.

    Returns:
        ReductionOutput: ``B`` on the left, ``B'`` on the right, with the residue map.

    Raises:
        InvalidModelError: If a machine has violations or ``a_prime`` has zero rules.
        InconsistentParamsError: If the parameters miss a pair or contradict themselves.
    """
    violations = validate(a) + validate(a_prime)
    if a_prime.delta_zero:
        violations.append(Violation(code="NotANet", element="a_prime", detail="Duplicator must be a net"))
    if violations:
        raise InvalidModelError(violations)
    issues = params.consistency_issues(a.states, a_prime.states)
    if issues:
        raise InconsistentParamsError(issues)

    k = params.k
    provenance: dict[str, Clause] = {}
    spoiler, duplicator = _Net("B", provenance), _Net("B'", provenance)
    for p in a.states:
        for p_prime in a_prime.states:
            for residue in range(k):
                spoiler.states.setdefault(pair_state(p, p_prime, residue))
                duplicator.states.setdefault(pair_state(p, p_prime, residue))

    for p_prime in a_prime.states:
        for residue in range(k):
            for t in a.delta_plus:
                source = pair_state(t.source, p_prime, residue)
                moved = (residue + t.delta) % k
                answers = [r for r in a_prime.plus_from(p_prime) if r.action == t.action]
                spoiler.add(Clause.SPOILER_ANNOUNCE, source, source_action(t.id), t.delta, spoil_state(t.id, p_prime, moved))
                for r in answers:
                    spoiler.add(
                        Clause.SPOILER_MIMIC,
                        spoil_state(t.id, p_prime, moved),
                        target_action(r.id),
                        0,
                        pair_state(t.target, r.target, moved),
                    )
                    duplicator.add(Clause.DUPLICATOR_ANSWER, source, source_action(t.id), r.delta, dup_state(t.id, r.id, moved))
                    duplicator.add(
                        Clause.DUPLICATOR_COMMIT,
                        dup_state(t.id, r.id, moved),
                        target_action(r.id),
                        0,
                        pair_state(t.target, r.target, moved),
                    )
                    for other in a_prime.delta_plus:
                        if other.id != r.id:
                            duplicator.add(
                                Clause.DUPLICATOR_ESCAPE, dup_state(t.id, r.id, moved), target_action(other.id), 0, UNIVERSAL
                            )

    for p in a.states:
        for p_prime in a_prime.states:
            for residue in range(k):
                state = pair_state(p, p_prime, residue)
                duplicator.add(Clause.DOLLAR_DRAIN, state, DOLLAR, -1, state)
                if params.black_line(p, p_prime, residue):
                    spoiler.add(Clause.BLACK_LOOP, state, DOLLAR, 0, state)
            w = params.w_at_l(p, p_prime)
            if w is not None and w > 0:
                spoiler.add(Clause.CHAIN, pair_state(p, p_prime, 0), DOLLAR, 0, chain_state(p, p_prime, w - 1))
                for remaining in range(w - 1, 0, -1):
                    spoiler.add(Clause.CHAIN, chain_state(p, p_prime, remaining), DOLLAR, 0, chain_state(p, p_prime, remaining - 1))

    actions = tuple(source_action(t.id) for t in a.delta_plus) + tuple(
        target_action(r.id) for r in a_prime.delta_plus
    ) + (DOLLAR,)
    duplicator.states.setdefault(UNIVERSAL)
    for action in actions:
        duplicator.add(Clause.UNIVERSAL, UNIVERSAL, action, 0, UNIVERSAL)

    b = Oca(states=tuple(spoiler.states), actions=actions, delta_plus=tuple(spoiler.rules), is_net=True)
    b_prime = Oca(states=tuple(duplicator.states), actions=actions, delta_plus=tuple(duplicator.rules), is_net=True)
    logger.info("constructed nets with %d and %d states for l=%d, K=%d", len(b.states), len(b_prime.states), params.l, k)
    return ReductionOutput(
        left=b,
        right=b_prime,
        position_map=PositionMap(kind="residue", offset=params.l, period=k),
        provenance=provenance,
        entry_states=tuple(pair_state(p, p_prime, residue) for p in a.states for p_prime in a_prime.states for residue in range(k)),
    )
