"""Compiles a Minsky machine into a one-dimensional pushdown energy game won by Player 0 iff the machine halts.

Player 1 writes the run onto the stack one transition record at a time, earning one unit of
energy per record. After every record Player 0 accepts it or audits it: an audit pops the whole
history with weights that leave the energy below its value at the start of the run exactly when
the audited step was a cheat, then restarts the machine on the bottom symbol.
"""

from __future__ import annotations
import logging

from energy_games.gadgets.output import AuditKind, ExpectedRelation, GadgetOutput, Record, Role
from energy_games.models import InvalidModelError, Mcm, PegTransition, PushdownEnergyGame, ZeroTestRule, validate

logger = logging.getLogger(__name__)

BOTTOM = "bot"


def records_of(m: Mcm) -> tuple[Record, ...]:
    """One record per edge of the transition graph, in rule order; a test has two edges."""
    records: list[Record] = []
    for rule in m.rules:
        if isinstance(rule, ZeroTestRule):
            records.append(
                Record(
                    symbol=f"pos({rule.state})",
                    source=rule.state,
                    target=rule.if_positive,
                    counter=rule.counter,
                    change="dec",
                )
            )
            records.append(
                Record(
                    symbol=f"zero({rule.state})",
                    source=rule.state,
                    target=rule.if_zero,
                    counter=rule.counter,
                    change="zero",
                )
            )
        else:
            records.append(
                Record(
                    symbol=f"inc({rule.state})",
                    source=rule.state,
                    target=rule.target,
                    counter=rule.counter,
                    change="inc",
                )
            )
    return tuple(records)


def accept_state(record: Record) -> str:
    return f"s[{record.symbol}]"


def audit_state(audit: AuditKind, counter: int) -> str:
    return f"audit-{audit}(c{counter})"


def drain_state(audit: AuditKind, counter: int) -> str:
    return f"{audit_state(audit, counter)}.drain"


def mcm_to_pushdown_energy(m: Mcm) -> GadgetOutput:
    """
    Builds the pushdown energy game of a Minsky machine.

    Player 1 owns the machine states and pushes records; Player 0 owns the intermediate states
    where records are accepted or audited, and the audit states. A pop costing two units goes
    through a drain state, since effects are limited to ``-1..1``.

    Args:
        m (Mcm): A valid deterministic Minsky machine.

    Returns:
        GadgetOutput: The game, its bottom symbol and the records; Player 0 wins from
        ``(init, [bot])`` with some credit iff with every credit iff ``m`` halts.

    Raises:
        InvalidModelError: If the machine has violations.
    """
    violations = validate(m)
    if violations:
        raise InvalidModelError(violations)

    records = records_of(m)
    alphabet = (BOTTOM, *(record.symbol for record in records))
    audits = [(audit, counter) for audit in AuditKind for counter in (1, 2)]
    transitions: list[PegTransition] = []
    provenance: dict[str, Role] = {}

    def add(role: Role, source: str, top: str, target: str, push: tuple[str, ...], effect: int) -> None:
        identifier = f"G{len(transitions)}"
        provenance[identifier] = role
        transitions.append(
            PegTransition(id=identifier, source=source, top=top, target=target, push=push, effect=(effect,))
        )

    for record in records:
        for top in alphabet:
            add(Role.PUSH, record.source, top, accept_state(record), (record.symbol, top), 1)
        for top in alphabet:
            add(Role.ACCEPT, accept_state(record), top, record.target, (top,), 0)
        if record.audit is not None:
            audit = audit_state(record.audit, record.counter)
            add(Role.ENTER_AUDIT, accept_state(record), record.symbol, audit, (record.symbol,), 0)
    for top in alphabet:
        add(Role.HALT_DRAIN, m.halt_state, top, m.halt_state, (top,), -1)

    for audit, counter in audits:
        state, drain = audit_state(audit, counter), drain_state(audit, counter)
        for record in records:
            cost = record.audit_cost(audit, counter)
            add(Role.POP, state, record.symbol, drain if cost == 2 else state, (), -min(cost, 1))
        add(Role.RETURN, state, BOTTOM, m.init_state, (BOTTOM,), 0)
        for top in alphabet:
            add(Role.DRAIN, drain, top, state, (top,), -1)

    game = PushdownEnergyGame(
        states_p0=(
            *(accept_state(record) for record in records),
            *(audit_state(audit, counter) for audit, counter in audits),
            *(drain_state(audit, counter) for audit, counter in audits),
        ),
        states_p1=m.states,
        stack_alphabet=alphabet,
        dimension=1,
        transitions=tuple(transitions),
    )
    logger.info("machine with %d states compiled to a pushdown game with %d rules", len(m.states), len(transitions))
    return GadgetOutput(
        construction="pushdown-energy",
        expected_relation=ExpectedRelation.HALTS_IFF_P0_WINS,
        initial_state=m.init_state,
        game=game,
        bottom=BOTTOM,
        records=records,
        provenance=provenance,
    )
