from __future__ import annotations

from energy_games.models.configurations import OcaConf, PdaConf, VassConf
from energy_games.models.machines import Oca, OcaTransition, Pda, PdaTransition, Vass, VassTransition
from energy_games.models.models_exceptions import KindMismatchError

BOTTOM = "bot"
UNIT = "one"


def vass_to_oca(vass: Vass) -> Oca:
    """Read a one-dimensional VASS as a one-counter net with the same ids."""
    if vass.dimension != 1:
        raise KindMismatchError("vass(1)", vass)
    return Oca(
        states=vass.states,
        actions=vass.actions,
        delta_plus=tuple(
            OcaTransition(id=t.id, source=t.source, action=t.action, delta=t.effect[0], target=t.target)
            for t in vass.transitions
        ),
        is_net=True,
        metadata=vass.metadata,
    )


def oca_to_vass(oca: Oca) -> Vass:
    """Read a one-counter net as a one-dimensional VASS."""
    if oca.delta_zero:
        raise KindMismatchError("ocn", oca)
    return Vass(
        dimension=1,
        states=oca.states,
        actions=oca.actions,
        transitions=tuple(
            VassTransition(id=t.id, source=t.source, action=t.action, target=t.target, effect=(t.delta,))
            for t in oca.delta_plus
        ),
        metadata=oca.metadata,
    )


def oca_conf_to_vass(conf: OcaConf) -> VassConf:
    return VassConf(conf.state, (conf.counter,))


def oca_as_pda(oca: Oca) -> Pda:
    """Encode a one-counter automaton as a pushdown automaton.

    The counter value ``m`` is the stack ``one^m bot``; zero rules read ``bot``.
    """
    transitions: list[PdaTransition] = []
    for t in oca.delta_plus:
        if t.delta >= 0:
            transitions.append(_pda_rule(t, BOTTOM, (UNIT,) * t.delta + (BOTTOM,)))
        transitions.append(_pda_rule(t, UNIT, (UNIT,) * (t.delta + 1)))
    for t in oca.delta_zero:
        transitions.append(_pda_rule(t, BOTTOM, (UNIT,) * t.delta + (BOTTOM,), suffix="zero"))
    return Pda(
        states=oca.states,
        stack_alphabet=(UNIT, BOTTOM),
        actions=oca.actions,
        transitions=tuple(transitions),
        metadata=oca.metadata,
    )


def _pda_rule(t: OcaTransition, top: str, push: tuple[str, ...], suffix: str = "") -> PdaTransition:
    name = f"{t.id}[{top}{',' + suffix if suffix else ''}]"
    return PdaTransition(id=name, source=t.source, top=top, action=t.action, target=t.target, push=push)


def oca_conf_as_pda(conf: OcaConf) -> PdaConf:
    return PdaConf(conf.state, (UNIT,) * conf.counter + (BOTTOM,))


def is_one_counter_shaped(pda: Pda) -> bool:
    """True when the stack alphabet is one counting symbol over a bottom symbol never pushed above."""
    if len(pda.stack_alphabet) != 2 or BOTTOM not in pda.stack_alphabet:
        return False
    for t in pda.transitions:
        if t.top == BOTTOM and (not t.push or t.push[-1] != BOTTOM or BOTTOM in t.push[:-1]):
            return False
        if t.top != BOTTOM and BOTTOM in t.push:
            return False
    return True
