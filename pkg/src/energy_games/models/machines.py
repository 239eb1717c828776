"""Transition-system descriptions: pushdown automata, one-counter automata, VASS and Minsky machines.

Every machine is an immutable pydantic model. Identifiers are plain strings and every
collection keeps declaration order, which is the order used for tie-breaking everywhere.
"""

from __future__ import annotations
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr


class Metadata(BaseModel):
    """Optional descriptive block attached to instance files."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str | None = None
    seed: int | None = None
    provenance: str | None = None


class FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class PdaTransition(FrozenModel):
    id: str
    source: str
    top: str
    action: str
    target: str
    push: tuple[str, ...]


class OcaTransition(FrozenModel):
    id: str
    source: str
    action: str
    delta: Literal[-1, 0, 1]
    target: str


class VassTransition(FrozenModel):
    id: str
    source: str
    action: str
    target: str
    effect: tuple[int, ...]


class Pda(FrozenModel):
    """Pushdown automaton. Stacks are written top-first and a configuration never has an empty stack."""

    kind: Literal["pda"] = "pda"
    states: tuple[str, ...]
    stack_alphabet: tuple[str, ...]
    actions: tuple[str, ...]
    transitions: tuple[PdaTransition, ...]
    max_push: int = Field(default=2, ge=0)
    metadata: Metadata | None = None

    _by_head: dict[tuple[str, str], tuple[PdaTransition, ...]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        index: dict[tuple[str, str], list[PdaTransition]] = {}
        for transition in self.transitions:
            index.setdefault((transition.source, transition.top), []).append(transition)
        self._by_head = {head: tuple(rules) for head, rules in index.items()}

    def rules_from(self, state: str, top: str) -> tuple[PdaTransition, ...]:
        return self._by_head.get((state, top), ())


class Oca(FrozenModel):
    """One-counter automaton.

    ``delta_plus`` rules fire at every counter value where the result stays non-negative,
    ``delta_zero`` rules fire only at counter zero and may not decrement. A one-counter net
    is an automaton with ``is_net`` set and no zero rules.
    """

    kind: Literal["oca"] = "oca"
    states: tuple[str, ...]
    actions: tuple[str, ...]
    delta_plus: tuple[OcaTransition, ...]
    delta_zero: tuple[OcaTransition, ...] = ()
    is_net: bool = False
    metadata: Metadata | None = None

    _plus: dict[str, tuple[OcaTransition, ...]] = PrivateAttr(default_factory=dict)
    _zero: dict[str, tuple[OcaTransition, ...]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._plus = _group_by_source(self.delta_plus)
        self._zero = _group_by_source(self.delta_zero)

    def plus_from(self, state: str) -> tuple[OcaTransition, ...]:
        return self._plus.get(state, ())

    def zero_from(self, state: str) -> tuple[OcaTransition, ...]:
        return self._zero.get(state, ())

    def transition(self, transition_id: str) -> OcaTransition:
        for transition in (*self.delta_plus, *self.delta_zero):
            if transition.id == transition_id:
                return transition
        raise KeyError(transition_id)


class Vass(FrozenModel):
    """Vector addition system with states over a fixed dimension."""

    kind: Literal["vass"] = "vass"
    dimension: int = Field(ge=1)
    states: tuple[str, ...]
    actions: tuple[str, ...]
    transitions: tuple[VassTransition, ...]
    metadata: Metadata | None = None

    _by_source: dict[str, tuple[VassTransition, ...]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._by_source = _group_by_source(self.transitions)

    def rules_from(self, state: str) -> tuple[VassTransition, ...]:
        return self._by_source.get(state, ())


class IncRule(FrozenModel):
    kind: Literal["inc"] = "inc"
    state: str
    counter: Literal[1, 2]
    target: str


class ZeroTestRule(FrozenModel):
    kind: Literal["test"] = "test"
    state: str
    counter: Literal[1, 2]
    if_zero: str
    if_positive: str


McmRule = Annotated[IncRule | ZeroTestRule, Field(discriminator="kind")]


class Mcm(FrozenModel):
    """Deterministic two-counter Minsky machine with one rule per non-halting state."""

    kind: Literal["mcm"] = "mcm"
    states: tuple[str, ...]
    init_state: str
    halt_state: str
    rules: tuple[McmRule, ...]
    metadata: Metadata | None = None

    def rule_at(self, state: str) -> IncRule | ZeroTestRule | None:
        for rule in self.rules:
            if rule.state == state:
                return rule
        return None


def _group_by_source(transitions) -> dict:
    grouped: dict[str, list] = {}
    for transition in transitions:
        grouped.setdefault(transition.source, []).append(transition)
    return {source: tuple(rules) for source, rules in grouped.items()}
