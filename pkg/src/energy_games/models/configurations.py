"""Immutable configurations. They are used as arena nodes, so they must stay hashable and cheap."""

from __future__ import annotations
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class PdaConf:
    state: str
    stack: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.state}[{' '.join(self.stack)}]"


@dataclass(frozen=True, slots=True)
class OcaConf:
    state: str
    counter: int

    def __str__(self) -> str:
        return f"{self.state}({self.counter})"


@dataclass(frozen=True, slots=True)
class VassConf:
    state: str
    vector: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.state}{self.vector}"


@dataclass(frozen=True, slots=True)
class PegConf:
    state: str
    stack: tuple[str, ...]
    energy: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.state}[{' '.join(self.stack)}]{self.energy}"


@dataclass(frozen=True, slots=True)
class OcegConf:
    state: str
    counter: int
    energy: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.state}({self.counter}){self.energy}"


@dataclass(frozen=True, slots=True)
class McmConf:
    state: str
    counters: tuple[int, int]

    def __str__(self) -> str:
        return f"{self.state}{self.counters}"


LtsConf = PdaConf | OcaConf | VassConf
GamePosition = PegConf | OcegConf


def structural_size(configuration: LtsConf | GamePosition) -> int:
    """Size compared against the counter cap: stack height, counter value or largest coordinate.

    Energy is not part of the structural size.
    """
    match configuration:
        case PdaConf(stack=stack) | PegConf(stack=stack):
            return len(stack)
        case OcaConf(counter=counter) | OcegConf(counter=counter):
            return counter
        case VassConf(vector=vector):
            return max(vector, default=0)
    raise TypeError(f"Unsupported configuration {configuration!r}")
