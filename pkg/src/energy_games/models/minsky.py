from __future__ import annotations
from dataclasses import dataclass
import logging

from pydantic import BaseModel, ConfigDict

from energy_games.models.configurations import McmConf
from energy_games.models.machines import IncRule, Mcm

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Halted:
    """Returned by ``mcm_step`` on a configuration in the halting state."""

    configuration: McmConf


class HaltedAfter(BaseModel):
    model_config = ConfigDict(frozen=True)

    steps: int
    configuration: McmConf


class StillRunning(BaseModel):
    model_config = ConfigDict(frozen=True)

    steps: int
    configuration: McmConf


def mcm_step(m: Mcm, conf: McmConf) -> McmConf | Halted:
    """Apply the unique rule of the current state.

    A test of a positive counter decrements it on the way to the positive branch.
    """
    if conf.state == m.halt_state:
        return Halted(conf)
    rule = m.rule_at(conf.state)
    if rule is None:
        raise KeyError(f"No rule for state {conf.state}")
    index = rule.counter - 1
    counters = list(conf.counters)
    if isinstance(rule, IncRule):
        counters[index] += 1
        return McmConf(rule.target, (counters[0], counters[1]))
    if counters[index] == 0:
        return McmConf(rule.if_zero, conf.counters)
    counters[index] -= 1
    return McmConf(rule.if_positive, (counters[0], counters[1]))


def mcm_run(m: Mcm, max_steps: int) -> HaltedAfter | StillRunning:
    """Run the machine from its initial state with both counters at zero.

    Args:
        m (Mcm): A valid Minsky machine.
        max_steps (int): Step budget, at least 0.

    Returns:
        HaltedAfter | StillRunning: ``HaltedAfter(k)`` iff the halting state is reached after
        ``k <= max_steps`` steps.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    conf = McmConf(m.init_state, (0, 0))
    for taken in range(max_steps + 1):
        successor = mcm_step(m, conf)
        if isinstance(successor, Halted):
            return HaltedAfter(steps=taken, configuration=conf)
        if taken == max_steps:
            break
        conf = successor
    logger.debug("machine still running after %d steps at %s", max_steps, conf)
    return StillRunning(steps=max_steps, configuration=conf)
