from __future__ import annotations
from typing import Literal

from pydantic import Field, PrivateAttr

from energy_games.models import FrozenModel, Metadata


class LineParams(FrozenModel):
    """Colour data of one state pair at levels ``l .. l+K-1``.

    ``w_at_l`` is the least White Duplicator counter on the line at level ``l``, ``None`` when
    that line is entirely Black. ``black[r]`` tells whether the line at level ``l + r`` is Black.
    """

    left: str
    right: str
    w_at_l: int | None = Field(default=None, ge=0)
    black: tuple[bool, ...]


class OcaToOcnParams(FrozenModel):
    kind: Literal["oca-to-ocn-params"] = "oca-to-ocn-params"
    l: int = Field(ge=1)
    k: int = Field(ge=1)
    lines: tuple[LineParams, ...]
    metadata: Metadata | None = None

    _index: dict[tuple[str, str], LineParams] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._index = {(line.left, line.right): line for line in self.lines}

    def line(self, left: str, right: str) -> LineParams:
        return self._index[(left, right)]

    def w_at_l(self, left: str, right: str) -> int | None:
        return self._index[(left, right)].w_at_l

    def black_line(self, left: str, right: str, residue: int) -> bool:
        return self._index[(left, right)].black[residue]

    def consistency_issues(self, left_states: tuple[str, ...], right_states: tuple[str, ...]) -> list[str]:
        issues: list[str] = []
        for left in left_states:
            for right in right_states:
                line = self._index.get((left, right))
                if line is None:
                    issues.append(f"missing pair ({left},{right})")
                    continue
                if len(line.black) != self.k:
                    issues.append(f"pair ({left},{right}) has {len(line.black)} residues, expected {self.k}")
                elif (line.w_at_l is None) != line.black[0]:
                    issues.append(f"pair ({left},{right}): w_at_l and black line at level l disagree")
        return issues
