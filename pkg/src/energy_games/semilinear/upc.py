"""Ultimately periodic colourings: a finite window plus periods describing an infinite colouring."""

from __future__ import annotations
from itertools import groupby
import re
from typing import Literal

import numpy as np
from pydantic import Field, PrivateAttr, field_serializer, field_validator

from energy_games.coloring import Color
from energy_games.models import FrozenModel, Metadata
from energy_games.semilinear.semilinear_exceptions import UnknownPairError

_RUN = re.compile(r"(\d+)([WB])")


def encode_runs(row: str) -> str:
    """``WWWBB`` becomes ``3W2B``."""
    return "".join(f"{len(list(run))}{symbol}" for symbol, run in groupby(row))


def decode_runs(row: str) -> str:
    if not any(character.isdigit() for character in row):
        return row
    if _RUN.sub("", row):
        raise ValueError(f"malformed run-length row {row!r}")
    return "".join(symbol * int(count) for count, symbol in _RUN.findall(row))


class PairWindow(FrozenModel):
    """Explicit colours of one state pair; ``rows[m']`` lists the colours for ``m = 0..M``."""

    left: str
    right: str
    rows: tuple[str, ...]

    @field_validator("rows", mode="before")
    @classmethod
    def decode_rows(cls, rows: list[str]) -> tuple[str, ...]:
        return tuple(decode_runs(row) for row in rows)

    @field_serializer("rows")
    def encode_rows(self, rows: tuple[str, ...]) -> list[str]:
        return [encode_runs(row) for row in rows]


class UltimatelyPeriodicColoring(FrozenModel):
    """
    Colouring of ``(p m, p' m')`` given by a window ``[0, M] x [0, M']`` per state pair.

    A Spoiler counter ``m > M`` folds back by the least multiple ``j`` of ``period`` landing in the
    window, moving the Duplicator counter down by ``j * slope`` on the way; a negative result is
    Black. A Duplicator counter ``m' > M'`` then folds back by multiples of ``period_prime``.
    Thresholds, periods and slope are shared by all pairs.
    """

    kind: Literal["upc"] = "upc"
    left_states: tuple[str, ...]
    right_states: tuple[str, ...]
    threshold: int = Field(ge=0)
    period: int = Field(ge=1)
    threshold_prime: int = Field(ge=0)
    period_prime: int = Field(ge=1)
    slope: int = Field(default=0, ge=0)
    windows: tuple[PairWindow, ...]
    metadata: Metadata | None = None

    _white: dict[tuple[str, str], frozenset[tuple[int, int]]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        for window in self.windows:
            widths = {len(row) for row in window.rows}
            if len(window.rows) == self.threshold_prime + 1 and widths == {self.threshold + 1}:
                self._white[(window.left, window.right)] = frozenset(
                    (m, m_prime)
                    for m_prime, row in enumerate(window.rows)
                    for m, symbol in enumerate(row)
                    if symbol == "W"
                )

    @property
    def shape(self) -> tuple[int, int, int, int, int]:
        return self.threshold, self.period, self.threshold_prime, self.period_prime, self.slope

    def problems(self) -> list[str]:
        """Structural defects; an empty list means every point has a well-defined colour."""
        problems = []
        if self.period > self.threshold + 1:
            problems.append(f"period {self.period} exceeds the window width {self.threshold + 1}")
        if self.period_prime > self.threshold_prime + 1:
            problems.append(f"period {self.period_prime} exceeds the window height {self.threshold_prime + 1}")
        declared = {(window.left, window.right) for window in self.windows}
        for left in self.left_states:
            for right in self.right_states:
                if (left, right) not in declared:
                    problems.append(f"no window for ({left},{right})")
        for window in self.windows:
            if len(window.rows) != self.threshold_prime + 1:
                problems.append(f"({window.left},{window.right}) has {len(window.rows)} rows")
            if any(len(row) != self.threshold + 1 or set(row) - {"W", "B"} for row in window.rows):
                problems.append(f"({window.left},{window.right}) has malformed rows")
        return problems

    def representative(self, m: int, m_prime: int) -> tuple[int, int] | None:
        """Window cell whose colour ``(m, m')`` repeats, ``None`` when the point is Black by the slope."""
        if m > self.threshold:
            j = -(-(m - self.threshold) // self.period)
            m -= j * self.period
            m_prime -= j * self.slope
            if m_prime < 0:
                return None
        if m_prime > self.threshold_prime:
            m_prime -= -(-(m_prime - self.threshold_prime) // self.period_prime) * self.period_prime
        return m, m_prime

    def is_white(self, left: str, right: str, m: int, m_prime: int) -> bool:
        white = self._white.get((left, right))
        if white is None:
            raise UnknownPairError(left, right)
        cell = self.representative(m, m_prime)
        return cell in white

    def column_monotonicity_issues(self) -> list[str]:
        """Points ``(m, m')`` that are White while ``(m, m'+1)`` is Black, one period beyond the window."""
        issues = []
        for left, right in self._white:
            for m in range(self.threshold + 1):
                for m_prime in range(self.threshold_prime + self.period_prime + 1):
                    if self.is_white(left, right, m, m_prime) and not self.is_white(left, right, m, m_prime + 1):
                        issues.append(f"({left},{right}) at ({m},{m_prime})")
        return issues

    @classmethod
    def from_cells(
        cls,
        cells: dict[tuple[str, str], np.ndarray],
        left_states: tuple[str, ...],
        right_states: tuple[str, ...],
        *,
        period: int,
        period_prime: int,
        slope: int = 0,
    ) -> UltimatelyPeriodicColoring:
        """Builds a colouring from boolean windows indexed ``[m, m']``, all of the same shape."""
        width, height = next(iter(cells.values())).shape
        return cls(
            left_states=left_states,
            right_states=right_states,
            threshold=width - 1,
            period=period,
            threshold_prime=height - 1,
            period_prime=period_prime,
            slope=slope,
            windows=tuple(
                PairWindow(
                    left=left,
                    right=right,
                    rows=tuple("".join("W" if cell else "B" for cell in row) for row in cells[(left, right)].T),
                )
                for left in left_states
                for right in right_states
            ),
        )


def upc_color(u: UltimatelyPeriodicColoring, left: str, right: str, m: int, m_prime: int) -> Color:
    """
    Colour of ``(left m, right m')`` in the infinite colouring described by ``u``.

    Raises:
        UnknownPairError: If the pair has no window.
    """
    return Color.WHITE if u.is_white(left, right, m, m_prime) else Color.BLACK
