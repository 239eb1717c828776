from __future__ import annotations
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from energy_games.models.validation import Violation


class ModelsException(Exception):
    """Base exception for all exceptions inside the models."""

    pass


class KindMismatchError(ModelsException):
    """Exception used when a configuration does not belong to the given machine kind."""

    def __init__(self, machine_kind: str, configuration: object):
        super().__init__(
            f"Configuration {configuration!r} can't be used with a machine of kind {machine_kind}."
        )


class InvalidModelError(ModelsException):
    """Exception used when an operation needs a valid model but validation reported violations."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        details = "; ".join(str(violation) for violation in violations)
        super().__init__(f"The model is not valid: {details}")
