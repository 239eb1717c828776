"""Instance files: one JSON object per machine, game, parameter table, colouring or gadget output.

The ``kind`` field selects the schema. Files are written canonically (sorted keys, two-space
indent, trailing newline, ``null`` fields omitted), so parsing and serializing a canonical file
reproduces it byte for byte.
"""

from __future__ import annotations
from importlib.resources import files
from pathlib import Path
from typing import Annotated, Any, Sequence
import json

from pydantic import Field, TypeAdapter, ValidationError

from energy_games.cli.cli_exceptions import SchemaError, UnexpectedKindError
from energy_games.gadgets import GadgetOutput
from energy_games.models import Mcm, Oca, OneCounterEnergyGame, Pda, PushdownEnergyGame, Vass
from energy_games.reductions import OcaToOcnParams
from energy_games.semilinear import UltimatelyPeriodicColoring

InstanceFile = Annotated[
    Pda
    | Oca
    | Vass
    | PushdownEnergyGame
    | OneCounterEnergyGame
    | Mcm
    | OcaToOcnParams
    | UltimatelyPeriodicColoring
    | GadgetOutput,
    Field(discriminator="kind"),
]

FIXTURES = ("HALT3", "LOOP", "COLLATZ6")

_ADAPTER: TypeAdapter[InstanceFile] = TypeAdapter(InstanceFile)
_TAG_ERRORS = {"union_tag_invalid", "union_tag_not_found"}


def canonical_json(payload: Any) -> bytes:
    return (json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def json_pointer(location: Sequence[str | int]) -> str:
    return "".join("/" + str(part).replace("~", "~0").replace("/", "~1") for part in location)


def parse(data: bytes | str) -> InstanceFile:
    """
    Reads an instance file.

    Args:
        data (bytes | str): The JSON document.

    Returns:
        InstanceFile: The validated model selected by ``kind``.

    Raises:
        SchemaError: If the document is not JSON, has an unknown kind, misses a field, has an
            unknown field or a value out of range. The pointer names the first offending value.
    """
    try:
        payload = json.loads(data)
    except json.JSONDecodeError as error:
        raise SchemaError("", f"not JSON ({error.msg} at line {error.lineno})") from error
    if not isinstance(payload, dict):
        raise SchemaError("", "an instance file holds a JSON object")
    try:
        return _ADAPTER.validate_python(payload)
    except ValidationError as error:
        first = error.errors()[0]
        if first["type"] in _TAG_ERRORS:
            raise SchemaError("/kind", first["msg"]) from error
        # The first location step is the discriminator value of the selected schema.
        raise SchemaError(json_pointer(first["loc"][1:]), first["msg"]) from error


def serialize(instance: InstanceFile) -> bytes:
    return canonical_json(instance.model_dump(mode="json", exclude_none=True))


def read_instance(path: str | Path, *expected: str) -> InstanceFile:
    """Parses a file, checking its kind when ``expected`` kinds are given."""
    instance = parse(Path(path).read_bytes())
    if expected and instance.kind not in expected:
        raise UnexpectedKindError(str(path), instance.kind, expected)
    return instance


def write_instance(path: str | Path, instance: InstanceFile) -> None:
    Path(path).write_bytes(serialize(instance))


def fixture_bytes(name: str) -> bytes:
    return files("energy_games.cli").joinpath("fixtures", f"{name.lower()}.json").read_bytes()


def load_fixture(name: str) -> Mcm:
    """One of the shipped Minsky machines, by name (``HALT3``, ``LOOP``, ``COLLATZ6``)."""
    if name.upper() not in FIXTURES:
        raise KeyError(f"No fixture named {name}")
    return parse(fixture_bytes(name))
