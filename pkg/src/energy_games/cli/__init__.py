from energy_games.cli.batch import (
    Agreement,
    BatchReport,
    BatchRow,
    BatchSpec,
    instance_rng,
    run_batch,
    run_batch_async,
    run_instance,
)
from energy_games.cli.cli_exceptions import (
    ConfigurationSyntaxError,
    InstanceFileException,
    SchemaError,
    UnexpectedKindError,
)
from energy_games.cli.generators import random_oca, random_oceg, random_ocn, random_peg, random_vass
from energy_games.cli.schema import (
    FIXTURES,
    InstanceFile,
    canonical_json,
    fixture_bytes,
    json_pointer,
    load_fixture,
    parse,
    read_instance,
    serialize,
    write_instance,
)

__all__ = [
    "Agreement",
    "BatchReport",
    "BatchRow",
    "BatchSpec",
    "ConfigurationSyntaxError",
    "FIXTURES",
    "InstanceFile",
    "InstanceFileException",
    "SchemaError",
    "UnexpectedKindError",
    "canonical_json",
    "fixture_bytes",
    "instance_rng",
    "json_pointer",
    "load_fixture",
    "parse",
    "random_oca",
    "random_oceg",
    "random_ocn",
    "random_peg",
    "random_vass",
    "read_instance",
    "run_batch",
    "run_batch_async",
    "run_instance",
    "serialize",
    "write_instance",
]
