"""Command line surface of the workbench.

Every subcommand reads instance files, runs one operation and writes a canonical JSON document
to stdout (``--pretty`` prints a short human summary instead). Exit codes: 0 on success, 1 when
the operation ran but found a problem (violations, a rejected candidate, a failing batch), 2 on
unreadable input.
"""

from __future__ import annotations
from pathlib import Path
from typing import Any, Sequence
import argparse
import asyncio
import logging
import sys

from pydantic import ValidationError

from energy_games.cli.batch import BatchSpec, run_batch, run_batch_async
from energy_games.cli.cli_exceptions import ConfigurationSyntaxError, InstanceFileException, UnexpectedKindError
from energy_games.cli.schema import (
    FIXTURES,
    InstanceFile,
    canonical_json,
    load_fixture,
    read_instance,
    serialize,
    write_instance,
)
from energy_games.coloring import (
    NoStablePattern,
    compute_coloring,
    detect_periodic_parameters,
    render_grid,
)
from energy_games.gadgets import GadgetException, GadgetOutput, mcm_to_ocn_vs_vass, mcm_to_pushdown_energy
from energy_games.models import (
    EnergyGame,
    Lts,
    LtsConf,
    Mcm,
    ModelsException,
    Oca,
    OcaConf,
    OneCounterEnergyGame,
    PdaConf,
    Vass,
    VassConf,
    validate,
)
from energy_games.reductions import (
    OcaToOcnParams,
    ReductionException,
    ReductionOutput,
    energy_to_simulation,
    oca_ocn_to_ocn_ocn,
    simulation_to_energy,
)
from energy_games.semilinear import (
    Accepted,
    DecideBudget,
    SemilinearException,
    UltimatelyPeriodicColoring,
    check_simulation_candidate,
    enumerate_and_decide,
)
from energy_games.solvers import (
    Bounds,
    SimPair,
    SolverException,
    SolverSettings,
    initial_position,
    minimal_credit_bounded,
    solve_energy_bounded,
    solve_simulation_bounded,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2

_INPUT_ERRORS = (
    InstanceFileException,
    ModelsException,
    ReductionException,
    SemilinearException,
    GadgetException,
    SolverException,
    ValidationError,
    OSError,
)


def split_configuration(text: str) -> tuple[str, str]:
    state, separator, payload = text.rpartition(":")
    if not separator or not state:
        raise ConfigurationSyntaxError(text, "expected STATE:PAYLOAD")
    return state, payload


def _integers(text: str, payload: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in payload.split(",")) if payload else ()
    except ValueError as error:
        raise ConfigurationSyntaxError(text, "counters are comma separated integers") from error
    if any(value < 0 for value in values):
        raise ConfigurationSyntaxError(text, "counters are non-negative")
    return values


def parse_configuration(machine: Lts, text: str) -> LtsConf:
    """
    Reads ``STATE:PAYLOAD`` for a machine.

    The payload is a counter for automata, a comma separated vector for VASS and a comma separated
    stack, top first, for pushdown automata.

    Raises:
        ConfigurationSyntaxError: If the payload does not fit the machine.
    """
    state, payload = split_configuration(text)
    if isinstance(machine, Oca):
        values = _integers(text, payload)
        if len(values) != 1:
            raise ConfigurationSyntaxError(text, "an automaton configuration has one counter")
        return OcaConf(state, values[0])
    if isinstance(machine, Vass):
        vector = _integers(text, payload)
        if len(vector) != machine.dimension:
            raise ConfigurationSyntaxError(text, f"expected {machine.dimension} coordinates")
        return VassConf(state, vector)
    return PdaConf(state, tuple(payload.split(",")) if payload else ())


def parse_game_payload(game: EnergyGame, text: str) -> tuple[str, tuple[str, ...] | int]:
    state, payload = split_configuration(text)
    if isinstance(game, OneCounterEnergyGame):
        values = _integers(text, payload)
        if len(values) != 1:
            raise ConfigurationSyntaxError(text, "a one-counter position has one counter")
        return state, values[0]
    return state, tuple(payload.split(",")) if payload else ()


def _bounds(args: argparse.Namespace) -> Bounds:
    return Bounds(counter_cap=args.counter_cap, energy_cap=args.energy_cap, round_cap=args.round_cap)


def _settings(args: argparse.Namespace) -> SolverSettings:
    if args.position_budget is None:
        return SolverSettings.from_environment()
    return SolverSettings(position_budget=args.position_budget)


def _emit(args: argparse.Namespace, payload: Any, summary: str) -> None:
    if args.pretty:
        print(summary)
        return
    sys.stdout.buffer.write(canonical_json(payload))
    sys.stdout.flush()


def _machine_or_fixture(path: str) -> InstanceFile:
    if path.upper() in FIXTURES and not Path(path).exists():
        return load_fixture(path)
    return read_instance(path)


def _violations(instance: InstanceFile) -> list[str]:
    match instance:
        case UltimatelyPeriodicColoring():
            return instance.problems()
        case OcaToOcnParams():
            return []
        case GadgetOutput():
            machines = (instance.game, instance.spoiler, instance.duplicator)
            return [str(violation) for machine in machines if machine is not None for violation in validate(machine)]
    return [str(violation) for violation in validate(instance)]


def _validate(args: argparse.Namespace) -> int:
    report = {path: _violations(_machine_or_fixture(path)) for path in args.files}
    lines = [f"{path}: {'ok' if not found else '; '.join(found)}" for path, found in report.items()]
    _emit(args, report, "\n".join(lines))
    return EXIT_FAILED if any(report.values()) else EXIT_OK


def _solve_energy(args: argparse.Namespace) -> int:
    game = read_instance(args.game, "peg", "oceg")
    state, payload = parse_game_payload(game, args.init)
    if args.scan:
        scan = minimal_credit_bounded(game, state, payload, _bounds(args), settings=_settings(args))
        summary = f"minimal credit: {scan.minimal_win1_credit} (conclusive={scan.conclusive})"
        _emit(args, scan.model_dump(mode="json"), summary)
        return EXIT_OK
    position = initial_position(game, state, payload, args.credit)
    verdict = solve_energy_bounded(game, position, _bounds(args), settings=_settings(args))
    _emit(args, verdict.to_json_dict(), f"{position}: {verdict.outcome} ({verdict.positions_explored} positions)")
    return EXIT_OK


def _solve_sim(args: argparse.Namespace) -> int:
    left = read_instance(args.left, "pda", "oca", "vass")
    right = read_instance(args.right, "pda", "oca", "vass")
    pair = SimPair(parse_configuration(left, args.pair[0]), parse_configuration(right, args.pair[1]))
    verdict = solve_simulation_bounded(left, right, pair, _bounds(args), settings=_settings(args))
    _emit(args, verdict.to_json_dict(), f"{pair}: {verdict.outcome} ({verdict.positions_explored} positions)")
    return EXIT_OK


def _write_reduction(args: argparse.Namespace, output: ReductionOutput) -> int:
    mapping = {
        "positionMap": output.position_map.model_dump(mode="json"),
        "provenance": {identifier: clause.value for identifier, clause in output.provenance.items()},
        "unreachableStates": list(output.flagged),
    }
    machines = {"left": output.left} if output.right is None else {"left": output.left, "right": output.right}
    if args.out_dir is None:
        payload = {name: machine.model_dump(mode="json", exclude_none=True) for name, machine in machines.items()}
        _emit(args, payload | mapping, f"{len(output.provenance)} rules in {len(machines)} machines")
        return EXIT_OK
    directory = Path(args.out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    for name, machine in machines.items():
        write_instance(directory / f"{name}.json", machine)
    (directory / "map.json").write_bytes(canonical_json(mapping))
    logger.info("reduction written to %s", directory)
    return EXIT_OK


def _reduce(args: argparse.Namespace) -> int:
    match args.reduction:
        case "energy-to-sim":
            return _write_reduction(args, energy_to_simulation(read_instance(args.inputs[0], "peg", "oceg")))
        case "sim-to-energy":
            left = read_instance(args.inputs[0], "pda", "oca")
            return _write_reduction(args, simulation_to_energy(left, read_instance(args.inputs[1], "vass")))
    a = read_instance(args.inputs[0], "oca")
    a_prime = read_instance(args.inputs[1], "oca")
    if args.params is not None:
        params = read_instance(args.params, "oca-to-ocn-params")
    else:
        grid = compute_coloring(a, a_prime, args.size, args.size, _bounds(args), settings=_settings(args))
        params = detect_periodic_parameters(grid)
        if isinstance(params, NoStablePattern):
            logger.error("no parameters given and none detected: %s", params.reason)
            return EXIT_FAILED
    return _write_reduction(args, oca_ocn_to_ocn_ocn(a, a_prime, params))


def _coloring(args: argparse.Namespace) -> int:
    a = read_instance(args.left, "oca")
    a_prime = read_instance(args.right, "oca")
    m_prime_max = args.m_prime_max if args.m_prime_max is not None else args.m_max
    grid = compute_coloring(
        a, a_prime, args.m_max, m_prime_max, _bounds(args), fill=not args.no_fill, settings=_settings(args)
    )
    params = detect_periodic_parameters(grid)
    if args.emit_params is not None and isinstance(params, OcaToOcnParams):
        write_instance(args.emit_params, params)
    payload: dict[str, Any] = {
        "definite": grid.definite_count(),
        "monotonicityViolations": [list(cell) for cell in grid.monotonicity_violations()],
        "grid": render_grid(grid, "ascii").decode("ascii").splitlines(),
    }
    if isinstance(params, NoStablePattern):
        payload["noStablePattern"] = params.reason
    else:
        payload["params"] = params.model_dump(mode="json", exclude_none=True)
    _emit(args, payload, render_grid(grid, "ascii").decode("ascii"))
    return EXIT_OK


def _render(args: argparse.Namespace) -> int:
    a = read_instance(args.left, "oca")
    a_prime = read_instance(args.right, "oca")
    grid = compute_coloring(a, a_prime, args.size, args.size, _bounds(args), settings=_settings(args))
    pair = tuple(args.pair) if args.pair is not None else None
    Path(args.output).write_bytes(render_grid(grid, args.format, pair))
    logger.info("%s rendering of a %d grid written to %s", args.format, args.size, args.output)
    return EXIT_OK


def _point(text: str) -> tuple[str, int, str, int]:
    left, right = text.split("/", 1) if "/" in text else (text, "")
    (p, m), (q, n) = split_configuration(left), split_configuration(right)
    return p, _integers(text, m)[0], q, _integers(text, n)[0]


def _check_candidate(args: argparse.Namespace) -> int:
    a = read_instance(args.left, "oca")
    a_prime = read_instance(args.right, "oca")
    candidate = read_instance(args.candidate, "upc")
    try:
        required = [_point(text) for text in args.require]
    except (ValueError, IndexError) as error:
        raise ConfigurationSyntaxError(" ".join(args.require), "points read p:m/q:n") from error
    result = check_simulation_candidate(a, a_prime, candidate, required)
    _emit(args, result.model_dump(mode="json", exclude_none=True), result.kind)
    return EXIT_OK if isinstance(result, Accepted) else EXIT_FAILED


def _decide(args: argparse.Namespace) -> int:
    a = read_instance(args.left, "oca")
    a_prime = read_instance(args.right, "oca")
    pair = SimPair(parse_configuration(a, args.pair[0]), parse_configuration(a_prime, args.pair[1]))
    budget = DecideBudget(
        max_window=args.max_window,
        max_period=args.max_period,
        max_slope=args.max_slope,
        bounds=_bounds(args),
        stages=args.stages,
        grid_size=args.grid_size,
        wall_clock=args.wall_clock,
    )
    decision = enumerate_and_decide(a, a_prime, pair, budget, settings=_settings(args))
    payload: dict[str, Any] = {
        "verdict": decision.outcome.value,
        "stage": decision.stage,
        "candidatesChecked": decision.candidates_checked,
    }
    if decision.certificate is not None:
        payload["certificate"] = decision.certificate.model_dump(mode="json", exclude_none=True)
    if decision.evidence is not None:
        payload["evidence"] = decision.evidence.to_json_dict()
    _emit(args, payload, f"{pair}: {decision.outcome} at stage {decision.stage}")
    return EXIT_OK


def _gen_gadget(args: argparse.Namespace) -> int:
    machine = _machine_or_fixture(args.machine)
    if not isinstance(machine, Mcm):
        raise UnexpectedKindError(args.machine, machine.kind, ("mcm",))
    output = mcm_to_pushdown_energy(machine) if args.construction == "pushdown-energy" else mcm_to_ocn_vs_vass(machine)
    if args.output is not None:
        write_instance(args.output, output)
        return EXIT_OK
    if args.pretty:
        print(f"{output.construction}: {len(output.provenance)} rules, {output.expected_relation}")
    else:
        sys.stdout.buffer.write(serialize(output))
    return EXIT_OK


def _batch(args: argparse.Namespace) -> int:
    spec = BatchSpec(
        operation=args.operation,
        seed=args.seed,
        count=args.count,
        max_states=args.max_states,
        max_rules=args.max_rules,
        max_counter=args.max_counter,
        max_energy=args.max_energy,
        bounds=_bounds(args),
        concurrency=args.concurrency,
    )
    settings = _settings(args)
    if args.concurrent:
        report = asyncio.run(run_batch_async(spec, settings=settings))
    else:
        report = run_batch(spec, settings=settings)
    if args.report is not None:
        Path(args.report).write_bytes(report.to_json())
    if not args.pretty:
        sys.stdout.buffer.write(report.to_json())
    print(report.summary_text(), file=sys.stdout if args.pretty else sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAILED


def _pair_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pair", nargs=2, metavar=("LEFT", "RIGHT"), required=True, help="STATE:PAYLOAD of each side")


def _parse_args(argv: Sequence[str] | None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="energy-games", description="Energy games and simulation games workbench.")
    output = parser.add_mutually_exclusive_group()
    output.add_argument(
        "--json", dest="pretty", action="store_false", default=False, help="Canonical JSON on stdout (default)."
    )
    output.add_argument("--pretty", dest="pretty", action="store_true", help="Short human summary.")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--position-budget", type=int, help="Overrides ENERGY_GAMES_POSITION_BUDGET.")
    parser.add_argument("--counter-cap", type=int, default=12)
    parser.add_argument("--energy-cap", type=int, default=12)
    parser.add_argument("--round-cap", type=int, default=40)
    commands = parser.add_subparsers(dest="command", required=True)

    validate_parser = commands.add_parser("validate", help="Report the violations of instance files.")
    validate_parser.add_argument("files", nargs="+", help="Instance files or fixture names.")
    validate_parser.set_defaults(handler=_validate)

    solve = commands.add_parser("solve", help="Bounded solving.").add_subparsers(dest="game", required=True)
    energy = solve.add_parser("energy", help="Solve an energy game from one position.")
    energy.add_argument("game")
    energy.add_argument("--init", required=True, help="STATE:COUNTER or STATE:TOP,...,BOTTOM")
    energy.add_argument("--credit", type=int, default=0)
    energy.add_argument("--scan", action="store_true", help="Scan credits 0..energy-cap for the least winning one.")
    energy.set_defaults(handler=_solve_energy)
    sim = solve.add_parser("sim", help="Solve a simulation game for one pair.")
    sim.add_argument("left")
    sim.add_argument("right")
    _pair_option(sim)
    sim.set_defaults(handler=_solve_sim)

    reduce = commands.add_parser("reduce", help="Run a reduction.")
    reduce.add_argument("reduction", choices=["energy-to-sim", "sim-to-energy", "oca-to-ocn"])
    reduce.add_argument("inputs", nargs="+")
    reduce.add_argument("--params", help="Parameter table for oca-to-ocn; detected from a grid when absent.")
    reduce.add_argument("--size", type=int, default=12, help="Grid size used to detect parameters.")
    reduce.add_argument("--out-dir", help="Write left.json, right.json and map.json here.")
    reduce.set_defaults(handler=_reduce)

    coloring = commands.add_parser("coloring", help="Colour a grid of pairs and look for a periodic pattern.")
    coloring.add_argument("left")
    coloring.add_argument("right")
    coloring.add_argument("--m-max", type=int, default=12)
    coloring.add_argument("--m-prime-max", type=int)
    coloring.add_argument("--no-fill", action="store_true", help="Keep Unknown cells that monotonicity would fill.")
    coloring.add_argument("--emit-params", help="Write the detected parameter table here.")
    coloring.set_defaults(handler=_coloring)

    render = commands.add_parser("render", help="Render a coloured grid.")
    render.add_argument("left")
    render.add_argument("right")
    render.add_argument("--size", type=int, default=12)
    render.add_argument("--format", choices=["ascii", "pgm", "png"], default="ascii")
    render.add_argument("--pair", nargs=2, metavar=("LEFT", "RIGHT"), help="Only this state pair.")
    render.add_argument("--output", required=True)
    render.set_defaults(handler=_render)

    check = commands.add_parser("check-candidate", help="Check an ultimately periodic colouring.")
    check.add_argument("left")
    check.add_argument("right")
    check.add_argument("candidate")
    check.add_argument("--require", nargs="*", default=[], help="Points p:m/q:n that must be White.")
    check.set_defaults(handler=_check_candidate)

    decide = commands.add_parser("decide", help="Search for a certified simulation verdict.")
    decide.add_argument("left")
    decide.add_argument("right")
    _pair_option(decide)
    decide.add_argument("--max-window", type=int, default=3)
    decide.add_argument("--max-period", type=int, default=2)
    decide.add_argument("--max-slope", type=int, default=1)
    decide.add_argument("--stages", type=int, default=3)
    decide.add_argument("--grid-size", type=int, default=8)
    decide.add_argument("--wall-clock", type=float, default=60.0)
    decide.set_defaults(handler=_decide)

    gadget = commands.add_parser("gen-gadget", help="Compile a Minsky machine into a game.")
    gadget.add_argument("construction", choices=["pushdown-energy", "ocn-vass"])
    gadget.add_argument("machine", help=f"A machine file or one of {', '.join(FIXTURES)}.")
    gadget.add_argument("--output")
    gadget.set_defaults(handler=_gen_gadget)

    batch = commands.add_parser("batch", help="Run a verification campaign.")
    batch.add_argument("--operation", choices=["energy-to-sim", "sim-to-energy", "compose", "refine"], required=True)
    batch.add_argument("--count", type=int, default=50)
    batch.add_argument("--seed", type=int, default=42)
    batch.add_argument("--max-states", type=int, default=3, help="Largest number of states per player or side.")
    batch.add_argument("--max-rules", type=int, default=5, help="Largest number of rules per generated machine.")
    batch.add_argument("--max-counter", type=int, default=3, help="Largest counter of the compared positions.")
    batch.add_argument("--max-energy", type=int, default=3, help="Largest initial energy of the compared positions.")
    batch.add_argument("--concurrent", action="store_true", help="Run instances in worker threads.")
    batch.add_argument("--concurrency", type=int, default=4)
    batch.add_argument("--report", help="Also write the JSON report here.")
    batch.set_defaults(handler=_batch)

    return parser.parse_args(argv)


def main(argv: Sequence[str] | None = None) -> int:
    args = _parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.handler(args)
    except _INPUT_ERRORS as error:
        logger.error("%s", error)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
