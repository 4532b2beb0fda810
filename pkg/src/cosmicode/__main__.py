"""Entry point for Cosmicode."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

import structlog
from pydantic import ValidationError

from cosmicode.config import Config, get_config
from cosmicode.errors import (
    ConstantsError,
    CosmicodeError,
    DimensionError,
    DomainError,
    ScenarioError,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_STAGE = 2


def setup_logging(verbose: bool = False) -> None:
    """Configure structured logging to stderr."""
    level = logging.DEBUG if verbose else logging.WARNING

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )
    logging.basicConfig(level=level, format="%(message)s", stream=sys.stderr, force=True)


def build_parser() -> argparse.ArgumentParser:
    """Build the command line parser."""
    parser = argparse.ArgumentParser(
        prog="cosmicode",
        description="Dimensional cascades, mass ladders and hybrid-space collapse",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose logging")
    parser.add_argument("--version", action="store_true", help="Show version and exit")
    sub = parser.add_subparsers(dest="command")

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", type=Path, help="Write the report here instead of stdout")
        p.add_argument("--format", choices=["json", "csv"], default="json")

    pipeline = sub.add_parser("pipeline", help="Run the cosmic cascade pipeline")
    pipeline.add_argument("--scenario", type=Path, help="Scenario JSON file")
    add_output(pipeline)

    ladder = sub.add_parser("ladder", help="Print the supersymmetry mass ladder")
    ladder.add_argument("--alpha", type=float, help="Fine structure constant override")
    ladder.add_argument("--planck-gev", type=float, help="Planck energy override [GeV]")
    ladder.add_argument("--speeds", action="store_true", help="Print QVSL light speeds instead")
    add_output(ladder)

    wavefunction = sub.add_parser("wavefunction", help="Collapse statistics for hybrid cells")
    wavefunction.add_argument("--scenario", type=Path, required=True, help="Scenario JSON file")
    wavefunction.add_argument("--seed", type=int, help="Override the scenario seed")
    wavefunction.add_argument("--workers", type=int, default=1, help="Monte Carlo threads")
    add_output(wavefunction)

    qvsl = sub.add_parser("qvsl", help="Apply one QVSL transform to a particle")
    qvsl.add_argument("--from", dest="source", required=True, help="Source dimensions as D,d")
    qvsl.add_argument("--n", type=int, required=True, help="Dimensions to trade")
    qvsl.add_argument("--direction", choices=["raise_d", "lower_d"], required=True)
    qvsl.add_argument("--mass-gev", type=float, required=True, help="Source rest mass [GeV]")
    qvsl.add_argument("--kind", choices=["boson", "fermion"], default="boson")
    add_output(qvsl)

    sweep = sub.add_parser("sweep", help="Run several scenarios concurrently")
    sweep.add_argument("scenarios", type=Path, nargs="+", help="Scenario JSON files")
    sweep.add_argument("--out-dir", type=Path, help="Directory for per-scenario reports")
    sweep.add_argument("--format", choices=["json", "csv"], default="json")
    sweep.add_argument("--workers", type=int, help="Concurrent scenario runs")

    return parser


def _read_scenario(config: Config, path: Path | None) -> bytes:
    if path is None:
        return b"{}"
    try:
        return config.resolve_scenario(path).read_bytes()
    except OSError as e:
        raise ScenarioError(f"cannot read scenario: {e}", field="scenario") from e


def _write(data: bytes, out: Path | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        out.write_bytes(data)


def _parse_dims(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise DimensionError(f"--from expects D,d, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as e:
        raise DimensionError(f"--from expects integers, got {text!r}") from e


def cmd_pipeline(args: argparse.Namespace, config: Config) -> None:
    from cosmicode.scenario.models import parse_scenario
    from cosmicode.scenario.runner import ReportFormat, Section, emit_report, run_scenario

    scenario = parse_scenario(_read_scenario(config, args.scenario))
    report = run_scenario(scenario, [Section.PIPELINE], base_constants=config.load_constants())
    _write(emit_report(report, ReportFormat(args.format)), args.out)


def cmd_ladder(args: argparse.Namespace, config: Config) -> None:
    from cosmicode.scenario.runner import ReportFormat, emit_rows, ladder_rows, speed_rows

    constants = config.load_constants().with_overrides(
        alpha=args.alpha, planck_energy_gev=args.planck_gev
    )
    rows = speed_rows(constants) if args.speeds else ladder_rows(constants)
    _write(emit_rows(rows, ReportFormat(args.format)), args.out)


def cmd_wavefunction(args: argparse.Namespace, config: Config) -> None:
    from cosmicode.scenario.models import parse_scenario
    from cosmicode.scenario.runner import ReportFormat, Section, emit_report, run_scenario

    scenario = parse_scenario(_read_scenario(config, args.scenario))
    if scenario.wavefunction is None:
        raise ScenarioError("section is required for this command", field="wavefunction")
    report = run_scenario(
        scenario,
        [Section.WAVEFUNCTION],
        seed=args.seed,
        base_constants=config.load_constants(),
        max_workers=args.workers,
    )
    _write(emit_report(report, ReportFormat(args.format)), args.out)


def cmd_qvsl(args: argparse.Namespace, config: Config) -> None:
    from cosmicode.physics.algebra import QvslDirection, qvsl_speed, qvsl_transform, state_energy
    from cosmicode.physics.models import ParticleKind, ParticleState
    from cosmicode.scenario.runner import ReportFormat, emit_rows

    constants = config.load_constants()
    big_d, d = _parse_dims(args.source)
    if not args.mass_gev > 0:
        raise DomainError(f"--mass-gev must be positive, got {args.mass_gev}")
    try:
        source = ParticleState.make(big_d, d, args.mass_gev, kind=ParticleKind(args.kind))
    except ValueError as e:
        raise DimensionError(str(e)) from e
    target = qvsl_transform(source, args.n, QvslDirection(args.direction))

    rows = [
        {
            "role": role,
            "state": s.label,
            "kind": s.kind.value,
            "rest_mass_gev": s.rest_mass_gev(constants),
            "alpha_exponent": s.rest_mass.exponent,
            "speed": qvsl_speed(constants, s.spacetime_dim),
            "energy_gev": state_energy(constants, s),
        }
        for role, s in (("source", source), ("target", target))
    ]
    _write(emit_rows(rows, ReportFormat(args.format)), args.out)


def cmd_sweep(args: argparse.Namespace, config: Config) -> None:
    from cosmicode.scenario.runner import ReportFormat, run_sweep_files

    paths = [config.resolve_scenario(p) for p in args.scenarios]
    written = run_sweep_files(
        paths,
        args.out_dir or config.output_dir,
        ReportFormat(args.format),
        base_constants=config.load_constants(),
        max_workers=args.workers or config.max_workers,
    )
    for path in written:
        print(path)


COMMANDS = {
    "pipeline": cmd_pipeline,
    "ladder": cmd_ladder,
    "wavefunction": cmd_wavefunction,
    "qvsl": cmd_qvsl,
    "sweep": cmd_sweep,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.version:
        from cosmicode import __version__
        print(f"cosmicode {__version__}")
        return EXIT_OK

    if args.command is None:
        parser.print_help()
        return EXIT_VALIDATION

    setup_logging(args.verbose)
    log = structlog.get_logger()
    config = get_config()

    try:
        COMMANDS[args.command](args, config)
    except (ScenarioError, ConstantsError, DimensionError, DomainError) as e:
        log.error("Validation failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValidationError as e:
        log.error("Validation failed", command=args.command, error=str(e))
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_VALIDATION
    except CosmicodeError as e:
        log.error("Run failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_STAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
