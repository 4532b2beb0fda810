"""Scenario execution and deterministic report emission."""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path
from typing import Any

import structlog
from pydantic import ValidationError

from cosmicode import __version__
from cosmicode.cascade.engine import PipelineReport, run_pipeline
from cosmicode.cascade.ensemble import EnsembleEntry
from cosmicode.errors import CosmicodeError, StageError
from cosmicode.hybrid.wavefunction import (
    CollapseOutcome,
    CollapseStatistics,
    Wavefunction,
    build_wavefunction,
    collapse_statistics,
    decohere,
)
from cosmicode.physics.algebra import boson_ladder, qvsl_speed
from cosmicode.physics.constants import PhysicalConstants
from cosmicode.physics.models import MAX_DIM, MIN_DIM
from cosmicode.scenario.models import Scenario, parse_scenario

log = structlog.get_logger()


class ReportFormat(StrEnum):
    JSON = "json"
    CSV = "csv"


class Section(StrEnum):
    """Scenario sections a run may execute."""

    PIPELINE = "pipeline"
    WAVEFUNCTION = "wavefunction"


ALL_SECTIONS = (Section.PIPELINE, Section.WAVEFUNCTION)


def _num(x: float) -> str:
    """17 significant digits, enough for an exact float round-trip."""
    return format(x, ".17g")


def _json_text(value: Any, level: int = 0) -> str:
    """Indented JSON with sorted keys and every float at 17 significant digits."""
    inner = "  " * (level + 1)
    outer = "  " * level
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{inner}{json.dumps(str(k))}: {_json_text(v, level + 1)}"
            for k, v in sorted(value.items(), key=lambda item: str(item[0]))
        ]
        return "{\n" + ",\n".join(items) + f"\n{outer}}}"
    if isinstance(value, list | tuple):
        if not value:
            return "[]"
        items = [f"{inner}{_json_text(v, level + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + f"\n{outer}]"
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"{value!r} is not JSON compliant")
        text = _num(value)
        # keep floats distinguishable from integers
        return text if any(ch in text for ch in ".e") else f"{text}.0"
    return json.dumps(value)


@dataclass(frozen=True)
class Report:
    """Everything a scenario run produced."""

    scenario: Scenario
    constants: PhysicalConstants
    seed: int | None
    pipeline: PipelineReport | None = None
    wavefunction: Wavefunction | None = None
    statistics: CollapseStatistics | None = None
    sample: CollapseOutcome | None = None
    engine_version: str = __version__

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "engine_version": self.engine_version,
            "seed": self.seed,
            "scenario": self.scenario.echo(),
            "constants": self.constants.model_dump(),
        }
        if self.pipeline is not None:
            data["pipeline"] = self.pipeline.to_dict(self.constants)
        if self.wavefunction is not None and self.statistics is not None:
            data["wavefunction"] = self.wavefunction.to_dict()
            data["collapse"] = {
                "statistics": self.statistics.to_dict(),
                "sample": self.sample.to_dict() if self.sample is not None else None,
            }
        return data


def run_scenario(
    scenario: Scenario,
    sections: Iterable[Section] = ALL_SECTIONS,
    seed: int | None = None,
    base_constants: PhysicalConstants | None = None,
    max_workers: int = 1,
) -> Report:
    """Run the requested sections of a scenario.

    The pipeline always runs when requested; the wavefunction section runs
    only when the scenario carries one. seed overrides the scenario's seed.
    """
    wanted = set(sections)
    constants = scenario.resolve_constants(base_constants)
    pipeline: PipelineReport | None = None
    wf: Wavefunction | None = None
    stats: CollapseStatistics | None = None
    sample: CollapseOutcome | None = None
    used_seed: int | None = None

    if Section.PIPELINE in wanted:
        pipeline = run_pipeline(
            constants,
            initial=_initial_entry(scenario, constants),
            species_d=scenario.pipeline.species_d,
            radiation_fraction=scenario.pipeline.radiation_fraction,
        )

    section = scenario.wavefunction
    if Section.WAVEFUNCTION in wanted and section is not None:
        used_seed = section.seed if seed is None else seed
        try:
            wf = build_wavefunction(section.cells)
            stats = collapse_statistics(wf, section.trials, used_seed, max_workers=max_workers)
            sample = decohere(wf, used_seed)
        except CosmicodeError as e:
            raise StageError("wavefunction", e) from e

    log.info("Scenario finished", name=scenario.name, seed=used_seed)
    return Report(
        scenario=scenario,
        constants=constants,
        seed=used_seed,
        pipeline=pipeline,
        wavefunction=wf,
        statistics=stats,
        sample=sample,
    )


def _initial_entry(scenario: Scenario, constants: PhysicalConstants) -> EnsembleEntry:
    try:
        return scenario.initial_state.to_entry(constants)
    except ValidationError as e:
        raise StageError("initial_state", e) from e


def emit_report(report: Report, fmt: ReportFormat = ReportFormat.JSON) -> bytes:
    """Render a report as JSON or CSV bytes.

    JSON keeps the nested schema with sorted keys. CSV flattens the pipeline
    milestones to (stage, state, energy_gev) rows, or the collapse statistics
    to per-cell rows when the report has no pipeline.
    """
    if fmt is ReportFormat.JSON:
        return (_json_text(report.to_dict()) + "\n").encode("utf-8")

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if report.pipeline is not None:
        writer.writerow(["stage", "state", "energy_gev"])
        for m in report.pipeline.milestones:
            writer.writerow([m.stage, m.state, _num(m.energy_gev)])
    elif report.statistics is not None and report.wavefunction is not None:
        writer.writerow(["index", "attachment", "density", "count", "frequency"])
        stats = report.statistics
        for i, cell in enumerate(report.wavefunction.cells):
            writer.writerow(
                [
                    i,
                    _num(cell.attachment),
                    _num(stats.density[i]),
                    stats.counts[i],
                    _num(stats.frequencies[i]),
                ]
            )
    return buffer.getvalue().encode("utf-8")


def ladder_rows(constants: PhysicalConstants) -> list[dict[str, Any]]:
    """The mass ladder as flat rows, F5 first."""
    rows: list[dict[str, Any]] = []
    for entry in boson_ladder(constants):
        rows.append(
            {
                "symbol": entry.symbol,
                "mass_dim": entry.mass_dim,
                "kind": entry.kind.value,
                "mass_gev": entry.mass_gev(constants),
            }
        )
    return rows


def speed_rows(constants: PhysicalConstants) -> list[dict[str, Any]]:
    return [
        {"spacetime_dim": big_d, "speed": qvsl_speed(constants, big_d)}
        for big_d in range(MIN_DIM, MAX_DIM + 1)
    ]


def emit_rows(rows: Sequence[dict[str, Any]], fmt: ReportFormat) -> bytes:
    """Render a flat table as JSON or CSV."""
    if fmt is ReportFormat.JSON:
        return (_json_text(list(rows)) + "\n").encode("utf-8")
    buffer = io.StringIO()
    if rows:
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _num(v) if isinstance(v, float) else v for k, v in row.items()})
    return buffer.getvalue().encode("utf-8")


def run_sweep_files(
    paths: Sequence[Path],
    out_dir: Path,
    fmt: ReportFormat = ReportFormat.JSON,
    base_constants: PhysicalConstants | None = None,
    max_workers: int = 4,
) -> list[Path]:
    """Run several scenario files concurrently, writing one report per scenario name."""
    scenarios = [parse_scenario(p.read_bytes()) for p in paths]
    names = [s.name if s.name != "scenario" else p.stem for s, p in zip(scenarios, paths)]
    if len(set(names)) != len(names):
        raise StageError("sweep", CosmicodeError(f"duplicate scenario names: {names}"))

    out_dir.mkdir(parents=True, exist_ok=True)

    def _one(job: tuple[Scenario, str]) -> Path:
        scenario, name = job
        report = run_scenario(scenario, base_constants=base_constants)
        target = out_dir / f"{name}.{fmt.value}"
        target.write_bytes(emit_report(report, fmt))
        return target

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        written = list(executor.map(_one, zip(scenarios, names)))
    log.info("Sweep finished", reports=len(written), out_dir=str(out_dir))
    return written
