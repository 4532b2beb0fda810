"""Scenario documents: schema, defaults and parsing."""

from __future__ import annotations

import json
from typing import Any

import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from cosmicode.cascade.engine import DEFAULT_SPECIES
from cosmicode.cascade.ensemble import EnsembleEntry
from cosmicode.errors import ConstantsError, ScenarioError
from cosmicode.physics.constants import AlphaScaled, PhysicalConstants, load_constants
from cosmicode.physics.models import MAX_DIM, MIN_DIM, ParticleKind, ParticleState

log = structlog.get_logger()

DEFAULT_TRIALS = 100_000


class _Section(BaseModel):
    model_config = ConfigDict(
        frozen=True, extra="forbid", populate_by_name=True, allow_inf_nan=False
    )


class ConstantsOverrides(_Section):
    """Optional replacements for the default constants."""

    alpha: float | None = None
    c: float | None = None
    h: float | None = None
    planck_energy_gev: float | None = None
    dark_energy_fraction: float | None = None

    def resolve(self, base: PhysicalConstants | None = None) -> PhysicalConstants:
        """Apply overrides on top of base (or the defaults) and validate."""
        data = (base or PhysicalConstants()).model_dump()
        data.update(self.model_dump(exclude_none=True))
        return load_constants(data)


class InitialState(_Section):
    """The particle population that enters the pipeline."""

    spacetime_dim: int = Field(default=10, ge=MIN_DIM, le=MAX_DIM, alias="D")
    mass_dim: int = Field(default=4, ge=MIN_DIM, le=MAX_DIM, alias="d")
    kind: ParticleKind = ParticleKind.BOSON
    mass_gev: float | None = Field(default=None, gt=0.0)
    count: float = Field(default=1.0, ge=0.0)

    def to_entry(self, constants: PhysicalConstants) -> EnsembleEntry:
        """Without mass_gev the 4D-equivalent energy is E_Planck * alpha**2."""
        if self.mass_gev is None:
            exponent = 2 + 2 * (self.spacetime_dim - MIN_DIM)
            rest_mass = AlphaScaled(coefficient=constants.planck_energy, exponent=exponent)
        else:
            rest_mass = AlphaScaled.of(self.mass_gev)
        state = ParticleState(
            spacetime_dim=self.spacetime_dim,
            mass_dim=self.mass_dim,
            kind=self.kind,
            rest_mass=rest_mass,
        )
        return EnsembleEntry(state=state, count=AlphaScaled.of(self.count))


class PipelineOptions(_Section):
    """Knobs for the simultaneous fission stage."""

    radiation_fraction: float = Field(default=0.0, ge=0.0, lt=1.0)
    species_d: tuple[int, ...] = DEFAULT_SPECIES

    @field_validator("species_d")
    @classmethod
    def _species_in_range(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if not value:
            raise ValueError("at least one species is required")
        for d in value:
            if not MIN_DIM <= d <= MAX_DIM:
                raise ValueError(f"species d={d} outside [{MIN_DIM}, {MAX_DIM}]")
        return value


class WavefunctionSection(_Section):
    """Hybrid cells to collapse and the Monte Carlo budget."""

    cells: tuple[float, ...]
    trials: int = Field(default=DEFAULT_TRIALS, ge=1)
    seed: int = Field(default=0, ge=0)

    @field_validator("cells", mode="before")
    @classmethod
    def _unwrap_cells(cls, value: Any) -> Any:
        # accept both [0.8, 0.2] and [{"a": 0.8}, {"a": 0.2}]
        if isinstance(value, list):
            return [c["a"] if isinstance(c, dict) and "a" in c else c for c in value]
        return value

    @field_validator("cells")
    @classmethod
    def _strict_hybrid(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if not value:
            raise ValueError("at least one cell is required")
        for a in value:
            if not 0.0 < a < 1.0:
                raise ValueError(f"attachment weight {a} must lie strictly inside (0, 1)")
        return value


class Scenario(_Section):
    """A complete simulation scenario; every section has defaults."""

    name: str = "scenario"
    constants: ConstantsOverrides = Field(default_factory=ConstantsOverrides)
    initial_state: InitialState = Field(default_factory=InitialState)
    pipeline: PipelineOptions = Field(default_factory=PipelineOptions)
    wavefunction: WavefunctionSection | None = None

    def resolve_constants(self, base: PhysicalConstants | None = None) -> PhysicalConstants:
        return self.constants.resolve(base)

    def echo(self) -> dict[str, Any]:
        """Canonical JSON form; parse_scenario(echo) reproduces the scenario."""
        return self.model_dump(mode="json", by_alias=True)


def _field_path(exc: ValidationError) -> str:
    loc = exc.errors()[0].get("loc", ())
    return ".".join(str(part) for part in loc) or "document"


def parse_scenario(document: bytes | str) -> Scenario:
    """Parse a UTF-8 JSON scenario, filling defaults and rejecting unknown keys."""
    if isinstance(document, bytes):
        try:
            text = document.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ScenarioError(f"document is not UTF-8: {e}") from e
    else:
        text = document

    try:
        data = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as e:
        raise ScenarioError(e.msg, line=e.lineno, column=e.colno) from e

    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")

    try:
        scenario = Scenario.model_validate(data)
    except ValidationError as e:
        raise ScenarioError(e.errors()[0]["msg"], field=_field_path(e)) from e

    try:
        scenario.resolve_constants()
    except ConstantsError as e:
        raise ScenarioError(str(e), field=f"constants.{e.field}") from e

    log.debug("Scenario parsed", name=scenario.name, wavefunction=scenario.wavefunction is not None)
    return scenario
