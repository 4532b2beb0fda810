"""Cascade engine: fractionalization, condensation, simultaneous fission and the cosmic pipeline."""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from fractions import Fraction
from typing import Any

import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from cosmicode.cascade.ensemble import Ensemble, EnsembleEntry, Ledger
from cosmicode.errors import CosmicodeError, DomainError, EnsembleError, StageError
from cosmicode.physics.algebra import (
    QvslDirection,
    leap_fission,
    qvsl_transform,
    split_orbitals,
    state_energy,
)
from cosmicode.physics.constants import AlphaScaled, PhysicalConstants
from cosmicode.physics.models import MAX_DIM, MIN_DIM, ParticleKind, ParticleState

log = structlog.get_logger()

FISSION_SOURCE_DIM = 9
DEFAULT_SPECIES: tuple[int, ...] = (9, 8, 7, 6, 5, 4)
BARYONIC_DIM = MIN_DIM

# The string carries one extra dimension, for gravity, above its QVSL image
GRAVITY_RUNGS = 1

# 10D4d string whose 4D-equivalent energy is E_Planck * alpha**2
DEFAULT_INITIAL_D = 10
DEFAULT_INITIAL_DIM = 4
DEFAULT_INITIAL_EXPONENT = 14


class Milestone(BaseModel):
    """A recorded pipeline stage."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    stage: str
    state: str
    energy_gev: float


class SectorFractions(BaseModel):
    """Share of the total budget held by each sector."""

    model_config = ConfigDict(frozen=True)

    dark: float = Field(ge=0.0, le=1.0)
    baryonic: float = Field(ge=0.0, le=1.0)
    dark_energy: float = Field(ge=0.0, le=1.0)

    @property
    def total(self) -> float:
        return self.dark + self.baryonic + self.dark_energy


class SectorSplit(BaseModel):
    """Dark-to-baryonic mass ratio plus the budget fractions."""

    model_config = ConfigDict(frozen=True)

    ratio: float
    fractions: SectorFractions


class PipelineReport(BaseModel):
    """Outcome of a full pipeline run."""

    model_config = ConfigDict(frozen=True)

    milestones: tuple[Milestone, ...]
    sector_fractions: SectorFractions
    dark_to_baryonic_ratio: float
    ledger: Ledger
    ensemble: Ensemble
    notes: tuple[str, ...] = ()

    def to_dict(self, constants: PhysicalConstants) -> dict[str, Any]:
        """JSON view: milestones, sector fractions, ledger, species and notes."""
        return {
            "milestones": [m.model_dump() for m in self.milestones],
            "sector_fractions": self.sector_fractions.model_dump(),
            "dark_to_baryonic_ratio": self.dark_to_baryonic_ratio,
            "ledger": self.ledger.model_dump(),
            "species": [e.summary(constants) for e in self.ensemble.entries],
            "radiation_energy_gev": self.ensemble.radiation_energy,
            "notes": list(self.notes),
        }


def fractionalize_step(constants: PhysicalConstants, entry: EnsembleEntry) -> EnsembleEntry:
    """One particle at d becomes 1/alpha**2 particles at d - 1, each alpha**2 lighter."""
    d = entry.state.mass_dim
    if d <= MIN_DIM:
        raise EnsembleError(f"cannot fractionalize {entry.state.label} below d={MIN_DIM}")
    state = entry.state.replace(mass_dim=d - 1, rest_mass=entry.state.rest_mass.scaled(2))
    return EnsembleEntry(state=state, count=entry.count.scaled(-2))


def fractionalize_to(
    constants: PhysicalConstants, entry: EnsembleEntry, target_d: int
) -> EnsembleEntry:
    """Repeated fractionalization down to target_d."""
    if not MIN_DIM <= target_d <= entry.state.mass_dim:
        raise EnsembleError(
            f"target d={target_d} outside [{MIN_DIM}, {entry.state.mass_dim}]"
        )
    steps = entry.state.mass_dim - target_d
    for _ in range(steps):
        entry = fractionalize_step(constants, entry)
    log.debug("Fractionalized", target=entry.state.label, steps=steps)
    return entry


def condense_step(constants: PhysicalConstants, entry: EnsembleEntry) -> EnsembleEntry:
    """Inverse of fractionalize_step: alpha**2 of the particles merge into one at d + 1."""
    d = entry.state.mass_dim
    if d >= MAX_DIM:
        raise EnsembleError(f"cannot condense {entry.state.label} above d={MAX_DIM}")
    state = entry.state.replace(mass_dim=d + 1, rest_mass=entry.state.rest_mass.scaled(-2))
    return EnsembleEntry(state=state, count=entry.count.scaled(2))


def condense_to(
    constants: PhysicalConstants, entry: EnsembleEntry, target_d: int
) -> EnsembleEntry:
    """Repeated condensation up to target_d."""
    if not entry.state.mass_dim <= target_d <= MAX_DIM:
        raise EnsembleError(f"target d={target_d} outside [{entry.state.mass_dim}, {MAX_DIM}]")
    for _ in range(target_d - entry.state.mass_dim):
        entry = condense_step(constants, entry)
    return entry


def simultaneous_fission(
    constants: PhysicalConstants,
    entry: EnsembleEntry,
    species_d: Sequence[int] = DEFAULT_SPECIES,
    radiation_fraction: float = 0.0,
) -> Ensemble:
    """Split one population equally by mass and number across species.

    Species below the source dimension come from leap_fission with
    n = d - d'; the source dimension itself keeps its particles but
    separates its 11 - d orbitals (n = 0).
    """
    if not species_d:
        raise EnsembleError("species list is empty")
    if not 0.0 <= radiation_fraction < 1.0:
        raise EnsembleError(f"radiation fraction {radiation_fraction} outside [0, 1)")
    if len(set(species_d)) != len(species_d):
        raise EnsembleError(f"duplicate species in {list(species_d)}")

    source = entry.state
    for d in species_d:
        if not MIN_DIM <= d <= source.mass_dim:
            raise EnsembleError(f"species d={d} outside [{MIN_DIM}, {source.mass_dim}]")

    share = Fraction(1, len(species_d))
    count = entry.count.times(share)
    mass = source.rest_mass.times(1.0 - radiation_fraction)
    radiation = radiation_fraction * entry.total_energy(constants)

    products: list[EnsembleEntry] = []
    for d in species_d:
        n = source.mass_dim - d
        if n == 0:
            core, _ = split_orbitals(source, 0)
        else:
            core, _ = leap_fission(source, n)
        products.append(EnsembleEntry(state=core.replace(rest_mass=mass), count=count))

    log.info(
        "Simultaneous fission",
        source=source.label,
        species=[p.state.label for p in products],
        radiation_fraction=radiation_fraction,
    )
    return Ensemble.of(*products, radiation_energy=radiation)


def dark_sector_ratio(ensemble: Ensemble, constants: PhysicalConstants) -> SectorSplit:
    """Dark-to-baryonic mass ratio and sector fractions.

    4d is baryonic and every higher mass dimension is dark. The dark energy
    fraction is reserved from the budget before the matter split. Sums run
    over exact rationals of the entry energies so equal splits give exact
    integer ratios.
    """
    baryonic = [e for e in ensemble.entries if e.state.mass_dim == BARYONIC_DIM]
    dark = [e for e in ensemble.entries if e.state.mass_dim > BARYONIC_DIM]
    if len(baryonic) != 1:
        raise EnsembleError(f"expected exactly one {BARYONIC_DIM}d entry, found {len(baryonic)}")
    if not dark:
        raise EnsembleError("ensemble has no dark sector")

    baryonic_mass = Fraction(baryonic[0].total_energy(constants))
    if baryonic_mass == 0:
        raise EnsembleError("baryonic entry is empty")
    dark_mass = sum((Fraction(e.total_energy(constants)) for e in dark), Fraction(0))
    ratio = dark_mass / baryonic_mass

    dark_energy = Fraction(constants.dark_energy_fraction)
    matter = 1 - dark_energy
    fractions = SectorFractions(
        dark=float(matter * ratio / (ratio + 1)),
        baryonic=float(matter / (ratio + 1)),
        dark_energy=float(dark_energy),
    )
    return SectorSplit(ratio=float(ratio), fractions=fractions)


def default_initial_entry(constants: PhysicalConstants) -> EnsembleEntry:
    """One 10D4d string whose QVSL image is a 4D10d particle of mass E_Planck * alpha**2."""
    state = ParticleState(
        spacetime_dim=DEFAULT_INITIAL_D,
        mass_dim=DEFAULT_INITIAL_DIM,
        kind=ParticleKind.BOSON,
        rest_mass=AlphaScaled(
            coefficient=constants.planck_energy, exponent=DEFAULT_INITIAL_EXPONENT
        ),
    )
    return EnsembleEntry.single(state)


def _ladder_energy(constants: PhysicalConstants, state: ParticleState, rungs: int) -> float:
    """Per-particle 4D-equivalent energy of state moved down the mass ladder by rungs."""
    moved = state.replace(rest_mass=state.rest_mass.scaled(2 * rungs))
    return state_energy(constants, moved)


@contextmanager
def _stage(name: str) -> Iterator[None]:
    try:
        yield
    except StageError:
        raise
    except (CosmicodeError, ValidationError) as e:
        log.warning("Pipeline stage failed", stage=name, error=str(e))
        raise StageError(name, e) from e


def run_pipeline(
    constants: PhysicalConstants,
    initial: EnsembleEntry | None = None,
    species_d: Sequence[int] = DEFAULT_SPECIES,
    radiation_fraction: float = 0.0,
) -> PipelineReport:
    """QVSL transform -> fractionalization to 4D9d -> simultaneous fission -> sector ratio.

    Milestone energies are per-particle 4D-equivalent energies of the evolving
    population. The string sits one rung above its QVSL image, the extra
    dimension being gravity's. The fission milestone carries the baryonic
    species down the ladder from the source dimension to its own.
    """
    entry = initial if initial is not None else default_initial_entry(constants)
    with _stage("initial_state"):
        initial_energy = entry.total_energy(constants)
        if not math.isfinite(initial_energy):
            raise DomainError(
                f"total energy of {entry.state.label} exceeds the float range "
                f"(log10 count {entry.count.log10(constants):.1f})"
            )
        milestones = [
            Milestone(
                stage="string",
                state=entry.state.label,
                energy_gev=_ladder_energy(constants, entry.state, -GRAVITY_RUNGS),
            )
        ]
    notes: list[str] = []
    log.info("Pipeline started", initial=entry.state.label, energy_gev=initial_energy)

    with _stage("qvsl_transform"):
        n = entry.state.spacetime_dim - MIN_DIM
        if n > 0:
            entry = entry.model_copy(
                update={"state": qvsl_transform(entry.state, n, QvslDirection.RAISE_D)}
            )
        milestones.append(
            Milestone(
                stage="qvsl_transform",
                state=entry.state.label,
                energy_gev=state_energy(constants, entry.state),
            )
        )

    with _stage("fractionalization"):
        if entry.state.mass_dim <= FISSION_SOURCE_DIM:
            raise EnsembleError(
                f"{entry.state.label} must sit above d={FISSION_SOURCE_DIM} to fractionalize"
            )
        entry = fractionalize_to(constants, entry, FISSION_SOURCE_DIM)
        milestones.append(
            Milestone(
                stage="fractionalization",
                state=entry.state.label,
                energy_gev=state_energy(constants, entry.state),
            )
        )

    with _stage("simultaneous_fission"):
        ensemble = simultaneous_fission(constants, entry, species_d, radiation_fraction)
        baryonic = min(ensemble.entries, key=lambda e: e.state.mass_dim)
        milestones.append(
            Milestone(
                stage="simultaneous_fission",
                state=baryonic.state.label,
                energy_gev=_ladder_energy(
                    constants, baryonic.state, FISSION_SOURCE_DIM - baryonic.state.mass_dim
                ),
            )
        )
        if FISSION_SOURCE_DIM in species_d:
            notes.append(
                f"surviving {FISSION_SOURCE_DIM}d particles take n = 0 fission and carry "
                f"{MAX_DIM - FISSION_SOURCE_DIM} dimensional orbitals"
            )

    with _stage("dark_sector_ratio"):
        split = dark_sector_ratio(ensemble, constants)

    ledger = ensemble.ledger_against(initial_energy, constants)
    if not ledger.is_balanced():
        raise StageError(
            "ledger", EnsembleError(f"relative energy drift {ledger.relative_error:.3e}")
        )

    log.info(
        "Pipeline finished",
        ratio=split.ratio,
        dark=split.fractions.dark,
        baryonic=split.fractions.baryonic,
    )
    return PipelineReport(
        milestones=tuple(milestones),
        sector_fractions=split.fractions,
        dark_to_baryonic_ratio=split.ratio,
        ledger=ledger,
        ensemble=ensemble,
        notes=tuple(notes),
    )


def run_sweep(
    constants_list: Sequence[PhysicalConstants],
    initial: EnsembleEntry | None = None,
    max_workers: int = 4,
) -> list[PipelineReport]:
    """Run independent pipelines concurrently; results keep input order."""
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(lambda c: run_pipeline(c, initial), constants_list))
