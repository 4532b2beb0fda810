"""Particle ensembles and the mass-energy conservation ledger."""

from __future__ import annotations

import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from cosmicode.physics.constants import AlphaScaled, PhysicalConstants
from cosmicode.physics.models import MIN_DIM, ParticleState

# Counts above this are held and reported in log10 space
LOG_SPACE_THRESHOLD = 1e15

CONSERVATION_TOLERANCE = 1e-12


class EnsembleEntry(BaseModel):
    """A population of identical particles.

    The count is a real number: every fractionalization step multiplies it by
    the irrational 1/alpha**2. It shares the alpha-exponent representation of
    the mass, so count * mass is exact in the exponent. Counts above
    LOG_SPACE_THRESHOLD keep only a mantissa and a decade.
    """

    model_config = ConfigDict(frozen=True)

    state: ParticleState
    count: AlphaScaled = Field(default_factory=lambda: AlphaScaled.of(1.0))

    @field_validator("count")
    @classmethod
    def _log_space_count(cls, count: AlphaScaled) -> AlphaScaled:
        if count.coefficient > LOG_SPACE_THRESHOLD:
            return count.normalized()
        return count

    @classmethod
    def single(cls, state: ParticleState, count: float = 1.0) -> EnsembleEntry:
        return cls(state=state, count=AlphaScaled.of(count))

    def count_value(self, constants: PhysicalConstants) -> float:
        return self.count.value(constants)

    def total_mass(self, constants: PhysicalConstants) -> float:
        """count * rest_mass in GeV."""
        return (self.count * self.state.rest_mass).value(constants)

    def total_energy(self, constants: PhysicalConstants) -> float:
        """count * 4D-equivalent energy; equals total_mass for 4D states."""
        boost = -2 * (self.state.spacetime_dim - MIN_DIM)
        return (self.count * self.state.rest_mass).scaled(boost).value(constants) * constants.c**2

    def count_is_log_space(self, constants: PhysicalConstants) -> bool:
        if self.count.is_zero:
            return False
        return self.count.log10(constants) > math.log10(LOG_SPACE_THRESHOLD)

    def summary(self, constants: PhysicalConstants) -> dict[str, Any]:
        """Report view; counts above the threshold are given as log10."""
        count: float | dict[str, float]
        if self.count_is_log_space(constants):
            count = {"log10": self.count.log10(constants)}
        else:
            count = self.count_value(constants)
        return {
            "state": self.state.label,
            "kind": self.state.kind.value,
            "rest_mass_gev": self.state.rest_mass_gev(constants),
            "count": count,
            "orbital_count": self.state.orbital_count,
            "energy_gev": self.total_energy(constants),
        }


class Ledger(BaseModel):
    """Initial versus final total mass-energy."""

    model_config = ConfigDict(frozen=True)

    initial_gev: float
    final_gev: float

    @property
    def relative_error(self) -> float:
        if self.initial_gev == 0.0:
            return abs(self.final_gev)
        return abs(self.final_gev - self.initial_gev) / abs(self.initial_gev)

    def is_balanced(self, tolerance: float = CONSERVATION_TOLERANCE) -> bool:
        return self.relative_error <= tolerance


class Ensemble(BaseModel):
    """A multiset of particle populations plus free radiation energy."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[EnsembleEntry, ...] = ()
    radiation_energy: float = Field(default=0.0, ge=0.0)

    @classmethod
    def of(cls, *entries: EnsembleEntry, radiation_energy: float = 0.0) -> Ensemble:
        return cls(entries=tuple(entries), radiation_energy=radiation_energy)

    def total_energy(self, constants: PhysicalConstants) -> float:
        """Sum of count * energy over entries plus radiation."""
        parts = [e.total_energy(constants) for e in self.entries]
        parts.append(self.radiation_energy)
        return math.fsum(parts)

    def ledger_against(self, initial_gev: float, constants: PhysicalConstants) -> Ledger:
        return Ledger(initial_gev=initial_gev, final_gev=self.total_energy(constants))
