"""Data models for particle states, dimensional orbitals and the mass ladder."""

from __future__ import annotations

from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from cosmicode.physics.constants import AlphaScaled, PhysicalConstants

MIN_DIM = 4
MAX_DIM = 11
MAX_ORBITALS = MAX_DIM - MIN_DIM


class ParticleKind(StrEnum):
    """Boson or fermion."""

    BOSON = "boson"
    FERMION = "fermion"

    @property
    def symbol(self) -> str:
        return "B" if self is ParticleKind.BOSON else "F"


class ParticleState(BaseModel):
    """A particle with space-time dimension D and mass dimension d.

    rest_mass is kept as coefficient * alpha**exponent so QVSL and
    supersymmetry steps never touch the float coefficient.
    """

    model_config = ConfigDict(frozen=True)

    spacetime_dim: int = Field(ge=MIN_DIM, le=MAX_DIM)
    mass_dim: int = Field(ge=MIN_DIM, le=MAX_DIM)
    kind: ParticleKind = ParticleKind.BOSON
    rest_mass: AlphaScaled
    orbital_count: int = Field(default=0, ge=0, le=MAX_ORBITALS)

    @field_validator("rest_mass")
    @classmethod
    def _positive_mass(cls, value: AlphaScaled) -> AlphaScaled:
        if value.coefficient <= 0.0:
            raise ValueError("rest mass must be positive")
        return value

    @classmethod
    def make(
        cls,
        spacetime_dim: int,
        mass_dim: int,
        mass_gev: float,
        kind: ParticleKind = ParticleKind.BOSON,
        alpha_exponent: int = 0,
        orbital_count: int = 0,
    ) -> ParticleState:
        """Build a state from a plain mass in GeV and an optional alpha exponent."""
        return cls(
            spacetime_dim=spacetime_dim,
            mass_dim=mass_dim,
            kind=kind,
            rest_mass=AlphaScaled(coefficient=mass_gev, exponent=alpha_exponent),
            orbital_count=orbital_count,
        )

    @property
    def label(self) -> str:
        """Compact name such as 4D10d."""
        return f"{self.spacetime_dim}D{self.mass_dim}d"

    def rest_mass_gev(self, constants: PhysicalConstants) -> float:
        """Rest mass as a scalar in GeV."""
        return self.rest_mass.value(constants)

    def replace(self, **changes: Any) -> ParticleState:
        """Create a validated copy with updated fields."""
        data: dict[str, Any] = {
            "spacetime_dim": self.spacetime_dim,
            "mass_dim": self.mass_dim,
            "kind": self.kind,
            "rest_mass": self.rest_mass,
            "orbital_count": self.orbital_count,
        }
        data.update(changes)
        return ParticleState(**data)


class OrbitalLabel(BaseModel):
    """One dimensional orbital: a dimension index and the kinds it carries."""

    model_config = ConfigDict(frozen=True)

    dimension: int = Field(ge=MIN_DIM + 1, le=MAX_DIM)
    kinds: tuple[ParticleKind, ...]

    @property
    def symbol(self) -> str:
        return "".join(f"{k.symbol}{self.dimension}" for k in self.kinds)


class OrbitalSet(BaseModel):
    """Dimensional orbitals separated from a core particle."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[OrbitalLabel, ...] = ()

    @model_validator(mode="after")
    def _ascending(self) -> OrbitalSet:
        dims = [label.dimension for label in self.labels]
        if any(b <= a for a, b in zip(dims, dims[1:])):
            raise ValueError("orbital labels must strictly ascend in dimension")
        return self

    @classmethod
    def above(cls, core_dim: int) -> OrbitalSet:
        """Orbitals for every dimension between core_dim + 1 and 11.

        Each orbital pairs a boson and a fermion except the top one, which
        holds only B11, so the rendered pattern reads B5F5B6F6...B11.
        """
        labels = []
        for dim in range(core_dim + 1, MAX_DIM + 1):
            kinds: tuple[ParticleKind, ...] = (ParticleKind.BOSON, ParticleKind.FERMION)
            if dim == MAX_DIM:
                kinds = (ParticleKind.BOSON,)
            labels.append(OrbitalLabel(dimension=dim, kinds=kinds))
        return cls(labels=tuple(labels))

    @property
    def count(self) -> int:
        return len(self.labels)

    def pattern(self) -> str:
        """Render the orbitals, e.g. B5F5B6F6B7F7B8F8B9F9B10F10B11."""
        return "".join(label.symbol for label in self.labels)


class LadderEntry(BaseModel):
    """One rung of the supersymmetry mass ladder."""

    model_config = ConfigDict(frozen=True)

    mass_dim: int = Field(ge=MIN_DIM + 1, le=MAX_DIM)
    kind: ParticleKind
    mass: AlphaScaled

    @property
    def symbol(self) -> str:
        return f"{self.kind.symbol}{self.mass_dim}"

    def mass_gev(self, constants: PhysicalConstants) -> float:
        return self.mass.value(constants)
