"""Dimensional transformation algebra.

Speeds, energies, QVSL transforms, supersymmetry steps, the boson/fermion
mass ladder and leaping fission into a core particle plus dimensional
orbitals. Every function is pure; masses move only through integer alpha
exponents.
"""

from __future__ import annotations

from enum import StrEnum

import structlog

from cosmicode.errors import DimensionError, DomainError
from cosmicode.physics.constants import AlphaScaled, PhysicalConstants, alpha_power
from cosmicode.physics.models import (
    MAX_DIM,
    MIN_DIM,
    LadderEntry,
    OrbitalSet,
    ParticleKind,
    ParticleState,
)

log = structlog.get_logger()


class QvslDirection(StrEnum):
    """Branch of the QVSL transform."""

    RAISE_D = "raise_d"  # D - n, d + n
    LOWER_D = "lower_d"  # D + n, d - n


class SusyDirection(StrEnum):
    """Direction along the supersymmetry ladder."""

    DOWN = "down"
    UP = "up"


def _check_dim(name: str, value: int) -> None:
    if not MIN_DIM <= value <= MAX_DIM:
        raise DimensionError(f"{name}={value} outside [{MIN_DIM}, {MAX_DIM}]")


def _check_positive(name: str, value: float) -> None:
    if not value > 0:
        raise DomainError(f"{name} must be positive, got {value}")


def vsl_speed(c0: float, scale_factor: float, exponent: float) -> float:
    """Continuous varying-speed-of-light reference curve c0 * a**n."""
    _check_positive("c0", c0)
    _check_positive("scale_factor", scale_factor)
    return c0 * scale_factor**exponent


def qvsl_speed(constants: PhysicalConstants, spacetime_dim: int) -> float:
    """Quantized speed of light c / alpha**(D - 4)."""
    _check_dim("D", spacetime_dim)
    return constants.c * alpha_power(constants, -(spacetime_dim - MIN_DIM))


def effective_rest_mass(constants: PhysicalConstants, m0: float, mass_dim: int) -> float:
    """Rest mass seen in 4D for a particle of mass dimension d: M0 / alpha**(2(d-4))."""
    _check_positive("M0", m0)
    _check_dim("d", mass_dim)
    return m0 * alpha_power(constants, -2 * (mass_dim - MIN_DIM))


def superluminal_energy(constants: PhysicalConstants, m0: float, spacetime_dim: int) -> float:
    """Energy M0 * c**2 / alpha**(2(D-4)) of a particle moving at the D-dimensional light speed."""
    _check_positive("M0", m0)
    _check_dim("D", spacetime_dim)
    # same exponent path as effective_rest_mass so the two agree exactly
    return effective_rest_mass(constants, m0, spacetime_dim) * constants.c**2


def characteristic_energy(constants: PhysicalConstants, mass_dim: int) -> float:
    """Energy of the B_d rung, planck * alpha**(2(11-d)), extended down to d = 4."""
    _check_dim("d", mass_dim)
    return constants.planck_energy * alpha_power(constants, 2 * (MAX_DIM - mass_dim))


def state_energy(constants: PhysicalConstants, state: ParticleState) -> float:
    """4D-equivalent energy of one particle; invariant under qvsl_transform."""
    boosted = state.rest_mass.scaled(-2 * (state.spacetime_dim - MIN_DIM))
    return boosted.value(constants) * constants.c**2


def qvsl_transform(state: ParticleState, n: int, direction: QvslDirection) -> ParticleState:
    """Trade n space-time dimensions for n mass dimensions, or back."""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")

    if direction is QvslDirection.RAISE_D:
        target_big_d, target_d, shift = state.spacetime_dim - n, state.mass_dim + n, -2 * n
    else:
        target_big_d, target_d, shift = state.spacetime_dim + n, state.mass_dim - n, 2 * n
    _check_dim("D", target_big_d)
    _check_dim("d", target_d)

    result = state.replace(
        spacetime_dim=target_big_d,
        mass_dim=target_d,
        rest_mass=state.rest_mass.scaled(shift),
    )
    log.debug("QVSL transform", source=state.label, target=result.label, n=n)
    return result


def susy_step(
    constants: PhysicalConstants, state: ParticleState, direction: SusyDirection
) -> ParticleState:
    """One varying-supersymmetry step.

    Down: B_d -> F_d and F_d -> B_{d-1}, each multiplying the mass by alpha.
    Up inverts both. The mass dimension only changes across the fermion/boson
    boundary between adjacent dimensions.
    """
    if direction is SusyDirection.DOWN:
        shift = 1
        if state.kind is ParticleKind.BOSON:
            kind, target_d = ParticleKind.FERMION, state.mass_dim
        else:
            kind, target_d = ParticleKind.BOSON, state.mass_dim - 1
    else:
        shift = -1
        if state.kind is ParticleKind.FERMION:
            kind, target_d = ParticleKind.BOSON, state.mass_dim
        else:
            kind, target_d = ParticleKind.FERMION, state.mass_dim + 1
    _check_dim("d", target_d)

    result = state.replace(kind=kind, mass_dim=target_d, rest_mass=state.rest_mass.scaled(shift))
    log.debug(
        "Supersymmetry step",
        source=f"{state.kind.symbol}{state.mass_dim}",
        target=f"{kind.symbol}{target_d}",
        mass_gev=result.rest_mass_gev(constants),
    )
    return result


def susy_walk(
    constants: PhysicalConstants, state: ParticleState, steps: int, direction: SusyDirection
) -> ParticleState:
    """Apply susy_step repeatedly."""
    if steps < 0:
        raise DomainError(f"steps must be non-negative, got {steps}")
    for _ in range(steps):
        state = susy_step(constants, state, direction)
    return state


def boson_ladder(constants: PhysicalConstants) -> list[LadderEntry]:
    """The F5 B5 F6 B6 ... F11 B11 ladder anchored at B11 = Planck energy."""
    top = AlphaScaled.of(constants.planck_energy)
    entries: list[LadderEntry] = []
    for d in range(MIN_DIM + 1, MAX_DIM + 1):
        boson_mass = top.scaled(2 * (MAX_DIM - d))
        entries.append(
            LadderEntry(mass_dim=d, kind=ParticleKind.FERMION, mass=boson_mass.scaled(1))
        )
        entries.append(LadderEntry(mass_dim=d, kind=ParticleKind.BOSON, mass=boson_mass))
    return entries


def split_orbitals(state: ParticleState, n: int) -> tuple[ParticleState, OrbitalSet]:
    """Fission d -> d - n allowing n = 0, which only separates existing orbitals."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    core_d = state.mass_dim - n
    if core_d < MIN_DIM:
        raise DimensionError(f"fission of {state.label} by {n} leaves d={core_d} below {MIN_DIM}")

    orbitals = OrbitalSet.above(core_d)
    core = state.replace(mass_dim=core_d, orbital_count=orbitals.count)
    return core, orbitals


def leap_fission(state: ParticleState, n: int) -> tuple[ParticleState, OrbitalSet]:
    """Leaping fission into a d - n core and 11 - d + n dimensional orbitals."""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    core, orbitals = split_orbitals(state, n)
    log.debug("Leap fission", source=state.label, core=core.label, orbitals=orbitals.count)
    return core, orbitals


def leap_fusion(core: ParticleState, n: int) -> ParticleState:
    """Reattach the n lowest dimensional orbitals of a core particle."""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if n > core.orbital_count:
        raise DimensionError(f"{core.label} has {core.orbital_count} orbitals, cannot fuse {n}")
    target_d = core.mass_dim + n
    _check_dim("d", target_d)
    return core.replace(mass_dim=target_d, orbital_count=MAX_DIM - target_d)
