"""Constants and the dimensional transformation algebra."""

from cosmicode.physics.algebra import (
    QvslDirection,
    SusyDirection,
    boson_ladder,
    characteristic_energy,
    effective_rest_mass,
    leap_fission,
    leap_fusion,
    qvsl_speed,
    qvsl_transform,
    state_energy,
    superluminal_energy,
    susy_step,
    susy_walk,
    vsl_speed,
)
from cosmicode.physics.constants import (
    AlphaPower,
    AlphaScaled,
    PhysicalConstants,
    alpha_power,
    load_constants,
)
from cosmicode.physics.models import LadderEntry, OrbitalSet, ParticleKind, ParticleState

__all__ = [
    "AlphaPower",
    "AlphaScaled",
    "LadderEntry",
    "OrbitalSet",
    "ParticleKind",
    "ParticleState",
    "PhysicalConstants",
    "QvslDirection",
    "SusyDirection",
    "alpha_power",
    "boson_ladder",
    "characteristic_energy",
    "effective_rest_mass",
    "leap_fission",
    "leap_fusion",
    "load_constants",
    "qvsl_speed",
    "qvsl_transform",
    "state_energy",
    "superluminal_energy",
    "susy_step",
    "susy_walk",
    "vsl_speed",
]
