"""Hybrid space: the three-value code, the gap principle and wavefunction collapse."""

from cosmicode.hybrid.space import (
    GapResult,
    GapStatus,
    HybridCell,
    SpaceValue,
    combine,
    gap_check,
    separate,
)
from cosmicode.hybrid.wavefunction import (
    CollapseOutcome,
    ExplicitIndex,
    Wavefunction,
    build_wavefunction,
    collapse,
    collapse_statistics,
    decohere,
)

__all__ = [
    "CollapseOutcome",
    "ExplicitIndex",
    "GapResult",
    "GapStatus",
    "HybridCell",
    "SpaceValue",
    "Wavefunction",
    "build_wavefunction",
    "collapse",
    "collapse_statistics",
    "combine",
    "decohere",
    "gap_check",
    "separate",
]
