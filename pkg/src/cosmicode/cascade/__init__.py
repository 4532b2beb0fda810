"""Ensembles and the cosmic cascade engine."""

from cosmicode.cascade.engine import (
    PipelineReport,
    condense_step,
    condense_to,
    dark_sector_ratio,
    fractionalize_step,
    fractionalize_to,
    run_pipeline,
    run_sweep,
    simultaneous_fission,
)
from cosmicode.cascade.ensemble import Ensemble, EnsembleEntry, Ledger

__all__ = [
    "Ensemble",
    "EnsembleEntry",
    "Ledger",
    "PipelineReport",
    "condense_step",
    "condense_to",
    "dark_sector_ratio",
    "fractionalize_step",
    "fractionalize_to",
    "run_pipeline",
    "run_sweep",
    "simultaneous_fission",
]
