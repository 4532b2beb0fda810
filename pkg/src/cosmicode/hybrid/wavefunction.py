"""Wavefunctions built from hybrid cells, and their collapse."""

from __future__ import annotations

import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import structlog

from cosmicode.errors import WavefunctionError
from cosmicode.hybrid.space import HybridCell, SpaceValue

log = structlog.get_logger()

# Detachment floor guarding the a/t singularity
DENSITY_EPSILON = 1e-9

DEFAULT_CHUNK_SIZE = 10_000


@dataclass(frozen=True)
class Wavefunction:
    """Ordered hybrid cells with a normalized probability density."""

    cells: tuple[HybridCell, ...]
    density: tuple[float, ...]
    _cumulative: np.ndarray = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def cumulative(self) -> np.ndarray:
        """Right edges c_1..c_n of the half-open sampling intervals."""
        return self._cumulative

    def to_dict(self) -> dict[str, Any]:
        return {"cells": [{"a": cell.attachment} for cell in self.cells]}


def build_wavefunction(cells: Sequence[HybridCell | float]) -> Wavefunction:
    """Density proportional to attachment and inversely proportional to detachment.

    w_i = a_i / t_i, rho_i = w_i / sum(w).
    """
    if not cells:
        raise WavefunctionError("wavefunction needs at least one cell")
    hybrid = tuple(c if isinstance(c, HybridCell) else HybridCell.of(c) for c in cells)

    a = np.array([c.attachment for c in hybrid], dtype=np.float64)
    t = np.maximum(1.0 - a, DENSITY_EPSILON)
    weights = a / t
    density = weights / weights.sum()
    cumulative = np.cumsum(density)

    return Wavefunction(
        cells=hybrid,
        density=tuple(float(x) for x in density),
        _cumulative=cumulative,
    )


@dataclass(frozen=True)
class CollapseOutcome:
    """Attachment at the chosen cell and detachment everywhere else."""

    chosen_index: int
    size: int

    @property
    def post_cells(self) -> tuple[SpaceValue, ...]:
        return tuple(
            SpaceValue.ATTACHMENT if i == self.chosen_index else SpaceValue.DETACHMENT
            for i in range(self.size)
        )

    @property
    def post_density(self) -> tuple[float, ...]:
        return tuple(1.0 if i == self.chosen_index else 0.0 for i in range(self.size))

    def to_dict(self) -> dict[str, Any]:
        return {"chosen_index": self.chosen_index, "post": [v.value for v in self.post_cells]}


@dataclass(frozen=True)
class ExplicitIndex:
    """Selector forcing collapse onto one cell."""

    index: int


Selector = ExplicitIndex | np.random.Generator


def _sample(cumulative: np.ndarray, u: np.ndarray | float) -> np.ndarray:
    # side="right" puts u == c_i into interval i, giving [c_i, c_{i+1})
    idx = np.searchsorted(cumulative, u, side="right")
    return np.minimum(idx, len(cumulative) - 1)


def collapse(wf: Wavefunction, selector: Selector) -> CollapseOutcome:
    """Collapse onto one cell chosen explicitly or sampled with probability rho_i."""
    if isinstance(selector, ExplicitIndex):
        if not 0 <= selector.index < wf.size:
            raise WavefunctionError(f"index {selector.index} outside [0, {wf.size})")
        index = selector.index
    else:
        index = int(_sample(wf.cumulative, selector.random()))
    return CollapseOutcome(chosen_index=index, size=wf.size)


def decohere(wf: Wavefunction | CollapseOutcome, environment_seed: int) -> CollapseOutcome:
    """Collapse triggered by an environment; already collapsed states are returned as is."""
    if isinstance(wf, CollapseOutcome):
        return wf
    return collapse(wf, np.random.default_rng(environment_seed))


@dataclass(frozen=True)
class CollapseStatistics:
    """Empirical collapse frequencies over seeded trials."""

    trials: int
    seed: int
    counts: tuple[int, ...]
    density: tuple[float, ...]

    @property
    def frequencies(self) -> tuple[float, ...]:
        return tuple(c / self.trials for c in self.counts)

    @property
    def max_deviation(self) -> float:
        return max(abs(f - p) for f, p in zip(self.frequencies, self.density))

    def to_dict(self) -> dict[str, Any]:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "counts": list(self.counts),
            "frequencies": list(self.frequencies),
            "density": list(self.density),
            "max_deviation": self.max_deviation,
        }


def _count_chunk(cumulative: np.ndarray, seed: np.random.SeedSequence, size: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    idx = _sample(cumulative, rng.random(size))
    return np.bincount(idx, minlength=len(cumulative))


def collapse_statistics(
    wf: Wavefunction,
    trials: int,
    seed: int,
    max_workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> CollapseStatistics:
    """Run seeded collapse trials in chunks.

    Each chunk draws from its own stream spawned from the seed, so the counts
    do not depend on the worker count or completion order.
    """
    if trials < 1:
        raise WavefunctionError(f"trials must be at least 1, got {trials}")

    n_chunks = math.ceil(trials / chunk_size)
    sizes = [chunk_size] * (n_chunks - 1) + [trials - chunk_size * (n_chunks - 1)]
    streams = np.random.SeedSequence(seed).spawn(n_chunks)

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        parts = list(
            executor.map(lambda job: _count_chunk(wf.cumulative, *job), zip(streams, sizes))
        )
    counts = np.sum(parts, axis=0)

    stats = CollapseStatistics(
        trials=trials,
        seed=seed,
        counts=tuple(int(c) for c in counts),
        density=wf.density,
    )
    log.info("Collapse statistics", trials=trials, seed=seed, max_deviation=stats.max_deviation)
    return stats
