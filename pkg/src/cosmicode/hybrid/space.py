"""Three-value space code and the gap principle."""

from __future__ import annotations

import math
from collections.abc import Iterable
from enum import StrEnum
from functools import reduce

import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from cosmicode.errors import GapInputError, WavefunctionError
from cosmicode.physics.constants import PhysicalConstants

log = structlog.get_logger()

BOUNDARY_TOLERANCE = 1e-12

COMPLETE_ATTACHMENT = "complete attachment"
COMPLETE_DETACHMENT = "complete detachment"
BELOW_BOUND = "dx*dp below h/4pi"


class SpaceValue(StrEnum):
    """Cosmic code value of a region of space."""

    ATTACHMENT = "attachment"
    DETACHMENT = "detachment"
    HYBRID = "hybrid"


class GapStatus(StrEnum):
    """Outcome of the gap check."""

    SATISFIED = "satisfied"
    BOUNDARY = "boundary"
    VIOLATED = "violated"


def combine(v1: SpaceValue, v2: SpaceValue) -> SpaceValue:
    """Attachment with detachment gives hybrid; equal values are idempotent; hybrid absorbs."""
    if v1 is v2:
        return v1
    return SpaceValue.HYBRID


def combine_all(values: Iterable[SpaceValue]) -> SpaceValue:
    """Fold combine over a non-empty sequence."""
    return reduce(combine, values)


class HybridCell(BaseModel):
    """A region holding attachment weight a and detachment weight 1 - a.

    Both pure limits are excluded, so 0 < a < 1 strictly.
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    attachment: float = Field(gt=0.0, lt=1.0)

    @classmethod
    def of(cls, attachment: float) -> HybridCell:
        """Build a cell, raising WavefunctionError for a pure value."""
        try:
            return cls(attachment=attachment)
        except ValidationError as e:
            raise WavefunctionError(
                f"attachment weight {attachment} must lie strictly inside (0, 1)"
            ) from e

    @property
    def detachment(self) -> float:
        return 1.0 - self.attachment

    @property
    def value(self) -> SpaceValue:
        return SpaceValue.HYBRID


def separate(cell: HybridCell) -> tuple[SpaceValue, SpaceValue]:
    """Split a hybrid cell into its pure constituents."""
    return SpaceValue.ATTACHMENT, SpaceValue.DETACHMENT


class GapResult(BaseModel):
    """Gap check classification with violation reasons."""

    model_config = ConfigDict(frozen=True)

    status: GapStatus
    reasons: tuple[str, ...] = ()


def gap_bound(constants: PhysicalConstants) -> float:
    """h / 4pi."""
    return constants.h / (4.0 * math.pi)


def gap_check(constants: PhysicalConstants, dx: float, dp: float) -> GapResult:
    """Classify a gap against dx * dp >= h / 4pi.

    dx = 0 is complete attachment and dp = 0 is complete detachment; both are
    reported when both hold.
    """
    for name, value in (("dx", dx), ("dp", dp)):
        if math.isnan(value) or value < 0:
            raise GapInputError(f"{name} must be non-negative, got {value}")

    reasons = []
    if dx == 0:
        reasons.append(COMPLETE_ATTACHMENT)
    if dp == 0:
        reasons.append(COMPLETE_DETACHMENT)
    if reasons:
        return GapResult(status=GapStatus.VIOLATED, reasons=tuple(reasons))

    bound = gap_bound(constants)
    product = dx * dp
    if math.isclose(product, bound, rel_tol=BOUNDARY_TOLERANCE):
        return GapResult(status=GapStatus.BOUNDARY)
    if product > bound:
        return GapResult(status=GapStatus.SATISFIED)
    return GapResult(status=GapStatus.VIOLATED, reasons=(BELOW_BOUND,))
