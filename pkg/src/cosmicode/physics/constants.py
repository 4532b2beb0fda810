"""Physical constants and exact fine-structure-constant bookkeeping."""

from __future__ import annotations

import json
import math
import sys
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from cosmicode.errors import ConstantsError, ExponentBoundError

log = structlog.get_logger()

# CODATA 2022 recommended value
CODATA_ALPHA = 7.2973525643e-3

# Non-reduced Planck energy [GeV]
PLANCK_ENERGY_GEV = 1.22e19

DEFAULT_DARK_ENERGY_FRACTION = 0.70

MAX_ALPHA_EXPONENT = 64

# log10 of the largest finite float
MAX_FLOAT_LOG10 = math.log10(sys.float_info.max)

CONSTANT_KEYS = ("alpha", "c", "h", "planck_energy_gev", "dark_energy_fraction")


class PhysicalConstants(BaseModel):
    """Immutable set of constants in natural units (c = h = 1, energies in GeV)."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    alpha: float = Field(default=CODATA_ALPHA, gt=0.0, lt=1.0)
    c: float = Field(default=1.0, gt=0.0)
    h: float = Field(default=1.0, gt=0.0)
    planck_energy_gev: float = Field(default=PLANCK_ENERGY_GEV, gt=0.0)
    dark_energy_fraction: float = Field(default=DEFAULT_DARK_ENERGY_FRACTION, ge=0.0, lt=1.0)

    @property
    def planck_energy(self) -> float:
        """Planck energy in GeV."""
        return self.planck_energy_gev

    def with_overrides(self, **overrides: float | None) -> PhysicalConstants:
        """Return a validated copy with some fields replaced."""
        data = self.model_dump()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return load_constants(data)


def _first_error_field(exc: ValidationError) -> str:
    errors = exc.errors()
    if errors and errors[0].get("loc"):
        return str(errors[0]["loc"][0])
    return "document"


def load_constants(source: bytes | str | Mapping[str, Any] | None = None) -> PhysicalConstants:
    """Parse and validate a constants document.

    Accepts raw JSON (bytes or str) or an already decoded mapping. Absent keys
    take their defaults; unknown keys and out-of-range values raise
    ConstantsError naming the field.
    """
    if source is None:
        data: Any = {}
    elif isinstance(source, bytes | str):
        text = source.decode("utf-8") if isinstance(source, bytes) else source
        if not text.strip():
            data = {}
        else:
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise ConstantsError(
                    "document", f"malformed JSON at line {e.lineno}, column {e.colno}"
                ) from e
    else:
        data = dict(source)

    if not isinstance(data, dict):
        raise ConstantsError("document", "expected a JSON object")

    try:
        constants = PhysicalConstants.model_validate(data)
    except ValidationError as e:
        field = _first_error_field(e)
        raise ConstantsError(field, e.errors()[0]["msg"]) from e

    log.debug("Constants loaded", alpha=constants.alpha, planck_gev=constants.planck_energy_gev)
    return constants


def alpha_power(constants: PhysicalConstants, k: int) -> float:
    """Evaluate alpha**k in a single exponentiation."""
    if abs(k) > MAX_ALPHA_EXPONENT:
        raise ExponentBoundError(f"|{k}| exceeds alpha exponent bound {MAX_ALPHA_EXPONENT}")
    return constants.alpha ** int(k)


@dataclass(frozen=True)
class AlphaPower:
    """alpha**exponent with exact integer exponent arithmetic."""

    exponent: int = 0

    def __mul__(self, other: AlphaPower) -> AlphaPower:
        return AlphaPower(self.exponent + other.exponent)

    def __truediv__(self, other: AlphaPower) -> AlphaPower:
        return AlphaPower(self.exponent - other.exponent)

    def __pow__(self, power: int) -> AlphaPower:
        return AlphaPower(self.exponent * power)

    def inverse(self) -> AlphaPower:
        """Reciprocal power."""
        return AlphaPower(-self.exponent)

    def value(self, constants: PhysicalConstants) -> float:
        """Convert to a scalar. This is the only lossy step."""
        return alpha_power(constants, self.exponent)


class AlphaScaled(BaseModel):
    """A non-negative scalar held as coefficient * 10**decade * alpha**exponent.

    Masses and particle counts use this so that chains of alpha**(2n) factors
    stay exact until a number is demanded. Large counts are normalized to a
    mantissa in [1, 10) plus a decade, so products of counts and masses never
    overflow the coefficient.
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    coefficient: float = Field(ge=0.0)
    exponent: int = 0
    decade: int = 0

    @classmethod
    def of(cls, value: float | Fraction) -> AlphaScaled:
        """Wrap a plain scalar."""
        return cls(coefficient=float(value), exponent=0)

    @property
    def power(self) -> AlphaPower:
        """The alpha part."""
        return AlphaPower(self.exponent)

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0.0

    def normalized(self) -> AlphaScaled:
        """Move the coefficient's order of magnitude into the decade."""
        mantissa, shift = _split_decade(self.coefficient)
        return AlphaScaled(coefficient=mantissa, exponent=self.exponent, decade=self.decade + shift)

    def scaled(self, k: int) -> AlphaScaled:
        """Multiply by alpha**k exactly."""
        return self.model_copy(update={"exponent": self.exponent + k})

    def times(self, factor: float | Fraction) -> AlphaScaled:
        """Multiply the coefficient by a plain factor."""
        if isinstance(factor, Fraction):
            coefficient = float(Fraction(self.coefficient) * factor)
        else:
            coefficient = self.coefficient * factor
        return AlphaScaled(coefficient=coefficient, exponent=self.exponent, decade=self.decade)

    def __mul__(self, other: AlphaScaled) -> AlphaScaled:
        exponent = self.exponent + other.exponent
        decade = self.decade + other.decade
        coefficient = self.coefficient * other.coefficient
        if math.isinf(coefficient):
            left, left_shift = _split_decade(self.coefficient)
            right, right_shift = _split_decade(other.coefficient)
            coefficient = left * right
            decade += left_shift + right_shift
        return AlphaScaled(coefficient=coefficient, exponent=exponent, decade=decade)

    def value(self, constants: PhysicalConstants) -> float:
        """Scalar value; inf once it leaves the float range."""
        if self.coefficient == 0.0:
            return 0.0
        scalar = self.coefficient * alpha_power(constants, self.exponent)
        if self.decade == 0:
            return scalar
        if self.log10(constants) > MAX_FLOAT_LOG10:
            return math.inf
        half = self.decade // 2
        return scalar * 10.0**half * 10.0 ** (self.decade - half)

    def log10(self, constants: PhysicalConstants) -> float:
        """log10 of the value without materializing it."""
        if self.coefficient == 0.0:
            return -math.inf
        return (
            math.log10(self.coefficient)
            + self.decade
            + self.exponent * math.log10(constants.alpha)
        )


def _split_decade(coefficient: float) -> tuple[float, int]:
    if coefficient == 0.0:
        return 0.0, 0
    shift = math.floor(math.log10(coefficient))
    mantissa = coefficient / 10.0**shift
    # log10 can land one off near exact powers of ten
    if mantissa >= 10.0:
        mantissa, shift = mantissa / 10.0, shift + 1
    elif mantissa < 1.0:
        mantissa, shift = mantissa * 10.0, shift - 1
    return mantissa, shift
