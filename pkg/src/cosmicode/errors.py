"""Exception hierarchy for Cosmicode."""

from __future__ import annotations


class CosmicodeError(Exception):
    """Base error for all simulation failures."""
    pass


class ConstantsError(CosmicodeError):
    """Malformed or out-of-range constants document."""

    def __init__(self, field: str, message: str) -> None:
        self.field = field
        super().__init__(f"{field}: {message}")


class DomainError(CosmicodeError, ValueError):
    """Input outside the domain of a formula."""
    pass


class ExponentBoundError(CosmicodeError):
    """Alpha exponent outside the supported bound."""
    pass


class DimensionError(CosmicodeError):
    """Space-time or mass dimension outside [4, 11]."""
    pass


class EnsembleError(CosmicodeError):
    """Ensemble operation precondition failed."""
    pass


class GapInputError(DomainError):
    """Negative position or momentum spread."""
    pass


class WavefunctionError(CosmicodeError):
    """Invalid hybrid cells or collapse selector."""
    pass


class ScenarioError(CosmicodeError):
    """Scenario document could not be parsed or validated."""

    def __init__(
        self,
        message: str,
        field: str | None = None,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        self.field = field
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f" (line {line}, column {column})"
        prefix = f"{field}: " if field else ""
        super().__init__(f"{prefix}{message}{location}")


class StageError(CosmicodeError):
    """Runtime failure inside a named pipeline stage."""

    def __init__(self, stage: str, cause: Exception) -> None:
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage '{stage}' failed: {cause}")
