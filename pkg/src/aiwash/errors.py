"""Error taxonomy shared across the package.

Every raised error carries a stable machine-readable ``code`` so callers
(CLI, service, tests) can branch on failures without parsing messages.
"""
from __future__ import annotations

from dataclasses import dataclass


class AiwashError(Exception):
    """Base class; ``code`` is stable across releases."""

    code = "ERROR"

    def __init__(self, message: str, *, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


@dataclass(frozen=True)
class Violation:
    """One validation finding. ``path`` locates the offending field."""

    code: str
    path: str
    message: str


class SchemaError(AiwashError):
    """Raw record cannot be decoded into the bundle schema."""

    code = "SCHEMA_ERROR"

    def __init__(self, message: str, *, byte_offset: int | None = None):
        super().__init__(message)
        self.byte_offset = byte_offset


class ValidationFailure(AiwashError):
    """Decoded record violates domain invariants."""

    code = "VALIDATION_ERROR"

    def __init__(self, violations: list[Violation]):
        joined = "; ".join(f"{v.code}@{v.path}" for v in violations) or "unspecified"
        super().__init__(f"bundle validation failed: {joined}")
        self.violations = list(violations)


class ProviderError(AiwashError):
    """Embedding provider failure. ``retriable`` hints at transient causes."""

    code = "PROVIDER_ERROR"

    def __init__(self, message: str, *, retriable: bool = False):
        super().__init__(message)
        self.retriable = retriable


class EncoderError(AiwashError):
    code = "EMPTY_EVIDENCE"


class GroundingError(AiwashError):
    """Raised with code STATS_MISSING or LAYOUT_MISMATCH."""


class TrainError(AiwashError):
    """Raised with code EMPTY_BATCH or DIVERGED."""


class PrelabelError(AiwashError):
    """Raised with code EMPTY_INPUT or DEGENERATE_RATINGS."""


class ReportError(AiwashError):
    code = "VERSION_MISMATCH"
