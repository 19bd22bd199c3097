"""Exception types shared across the package."""

from __future__ import annotations


class TsdError(Exception):
    """Base class for all tsdetect errors."""


class NoRecognizedFilesError(TsdError):
    """No file under the project root matched any known extension."""


class EmptyRegistryError(TsdError):
    """Toggle filtering left an empty registry; usually a wrong config path.

    Carries the (empty) registry so callers that treat this as advisory can
    continue with it.
    """

    def __init__(self, message: str, registry=None):
        super().__init__(message)
        self.registry = registry


class DuplicatePatternError(TsdError):
    """Two reports for the same pattern were passed to assemble()."""


class GroundTruthFormatError(TsdError):
    """A ground-truth annotation file could not be parsed."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class UsageError(TsdError):
    """Bad command-line arguments or unusable user input."""


class InternalInvariantError(TsdError):
    """An output document violated its own count invariants."""
