"""tsdetect: feature-toggle usage-pattern detection for multi-language trees."""

from __future__ import annotations

__version__ = "0.1.0"

from .corpus import (
    DEFAULT_IGNORE_DIRS,
    SourceCorpus,
    SourceFile,
    corpus_from_contents,
    infer_language,
    mask,
    walk_corpus,
)
from .detectors import (
    AliasBinding,
    UsageOccurrence,
    alias_bindings,
    detect_dead,
    detect_enum,
    detect_mixed,
    detect_nested,
    detect_spread,
    find_occurrences,
    run_detectors,
)
from .errors import (
    DuplicatePatternError,
    EmptyRegistryError,
    GroundTruthFormatError,
    InternalInvariantError,
    NoRecognizedFilesError,
    TsdError,
    UsageError,
)
from .evalharness import (
    EvalResult,
    GroundTruth,
    GroundTruthRecord,
    PatternScore,
    load_ground_truth,
    score,
)
from .languages import Language
from .profiles import (
    ComponentId,
    ComponentRule,
    LanguageProfile,
    component_of,
    conditional_spans,
    enum_spans,
    get_profile,
    load_profile_overrides,
    nesting_depth_at,
    preprocessor_spans,
)
from .report import Pattern, PatternReport, assemble, render, validate_document, write
from .toggles import (
    MIN_NAME_LENGTH,
    ToggleRegistry,
    build_registry,
    extract_toggles,
    filter_toggles,
)

__all__ = [
    "AliasBinding",
    "ComponentId",
    "ComponentRule",
    "DEFAULT_IGNORE_DIRS",
    "DuplicatePatternError",
    "EmptyRegistryError",
    "EvalResult",
    "GroundTruth",
    "GroundTruthFormatError",
    "GroundTruthRecord",
    "InternalInvariantError",
    "Language",
    "LanguageProfile",
    "MIN_NAME_LENGTH",
    "NoRecognizedFilesError",
    "Pattern",
    "PatternReport",
    "PatternScore",
    "SourceCorpus",
    "SourceFile",
    "ToggleRegistry",
    "TsdError",
    "UsageError",
    "UsageOccurrence",
    "alias_bindings",
    "assemble",
    "build_registry",
    "component_of",
    "conditional_spans",
    "corpus_from_contents",
    "detect_dead",
    "detect_enum",
    "detect_mixed",
    "detect_nested",
    "detect_spread",
    "enum_spans",
    "extract_toggles",
    "filter_toggles",
    "find_occurrences",
    "get_profile",
    "infer_language",
    "load_ground_truth",
    "load_profile_overrides",
    "mask",
    "nesting_depth_at",
    "preprocessor_spans",
    "render",
    "run_detectors",
    "score",
    "validate_document",
    "walk_corpus",
    "write",
]
