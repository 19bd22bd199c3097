"""Command-line front end.

Exit codes: 0 success, 1 usage or unusable input, 2 I/O failure,
3 internal invariant violation in the output document.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .corpus import DEFAULT_IGNORE_DIRS, infer_language, walk_corpus
from .detectors import run_detectors
from .errors import (
    EmptyRegistryError,
    GroundTruthFormatError,
    InternalInvariantError,
    NoRecognizedFilesError,
    UsageError,
)
from .evalharness import load_ground_truth, render_eval, score
from .languages import Language, language_from_cli_name
from .profiles import get_profile, load_profile_overrides
from .report import Pattern, assemble, validate_document, write
from .toggles import build_registry

PATTERN_CHOICES = ("dead", "spread", "nested", "mixed", "enum", "all")
LANGUAGE_CHOICES = ("c", "c++", "python", "java", "go", "csharp")
IGNORE_ENV_VAR = "TSD_IGNORE"


@dataclass
class RunConfig:
    project_path: str
    config_paths: list[str]
    out_path: str | None = None
    pattern: str = "all"
    language: Language | None = None
    raw: bool = False
    strict_names: bool = False
    strict: bool = False
    ignore_names: tuple[str, ...] | None = None
    profile_path: str | None = None


@dataclass
class EvalConfig:
    report_path: str
    truth_path: str


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: A003 - argparse API
        raise UsageError(f"{message}\n{self.format_usage()}".rstrip())


def _build_scan_parser() -> _Parser:
    parser = _Parser(
        prog="tsd",
        description=(
            "Detect feature-toggle usage patterns (dead, spread, nested, "
            "mixed, enum) in a source tree."
        ),
    )
    parser.add_argument("-p", "--project", required=True, help="project source root")
    parser.add_argument(
        "-c",
        "--config",
        action="append",
        required=True,
        help="toggle configuration file (repeatable)",
    )
    parser.add_argument("-o", "--out", help="output file (default: stdout)")
    parser.add_argument(
        "-t",
        "--pattern",
        choices=PATTERN_CHOICES,
        default="all",
        help="usage pattern to detect (default: all)",
    )
    parser.add_argument(
        "-l",
        "--language",
        choices=LANGUAGE_CHOICES,
        help="project language (default: inferred from file extensions)",
    )
    parser.add_argument(
        "--raw",
        action="store_true",
        help="match against raw text instead of comment/string-masked text",
    )
    parser.add_argument(
        "--strict-names",
        action="store_true",
        help="keep only toggle-like identifiers (enable/disable/flag/... or kCamel)",
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        help="treat an empty toggle registry as an error",
    )
    parser.add_argument(
        "--ignore",
        help="comma-separated directory names to skip, replacing the default list "
        f"({', '.join(DEFAULT_IGNORE_DIRS)})",
    )
    parser.add_argument("--profile", help="profile override file (see README)")
    parser.add_argument("--version", action="version", version=f"tsd {__version__}")
    return parser


def _build_eval_parser() -> _Parser:
    parser = _Parser(prog="tsd eval", description="Score a report against ground truth.")
    parser.add_argument("--report", required=True, help="report JSON produced by tsd")
    parser.add_argument("--truth", required=True, help="ground-truth annotation file")
    return parser


def parse_args(argv: list[str]) -> RunConfig | EvalConfig:
    if argv and argv[0] == "eval":
        ns = _build_eval_parser().parse_args(argv[1:])
        return EvalConfig(report_path=ns.report, truth_path=ns.truth)
    ns = _build_scan_parser().parse_args(argv)
    language = language_from_cli_name(ns.language) if ns.language else None
    ignore = tuple(
        name.strip() for name in ns.ignore.split(",") if name.strip()
    ) if ns.ignore is not None else None
    return RunConfig(
        project_path=ns.project,
        config_paths=list(ns.config),
        out_path=ns.out,
        pattern=ns.pattern,
        language=language,
        raw=ns.raw,
        strict_names=ns.strict_names,
        strict=ns.strict,
        ignore_names=ignore,
        profile_path=ns.profile,
    )


def _effective_ignores(config: RunConfig) -> tuple[str, ...]:
    base = DEFAULT_IGNORE_DIRS if config.ignore_names is None else config.ignore_names
    extra = tuple(
        name.strip()
        for name in os.environ.get(IGNORE_ENV_VAR, "").split(",")
        if name.strip()
    )
    return tuple(base) + extra


def run(config: RunConfig) -> int:
    """Scan pipeline: corpus -> registry -> detectors -> document."""
    project = Path(config.project_path)
    if not project.is_dir():
        print(f"tsd: project path does not exist: {project}", file=sys.stderr)
        return 2

    configs: list[tuple[str, str]] = []
    for path in config.config_paths:
        try:
            configs.append((path, Path(path).read_text(encoding="utf-8", errors="replace")))
        except OSError as exc:
            print(f"tsd: cannot read configuration file: {exc}", file=sys.stderr)
            return 2

    ignores = _effective_ignores(config)
    try:
        language = infer_language(project, config.language, ignores)
    except NoRecognizedFilesError as exc:
        print(f"tsd: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"tsd: {exc}", file=sys.stderr)
        return 2

    overrides = None
    if config.profile_path:
        try:
            overrides = load_profile_overrides(config.profile_path)
        except OSError as exc:
            print(f"tsd: cannot read profile override file: {exc}", file=sys.stderr)
            return 2
        except ValueError as exc:
            print(f"tsd: {exc}", file=sys.stderr)
            return 1
    profile = get_profile(language, overrides)

    try:
        corpus = walk_corpus(
            project,
            language,
            config.config_paths,
            ignore_names=ignores,
            apply_mask=not config.raw,
        )
    except OSError as exc:
        print(f"tsd: {exc}", file=sys.stderr)
        return 2

    warnings = list(corpus.warnings)
    try:
        registry = build_registry(configs, profile, config.strict_names)
    except EmptyRegistryError as exc:
        if config.strict:
            print(f"tsd: {exc}", file=sys.stderr)
            return 1
        warnings.append(f"advisory: {exc}")
        registry = exc.registry

    if config.pattern == "all":
        patterns = tuple(Pattern)
    else:
        patterns = (Pattern(config.pattern),)
    reports, detector_warnings = run_detectors(registry, corpus, profile, patterns)
    warnings.extend(detector_warnings)

    document = assemble(reports)
    try:
        validate_document(document)
    except InternalInvariantError as exc:
        print(f"tsd: internal invariant violation: {exc}", file=sys.stderr)
        return 3

    try:
        write(document, config.out_path)
    except OSError as exc:
        print(f"tsd: cannot write output: {exc}", file=sys.stderr)
        return 2

    for warning in warnings:
        print(f"tsd: warning: {warning}", file=sys.stderr)
    return 0


def run_eval(config: EvalConfig) -> int:
    try:
        with open(config.report_path, encoding="utf-8") as fh:
            document = json.load(fh)
    except OSError as exc:
        print(f"tsd: cannot read report: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"tsd: report is not valid JSON: {exc}", file=sys.stderr)
        return 1
    try:
        truth = load_ground_truth(config.truth_path)
    except OSError as exc:
        print(f"tsd: cannot read ground truth: {exc}", file=sys.stderr)
        return 2
    except GroundTruthFormatError as exc:
        print(f"tsd: ground truth: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render_eval(score(document, truth)))
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(f"tsd: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"tsd: {exc}", file=sys.stderr)
        return 1
    if isinstance(config, EvalConfig):
        return run_eval(config)
    return run(config)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
