"""Assemble detector results into the canonical JSON document.

Document shape (schema "tsd-1"), one top-level key per pattern that ran:

    "Dead_Toggles":   {"toggles": [names...], totals}
    "Spread_Toggles": {"<toggle>": [component names...], ..., totals}
    "Nested_Toggles": {"<file>": [matched expressions...], ..., totals}
    "Mixed_Toggles":  {"<file>": [toggle names...], ..., totals}
    "Enum_Toggles":   {"<file>": [toggle names...], ..., totals}

where totals are "total_count_path" and "total_count_toggles". Keys and
lists serialize sorted, except nested expression lists, which keep in-file
offset order.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from enum import Enum

from .errors import DuplicatePatternError, InternalInvariantError

SCHEMA_VERSION = "tsd-1"
SCHEMA_KEY = "schema"


class Pattern(Enum):
    DEAD = "dead"
    SPREAD = "spread"
    NESTED = "nested"
    MIXED = "mixed"
    ENUM = "enum"

    @property
    def json_key(self) -> str:
        return _JSON_KEYS[self]


_JSON_KEYS = {
    Pattern.DEAD: "Dead_Toggles",
    Pattern.SPREAD: "Spread_Toggles",
    Pattern.NESTED: "Nested_Toggles",
    Pattern.MIXED: "Mixed_Toggles",
    Pattern.ENUM: "Enum_Toggles",
}

TOTAL_PATH_KEY = "total_count_path"
TOTAL_TOGGLES_KEY = "total_count_toggles"


@dataclass
class PatternReport:
    """One detector's result.

    entries: list of toggle names for DEAD; mapping toggle -> component
    names for SPREAD; mapping file -> expressions/toggles otherwise.
    """

    pattern: Pattern
    entries: list[str] | dict[str, list[str]]
    total_count_path: int
    total_count_toggles: int

    def validate(self) -> None:
        if self.pattern is Pattern.DEAD:
            if self.total_count_path != 0:
                raise InternalInvariantError("dead report must have total_count_path 0")
            if self.total_count_toggles != len(self.entries):
                raise InternalInvariantError("dead toggle count mismatch")
            return
        if self.pattern is Pattern.SPREAD:
            if self.total_count_toggles != len(self.entries):
                raise InternalInvariantError("spread toggle count mismatch")
            return
        if self.total_count_path != len(self.entries):
            raise InternalInvariantError(
                f"{self.pattern.value} path count mismatch"
            )
        expected = sum(len(v) for v in self.entries.values())
        if self.total_count_toggles != expected:
            raise InternalInvariantError(
                f"{self.pattern.value} toggle count mismatch"
            )

    def to_json_obj(self) -> dict:
        totals = {
            TOTAL_PATH_KEY: self.total_count_path,
            TOTAL_TOGGLES_KEY: self.total_count_toggles,
        }
        if self.pattern is Pattern.DEAD:
            return {"toggles": list(self.entries), **totals}
        return {**{k: list(v) for k, v in self.entries.items()}, **totals}


def assemble(reports: list[PatternReport]) -> dict:
    """Combine at most one report per pattern into one document."""
    document: dict = {SCHEMA_KEY: SCHEMA_VERSION}
    for report in reports:
        key = report.pattern.json_key
        if key in document:
            raise DuplicatePatternError(f"two reports for pattern {report.pattern.value}")
        report.validate()
        document[key] = report.to_json_obj()
    return document


def render(document: dict) -> str:
    """Deterministic serialization: 2-space indent, sorted keys, newline."""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def write(document: dict, out_path: str | None = None) -> None:
    """Write the document to a file or standard output."""
    text = render(document)
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def validate_document(document: dict) -> None:
    """Recheck count invariants on an assembled document."""
    for pattern in Pattern:
        obj = document.get(pattern.json_key)
        if obj is None:
            continue
        totals_keys = {TOTAL_PATH_KEY, TOTAL_TOGGLES_KEY}
        if pattern is Pattern.DEAD:
            entries = obj.get("toggles", [])
            report = PatternReport(pattern, list(entries), obj[TOTAL_PATH_KEY], obj[TOTAL_TOGGLES_KEY])
        else:
            entries = {k: v for k, v in obj.items() if k not in totals_keys and k != "toggles"}
            report = PatternReport(pattern, entries, obj[TOTAL_PATH_KEY], obj[TOTAL_TOGGLES_KEY])
        if pattern is Pattern.SPREAD:
            for toggle, comps in report.entries.items():
                if len(comps) < 2:
                    raise InternalInvariantError(
                        f"spread toggle {toggle} lists fewer than 2 components"
                    )
        report.validate()
