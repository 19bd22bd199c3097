"""Score tool reports against manual ground truth.

Matching granularity is (pattern, toggle), with the file considered only
when the truth record names one. A usage found both manually and by the
tool is a true positive; found only by the tool, a false positive; found
only manually, a false negative. Matching is one-to-one, so per pattern
tp + fp == tool_count and tp + fn == manual_count always hold.

Ground truth format: optional leading ``#`` comment lines (kept as
provenance), a header line starting with ``pattern``, then one record per
line: ``pattern,toggle[,file]``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import GroundTruthFormatError
from .report import TOTAL_PATH_KEY, TOTAL_TOGGLES_KEY, Pattern

_PATTERN_NAMES = {p.value: p for p in Pattern}
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class GroundTruthRecord:
    pattern: Pattern
    toggle: str
    file: str = ""  # empty means "any file"


@dataclass
class GroundTruth:
    records: list[GroundTruthRecord]
    provenance: str = ""


@dataclass
class PatternScore:
    manual_count: int = 0
    tool_count: int = 0
    tp: int = 0
    fp: int = 0
    fn: int = 0
    precision: float = 1.0
    recall: float = 1.0
    precision_defaulted: bool = False
    recall_defaulted: bool = False


@dataclass
class EvalResult:
    per_pattern: dict[Pattern, PatternScore] = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        out = {}
        for pattern, s in self.per_pattern.items():
            out[pattern.value] = {
                "manual_count": s.manual_count,
                "tool_count": s.tool_count,
                "tp": s.tp,
                "fp": s.fp,
                "fn": s.fn,
                "precision": s.precision,
                "recall": s.recall,
                "precision_defaulted": s.precision_defaulted,
                "recall_defaulted": s.recall_defaulted,
            }
        return out

    def render_table(self) -> str:
        header = f"{'pattern':<8} {'manual':>6} {'tool':>5} {'tp':>4} {'fp':>4} {'fn':>4} {'precision':>10} {'recall':>8}"
        lines = [header, "-" * len(header)]
        for pattern in Pattern:
            s = self.per_pattern[pattern]
            prec = f"{s.precision:.4f}" + ("*" if s.precision_defaulted else "")
            rec = f"{s.recall:.4f}" + ("*" if s.recall_defaulted else "")
            lines.append(
                f"{pattern.value:<8} {s.manual_count:>6} {s.tool_count:>5} "
                f"{s.tp:>4} {s.fp:>4} {s.fn:>4} {prec:>10} {rec:>8}"
            )
        lines.append("(* metric defaulted to 1.0 on an empty denominator)")
        return "\n".join(lines)


def load_ground_truth(path: str) -> GroundTruth:
    """Parse an annotation file; duplicates and unknown patterns are errors."""
    provenance: list[str] = []
    records: list[GroundTruthRecord] = []
    seen: set[tuple[Pattern, str, str]] = set()
    header_seen = False
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                provenance.append(line.lstrip("#").strip())
                continue
            cells = [c.strip() for c in line.split(",")]
            if not header_seen:
                if cells[0].lower() != "pattern":
                    raise GroundTruthFormatError(
                        "expected a header line starting with 'pattern'", line_no
                    )
                header_seen = True
                continue
            if len(cells) < 2 or len(cells) > 3:
                raise GroundTruthFormatError(
                    f"expected 2 or 3 comma-separated fields, got {len(cells)}", line_no
                )
            name = cells[0].lower()
            if name not in _PATTERN_NAMES:
                raise GroundTruthFormatError(
                    f"unknown pattern {cells[0]!r}; expected one of "
                    + ", ".join(sorted(_PATTERN_NAMES)),
                    line_no,
                )
            toggle = cells[1]
            if not _IDENT_RE.match(toggle):
                raise GroundTruthFormatError(f"invalid toggle name {toggle!r}", line_no)
            file = cells[2] if len(cells) == 3 else ""
            key = (_PATTERN_NAMES[name], toggle, file)
            if key in seen:
                raise GroundTruthFormatError(
                    f"duplicate record {name},{toggle},{file}", line_no
                )
            seen.add(key)
            records.append(GroundTruthRecord(*key))
    if not header_seen:
        raise GroundTruthFormatError("missing header line", None)
    return GroundTruth(records=records, provenance="\n".join(provenance))


def _last_segment(expression: str) -> str:
    return expression.lstrip("*").rsplit(".", 1)[-1]


def _tool_items(document: dict, pattern: Pattern) -> dict[str, set[str]]:
    """toggle -> set of files the tool reported it in (empty set = no file)."""
    obj = document.get(pattern.json_key)
    if obj is None:
        return {}
    items: dict[str, set[str]] = {}
    if pattern is Pattern.DEAD:
        for toggle in obj.get("toggles", []):
            items.setdefault(toggle, set())
        return items
    skip = {TOTAL_PATH_KEY, TOTAL_TOGGLES_KEY, "toggles"}
    for key, values in obj.items():
        if key in skip:
            continue
        if pattern is Pattern.SPREAD:
            items.setdefault(key, set())
        else:
            for value in values:
                name = _last_segment(value) if pattern is Pattern.NESTED else value
                items.setdefault(name, set()).add(key)
    return items


def score(document: dict, truth: GroundTruth) -> EvalResult:
    """TP/FP/FN and precision/recall per pattern, one-to-one matching."""
    result = EvalResult()
    for pattern in Pattern:
        items = _tool_items(document, pattern)
        records = sorted(
            (r for r in truth.records if r.pattern is pattern),
            key=lambda r: (r.toggle, r.file),
        )
        matched: set[str] = set()
        tp = 0
        for record in records:
            files = items.get(record.toggle)
            if files is None or record.toggle in matched:
                continue
            if record.file and record.file not in files:
                continue
            matched.add(record.toggle)
            tp += 1
        tool_count = len(items)
        manual_count = len(records)
        s = PatternScore(
            manual_count=manual_count,
            tool_count=tool_count,
            tp=tp,
            fp=tool_count - tp,
            fn=manual_count - tp,
        )
        if s.tp + s.fp > 0:
            s.precision = s.tp / (s.tp + s.fp)
        else:
            s.precision_defaulted = True
        if s.tp + s.fn > 0:
            s.recall = s.tp / (s.tp + s.fn)
        else:
            s.recall_defaulted = True
        result.per_pattern[pattern] = s
    return result


def render_eval(result: EvalResult) -> str:
    """Human table plus a machine-readable JSON block."""
    return (
        result.render_table()
        + "\n\n"
        + json.dumps(result.to_json_obj(), indent=2, sort_keys=True)
        + "\n"
    )
