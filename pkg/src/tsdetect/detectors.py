"""The five usage-pattern detectors plus occurrence finding and alias tracking.

All matching is whole-identifier over masked text. A match widens through
dot-qualified segments (and one leading ``*``) into the reported expression,
e.g. ``a.Visibility.EnableRead``. Alias tracking is file-local and single
hop: ``name = <expr with exactly one registry toggle>`` binds name to that
toggle, and later uses of the name count for nested detection with the
binding's expression.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .corpus import SourceCorpus, SourceFile
from .languages import C_FAMILY
from .profiles import (
    ComponentId,
    ComponentRule,
    Conditional,
    LanguageProfile,
    Span,
    component_spans,
    condition_directive_lines,
    conditional_spans,
    enum_spans,
    get_profile,
    preprocessor_spans,
)
from .report import Pattern, PatternReport
from .toggles import ToggleRegistry

_IDENT_CHARS = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_"
)


@dataclass
class UsageOccurrence:
    """One whole-identifier hit of a toggle (or of a bound alias)."""

    toggle: str
    matched_expression: str
    file: str
    line: int
    offset: int
    component: ComponentId
    depth: int | None
    in_preproc: bool
    in_enum: bool
    via_alias: bool = False


@dataclass
class AliasBinding:
    """A file-local single-hop alias of a registry toggle."""

    alias: str
    toggle: str
    file: str
    line: int
    expression: str
    offset: int  # of the alias name at its definition


def _toggle_pattern(name: str) -> re.Pattern[str]:
    return re.compile(rf"(?<![A-Za-z0-9_]){re.escape(name)}(?![A-Za-z0-9_])")


def _extend_expression(text: str, start: int, end: int) -> tuple[int, int]:
    """Widen a match through dotted qualifiers, plus one leading star."""
    i = start
    while i >= 2 and text[i - 1] == ".":
        j = i - 2
        while j >= 0 and text[j] in _IDENT_CHARS:
            j -= 1
        seg_start = j + 1
        if seg_start > i - 2 or not (text[seg_start].isalpha() or text[seg_start] == "_"):
            break
        i = seg_start
    if i > 0 and text[i - 1] == "*":
        i -= 1
    j = end
    while j < len(text) and text[j] == "." and j + 1 < len(text) and (
        text[j + 1].isalpha() or text[j + 1] == "_"
    ):
        j += 1
        while j < len(text) and text[j] in _IDENT_CHARS:
            j += 1
    return i, j


class FileScan:
    """Lazily computed single-file analysis shared by all detectors."""

    def __init__(self, file: SourceFile, profile: LanguageProfile | None = None):
        self.file = file
        if profile is not None and profile.language is file.language:
            self.profile = profile
        else:
            self.profile = get_profile(file.language)
        self._occurrences: dict[str, list[UsageOccurrence]] = {}
        rule = get_profile(file.language).component_rule
        if rule is ComponentRule.GO_PACKAGE:
            directory = file.path.rsplit("/", 1)[0] if "/" in file.path else "."
            self._fixed_component = ComponentId(ComponentRule.GO_PACKAGE, directory)
        elif rule is ComponentRule.FILE_MODULE:
            self._fixed_component = ComponentId(ComponentRule.FILE_MODULE, file.path)
        else:
            self._fixed_component = None
        self._rule = rule

    @cached_property
    def conditionals(self) -> list[Conditional]:
        return conditional_spans(self.file, self.profile)

    @cached_property
    def preproc(self):
        return preprocessor_spans(self.file) if self.file.language in C_FAMILY else []

    @cached_property
    def directive_conditions(self) -> dict[int, str]:
        if self.file.language not in C_FAMILY:
            return {}
        return condition_directive_lines(self.file)

    @cached_property
    def enums(self) -> list[Span]:
        return enum_spans(self.file)

    @cached_property
    def _component_spans(self):
        return component_spans(self.file)

    def component_at(self, offset: int) -> ComponentId:
        if self._fixed_component is not None:
            return self._fixed_component
        best = None
        for span, name, decl in self._component_spans:
            if span.contains(offset) and (
                best is None or (span.start, decl) > (best[0].start, best[2])
            ):
                best = (span, name, decl)
        if best is not None:
            return ComponentId(self._rule, best[1])
        return ComponentId(ComponentRule.FILE_MODULE, self.file.path)

    def has_occurrence(self, toggle: str) -> bool:
        cached = self._occurrences.get(toggle)
        if cached is not None:
            return bool(cached)
        return _toggle_pattern(toggle).search(self.file.masked) is not None

    def depth_at(self, offset: int) -> int:
        return sum(1 for c in self.conditionals if c.body.contains(offset))

    def header_conditional(self, offset: int) -> Conditional | None:
        best = None
        for c in self.conditionals:
            if c.header.contains(offset) and (best is None or c.marker > best.marker):
                best = c
        return best

    def annotate(
        self, toggle: str, offset: int, expression: str, via_alias: bool = False
    ) -> UsageOccurrence:
        header = self.header_conditional(offset)
        depth = self.depth_at(header.marker) if header is not None else None
        return UsageOccurrence(
            toggle=toggle,
            matched_expression=expression,
            file=self.file.path,
            line=self.file.line_of(offset),
            offset=offset,
            component=self.component_at(offset),
            depth=depth,
            in_preproc=any(s.contains(offset) for s in self.preproc),
            in_enum=any(s.contains(offset) for s in self.enums),
            via_alias=via_alias,
        )

    def occurrences(self, toggle: str) -> list[UsageOccurrence]:
        cached = self._occurrences.get(toggle)
        if cached is not None:
            return cached
        text = self.file.masked
        occs = []
        for m in _toggle_pattern(toggle).finditer(text):
            es, ee = _extend_expression(text, m.start(), m.end())
            occs.append(self.annotate(toggle, m.start(), text[es:ee]))
        self._occurrences[toggle] = occs
        return occs


def find_occurrences(
    toggle: str, file: SourceFile, *, scan: FileScan | None = None
) -> list[UsageOccurrence]:
    """Direct whole-identifier occurrences of a toggle in one file."""
    return (scan or FileScan(file)).occurrences(toggle)


def alias_bindings(
    file: SourceFile,
    registry: ToggleRegistry,
    *,
    scan: FileScan | None = None,
) -> list[AliasBinding]:
    """File-local single-hop alias bindings of registry toggles."""
    scan = scan or FileScan(file)
    profile = scan.profile
    text = file.masked
    toggles = list(registry)
    toggle_set = set(toggles)
    bindings: dict[str, AliasBinding] = {}
    for m in re.finditer(profile.alias_pattern, text):
        alias = m.group(1)
        if alias in bindings or alias in profile.keywords or alias in toggle_set:
            continue
        rhs = m.group(2)
        present = [t for t in toggles if _toggle_pattern(t).search(rhs)]
        if len(present) != 1 or present[0] == alias:
            continue
        toggle = present[0]
        hit = _toggle_pattern(toggle).search(rhs)
        abs_start = m.start(2) + hit.start()
        es, ee = _extend_expression(text, abs_start, abs_start + len(toggle))
        bindings[alias] = AliasBinding(
            alias=alias,
            toggle=toggle,
            file=file.path,
            line=file.line_of(m.start(1)),
            expression=text[es:ee],
            offset=m.start(1),
        )
    return list(bindings.values())


def _alias_occurrences(scan: FileScan, registry: ToggleRegistry) -> list[UsageOccurrence]:
    occs = []
    for binding in alias_bindings(scan.file, registry, scan=scan):
        for m in _toggle_pattern(binding.alias).finditer(scan.file.masked):
            if m.start() == binding.offset:
                continue  # the definition itself
            occs.append(
                scan.annotate(binding.toggle, m.start(), binding.expression, via_alias=True)
            )
    return occs


class CorpusScan:
    """Per-file scans for one (registry, corpus) detector run."""

    def __init__(
        self,
        registry: ToggleRegistry,
        corpus: SourceCorpus,
        profile: LanguageProfile | None = None,
    ):
        self.registry = registry
        self.corpus = corpus
        self.profile = profile
        self.files = [FileScan(f, profile) for f in corpus.files]

    def warnings(self) -> list[str]:
        out = []
        for scan in self.files:
            for span in scan.preproc:
                if not span.terminated:
                    out.append(
                        f"{scan.file.path}:{span.line}: "
                        f"#{span.directive} without matching #endif"
                    )
        return out


def detect_dead(
    registry: ToggleRegistry,
    corpus: SourceCorpus,
    *,
    scan: CorpusScan | None = None,
) -> PatternReport:
    """Toggles with zero occurrences anywhere in the corpus."""
    scan = scan or CorpusScan(registry, corpus)
    alive: set[str] = set()
    for fscan in scan.files:
        for toggle in registry:
            if toggle not in alive and fscan.has_occurrence(toggle):
                alive.add(toggle)
    dead = sorted(t for t in registry if t not in alive)
    return PatternReport(Pattern.DEAD, dead, 0, len(dead))


def detect_spread(
    registry: ToggleRegistry,
    corpus: SourceCorpus,
    profile: LanguageProfile | None = None,
    *,
    scan: CorpusScan | None = None,
) -> PatternReport:
    """Toggles whose direct occurrences span two or more components."""
    scan = scan or CorpusScan(registry, corpus, profile)
    components: dict[str, set[ComponentId]] = {t: set() for t in registry}
    files_of: dict[str, set[str]] = {t: set() for t in registry}
    for fscan in scan.files:
        for toggle in registry:
            for occ in fscan.occurrences(toggle):
                components[toggle].add(occ.component)
                files_of[toggle].add(occ.file)
    entries = {
        t: sorted({c.name for c in comps})
        for t, comps in components.items()
        if len(comps) >= 2
    }
    entries = dict(sorted(entries.items()))
    involved: set[str] = set()
    for t in entries:
        involved |= files_of[t]
    return PatternReport(Pattern.SPREAD, entries, len(involved), len(entries))


def detect_nested(
    registry: ToggleRegistry,
    corpus: SourceCorpus,
    profile: LanguageProfile | None = None,
    *,
    scan: CorpusScan | None = None,
) -> PatternReport:
    """Toggles tested in a conditional that is itself inside another one.

    An occurrence counts when it sits in a runtime-conditional header whose
    own nesting depth is at least 1; alias-mediated uses count too.
    """
    scan = scan or CorpusScan(registry, corpus, profile)
    entries: dict[str, list[str]] = {}
    for fscan in scan.files:
        hits: list[UsageOccurrence] = []
        for toggle in registry:
            hits.extend(fscan.occurrences(toggle))
        hits.extend(_alias_occurrences(fscan, registry))
        nested = [o for o in hits if o.depth is not None and o.depth >= 1]
        if nested:
            nested.sort(key=lambda o: o.offset)
            entries[fscan.file.path] = [o.matched_expression for o in nested]
    entries = dict(sorted(entries.items()))
    total = sum(len(v) for v in entries.values())
    return PatternReport(Pattern.NESTED, entries, len(entries), total)


def detect_mixed(
    registry: ToggleRegistry,
    corpus: SourceCorpus,
    profile: LanguageProfile | None = None,
    *,
    scan: CorpusScan | None = None,
) -> PatternReport:
    """C/C++ toggles involved in both preprocessor and runtime conditionals.

    For corpora in other languages the report is empty, not an error.
    """
    if corpus.language not in C_FAMILY:
        return PatternReport(Pattern.MIXED, {}, 0, 0)
    scan = scan or CorpusScan(registry, corpus, profile)
    entries: dict[str, list[str]] = {}
    for fscan in scan.files:
        mixed: set[str] = set()
        directive_lines = set(fscan.directive_conditions)
        for toggle in registry:
            occs = fscan.occurrences(toggle)
            if not occs:
                continue
            in_directive = any(o.line in directive_lines for o in occs)
            in_runtime = any(o.depth is not None for o in occs)
            span_mixed = any(o.depth is not None and o.in_preproc for o in occs)
            if (in_directive and in_runtime) or span_mixed:
                mixed.add(toggle)
        if mixed:
            entries[fscan.file.path] = sorted(mixed)
    entries = dict(sorted(entries.items()))
    total = sum(len(v) for v in entries.values())
    return PatternReport(Pattern.MIXED, entries, len(entries), total)


def detect_enum(
    registry: ToggleRegistry,
    corpus: SourceCorpus,
    profile: LanguageProfile | None = None,
    *,
    scan: CorpusScan | None = None,
) -> PatternReport:
    """Toggles declared as enumerators inside an enum-style span."""
    scan = scan or CorpusScan(registry, corpus, profile)
    entries: dict[str, list[str]] = {}
    for fscan in scan.files:
        found = sorted(
            {
                toggle
                for toggle in registry
                if any(o.in_enum for o in fscan.occurrences(toggle))
            }
        )
        if found:
            entries[fscan.file.path] = found
    entries = dict(sorted(entries.items()))
    total = sum(len(v) for v in entries.values())
    return PatternReport(Pattern.ENUM, entries, len(entries), total)


_DETECTORS = {
    Pattern.DEAD: lambda reg, corp, prof, scan: detect_dead(reg, corp, scan=scan),
    Pattern.SPREAD: lambda reg, corp, prof, scan: detect_spread(reg, corp, prof, scan=scan),
    Pattern.NESTED: lambda reg, corp, prof, scan: detect_nested(reg, corp, prof, scan=scan),
    Pattern.MIXED: lambda reg, corp, prof, scan: detect_mixed(reg, corp, prof, scan=scan),
    Pattern.ENUM: lambda reg, corp, prof, scan: detect_enum(reg, corp, prof, scan=scan),
}


def run_detectors(
    registry: ToggleRegistry,
    corpus: SourceCorpus,
    profile: LanguageProfile | None = None,
    patterns: tuple[Pattern, ...] = tuple(Pattern),
) -> tuple[list[PatternReport], list[str]]:
    """Run the selected detectors over one shared scan; returns warnings too."""
    scan = CorpusScan(registry, corpus, profile)
    reports = [_DETECTORS[p](registry, corpus, profile, scan) for p in patterns]
    return reports, scan.warnings()
