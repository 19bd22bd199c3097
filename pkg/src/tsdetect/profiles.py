"""Per-language syntax knowledge.

Everything here is lexical and operates on masked text: component spans for
spread detection, runtime-conditional spans for nesting depth, preprocessor
spans, and enum spans. Brace matching is plain character matching, not
grammar; comments and strings are already blanked, and in C/C++ characters on
preprocessor lines never participate in code brace matching.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from dataclasses import replace as dataclasses_replace
from enum import Enum
from typing import TYPE_CHECKING, Iterable, Mapping

from .languages import C_FAMILY, Language

if TYPE_CHECKING:  # pragma: no cover
    from .corpus import SourceFile


class BlockStyle(Enum):
    BRACES = "braces"
    INDENTATION = "indentation"


class ComponentRule(Enum):
    ENCLOSING_CLASS = "class"
    NAMESPACE = "namespace"
    GO_PACKAGE = "package"
    FILE_MODULE = "file"


@dataclass(frozen=True)
class ComponentId:
    """The code unit a usage belongs to for spread detection."""

    kind: ComponentRule
    name: str


@dataclass(frozen=True)
class Span:
    start: int
    end: int

    def contains(self, offset: int) -> bool:
        return self.start <= offset < self.end


@dataclass(frozen=True)
class PreprocSpan:
    """A #if/#ifdef/#ifndef region through its matching #endif."""

    start: int
    end: int
    directive: str
    condition: str
    line: int
    terminated: bool

    def contains(self, offset: int) -> bool:
        return self.start <= offset < self.end


@dataclass(frozen=True)
class Conditional:
    """A runtime conditional: marker keyword, header region, body region."""

    kind: str
    marker: int
    header: Span
    body: Span


# Toggle declaration shapes recognized in configuration files: assignment or
# typed declaration with initializer, quoted map keys, const/final/static
# declarations, enum-style constant lines, and k-prefixed constants. Shared
# by every language profile; replaceable per language via an override file.
DEFAULT_DECLARATION_PATTERNS: tuple[str, ...] = (
    r"(?m)^[ \t]*(?:[A-Za-z_][\w.<>\[\]]*[ \t]+)*?([A-Za-z_]\w*)[ \t]*(?::=|=(?!=))",
    r"""["']([A-Za-z_]\w*)["'][ \t]*:""",
    r"(?m)\b(?:const|final|static|readonly)\b[ \t]+(?:[A-Za-z_][\w.<>\[\],]*[ \t]+)*?([A-Za-z_]\w*)[ \t]*(?=[;,])",
    r"(?m)^[ \t]*([A-Za-z_]\w*)[ \t]*,?[ \t]*$",
    r"(?m)^[ \t]*([A-Za-z_]\w*)[ \t]*=[^,\n]*,[ \t]*$",
    r"\b(k[A-Z][A-Za-z0-9_]+)\b",
)

# One local alias hop: "name = expr" / "name := expr", optionally preceded by
# declaration tokens (var/type words). The negative lookahead keeps == out.
DEFAULT_ALIAS_PATTERN: str = (
    r"(?m)^[ \t]*(?:[A-Za-z_][A-Za-z0-9_.<>\[\]*&]*[ \t]+)*?"
    r"([A-Za-z_][A-Za-z0-9_]*)[ \t]*(?::=|=(?!=))[ \t]*([^;\n]+)"
)

_C_KEYWORDS = frozenset(
    """auto break case char const continue default do double else enum extern
    float for goto if inline int long register restrict return short signed
    sizeof static struct switch typedef union unsigned void volatile""".split()
)

_CPP_KEYWORDS = _C_KEYWORDS | frozenset(
    """alignas alignof asm bool catch class constexpr const_cast decltype
    delete dynamic_cast explicit export false friend mutable namespace new
    noexcept nullptr operator private protected public reinterpret_cast
    static_assert static_cast template this thread_local throw true try
    typeid typename using virtual wchar_t""".split()
)

_PYTHON_KEYWORDS = frozenset(
    """False None True and as assert async await break class continue def del
    elif else except finally for from global if import in is lambda nonlocal
    not or pass raise return try while with yield""".split()
)

_JAVA_KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null""".split()
)

_GO_KEYWORDS = frozenset(
    """break case chan const continue default defer else fallthrough for func
    go goto if import interface map package range return select struct switch
    type var true false nil iota""".split()
)

_CSHARP_KEYWORDS = frozenset(
    """abstract as base bool break byte case catch char checked class const
    continue decimal default delegate do double else enum event explicit
    extern false finally fixed float for foreach goto if implicit in int
    interface internal is lock long namespace new null object operator out
    override params private protected public readonly ref return sbyte sealed
    short sizeof stackalloc static string struct switch this throw true try
    typeof uint ulong unchecked unsafe ushort using virtual void volatile
    while""".split()
)


@dataclass(frozen=True)
class LanguageProfile:
    """Syntax rules for one language."""

    language: Language
    keywords: frozenset[str]
    conditional_markers: tuple[str, ...]
    block_style: BlockStyle
    component_rule: ComponentRule
    has_preprocessor: bool
    declaration_patterns: tuple[str, ...] = DEFAULT_DECLARATION_PATTERNS
    alias_pattern: str = DEFAULT_ALIAS_PATTERN


_BRACE_MARKERS = (
    r"(?<![A-Za-z0-9_])if(?![A-Za-z0-9_])",
    r"(?<![A-Za-z0-9_])switch(?![A-Za-z0-9_])",
)
_PYTHON_MARKERS = (r"(?m)^[ \t]*(?:if|elif)(?![A-Za-z0-9_])",)

_DEFAULT_PROFILES: dict[Language, LanguageProfile] = {
    Language.C: LanguageProfile(
        Language.C, _C_KEYWORDS, _BRACE_MARKERS, BlockStyle.BRACES,
        ComponentRule.FILE_MODULE, has_preprocessor=True,
    ),
    Language.CPP: LanguageProfile(
        Language.CPP, _CPP_KEYWORDS, _BRACE_MARKERS, BlockStyle.BRACES,
        ComponentRule.ENCLOSING_CLASS, has_preprocessor=True,
    ),
    Language.PYTHON: LanguageProfile(
        Language.PYTHON, _PYTHON_KEYWORDS, _PYTHON_MARKERS, BlockStyle.INDENTATION,
        ComponentRule.ENCLOSING_CLASS, has_preprocessor=False,
    ),
    Language.JAVA: LanguageProfile(
        Language.JAVA, _JAVA_KEYWORDS, _BRACE_MARKERS, BlockStyle.BRACES,
        ComponentRule.ENCLOSING_CLASS, has_preprocessor=False,
    ),
    Language.GO: LanguageProfile(
        Language.GO, _GO_KEYWORDS, _BRACE_MARKERS, BlockStyle.BRACES,
        ComponentRule.GO_PACKAGE, has_preprocessor=False,
    ),
    Language.CSHARP: LanguageProfile(
        Language.CSHARP, _CSHARP_KEYWORDS, _BRACE_MARKERS, BlockStyle.BRACES,
        ComponentRule.NAMESPACE, has_preprocessor=False,
    ),
}


def get_profile(
    language: Language,
    overrides: Mapping[Language, Mapping[str, list[str]]] | None = None,
) -> LanguageProfile:
    """The compiled-in profile, with optional per-language list replacements."""
    profile = _DEFAULT_PROFILES[language]
    if not overrides or language not in overrides:
        return profile
    repl = overrides[language]
    kwargs = {}
    if "conditional" in repl:
        kwargs["conditional_markers"] = tuple(repl["conditional"])
    if "declaration" in repl:
        kwargs["declaration_patterns"] = tuple(repl["declaration"])
    if "alias" in repl:
        kwargs["alias_pattern"] = repl["alias"][-1]
    if "keyword" in repl:
        kwargs["keywords"] = frozenset(repl["keyword"])
    if not kwargs:
        return profile
    to_check = list(kwargs.get("conditional_markers", ()))
    to_check += list(kwargs.get("declaration_patterns", ()))
    if "alias_pattern" in kwargs:
        to_check.append(kwargs["alias_pattern"])
    for pattern in to_check:
        re.compile(pattern)  # raises re.error on a bad override
    return dataclasses_replace(profile, **kwargs)


def load_profile_overrides(path: str) -> dict[Language, dict[str, list[str]]]:
    """Parse a profile override file.

    Format: ``[language]`` section headers, then ``key = value`` lines where
    key is one of conditional, declaration, alias, keyword. Repeated keys
    accumulate; any key that appears replaces that default list entirely.
    Blank lines and ``#`` comments are skipped.
    """
    from .languages import language_from_cli_name

    overrides: dict[Language, dict[str, list[str]]] = {}
    current: dict[str, list[str]] | None = None
    with open(path, encoding="utf-8") as fh:
        for line_no, raw_line in enumerate(fh, 1):
            line = raw_line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                lang = language_from_cli_name(line[1:-1].strip())
                current = overrides.setdefault(lang, {})
                continue
            if "=" not in line or current is None:
                raise ValueError(f"{path}:{line_no}: expected '[language]' or 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in ("conditional", "declaration", "alias", "keyword"):
                raise ValueError(f"{path}:{line_no}: unknown profile key {key!r}")
            current.setdefault(key, []).append(value.strip())
    return overrides


_IDENT_CHARS = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


def _is_ident_char(ch: str) -> bool:
    return ch in _IDENT_CHARS


# --- preprocessor lines ---

_DIRECTIVE_RE = re.compile(r"^[ \t]*#[ \t]*([A-Za-z]+)[ \t]*(.*)$")


def _directive_lines(file: "SourceFile") -> dict[int, tuple[str, str]]:
    """0-based line -> (directive name, condition text) for C/C++ files."""
    if file.language not in C_FAMILY:
        return {}
    out: dict[int, tuple[str, str]] = {}
    for i, start in enumerate(file.line_index):
        end = file.line_index[i + 1] - 1 if i + 1 < len(file.line_index) else len(file.masked)
        line = file.masked[start:end]
        stripped = line.lstrip(" \t")
        if stripped.startswith("#"):
            m = _DIRECTIVE_RE.match(line)
            if m:
                out[i] = (m.group(1), m.group(2).strip())
            else:
                out[i] = ("", "")
    return out


def _directive_char_ranges(file: "SourceFile") -> list[tuple[int, int]]:
    ranges = []
    for i in _directive_lines(file):
        start = file.line_index[i]
        end = file.line_index[i + 1] if i + 1 < len(file.line_index) else len(file.masked)
        ranges.append((start, end))
    return ranges


def _offset_on_directive_line(file: "SourceFile", directives: dict[int, tuple[str, str]], offset: int) -> bool:
    return (bisect_right(file.line_index, offset) - 1) in directives


def preprocessor_spans(file: "SourceFile") -> list[PreprocSpan]:
    """Conditional-compilation regions, nesting tracked, unbalanced saturate."""
    if file.language not in C_FAMILY:
        return []
    directives = _directive_lines(file)
    spans: list[PreprocSpan] = []
    stack: list[tuple[int, str, str, int]] = []  # (start, directive, condition, line)
    text_len = len(file.masked)
    for line_no in sorted(directives):
        name, condition = directives[line_no]
        line_start = file.line_index[line_no]
        line_end = (
            file.line_index[line_no + 1]
            if line_no + 1 < len(file.line_index)
            else text_len
        )
        if name in ("if", "ifdef", "ifndef"):
            stack.append((line_start, name, condition, line_no + 1))
        elif name == "endif" and stack:
            start, directive, cond, line = stack.pop()
            spans.append(PreprocSpan(start, line_end, directive, cond, line, True))
    while stack:
        start, directive, cond, line = stack.pop()
        spans.append(PreprocSpan(start, text_len, directive, cond, line, False))
    spans.sort(key=lambda s: (s.start, -s.end))
    return spans


def condition_directive_lines(file: "SourceFile") -> dict[int, str]:
    """1-based lines carrying a condition: #if, #ifdef, #ifndef, #elif."""
    return {
        line_no + 1: cond
        for line_no, (name, cond) in _directive_lines(file).items()
        if name in ("if", "ifdef", "ifndef", "elif")
    }


# --- brace matching ---


def _brace_map(file: "SourceFile") -> dict[int, int]:
    """open-brace offset -> matching close offset; unmatched opens map to EOF.

    Braces on C/C++ preprocessor lines are invisible to code matching.
    """
    text = file.masked
    skip = _directive_char_ranges(file)
    skip_idx = 0
    pairs: dict[int, int] = {}
    stack: list[int] = []
    for i, ch in enumerate(text):
        while skip_idx < len(skip) and i >= skip[skip_idx][1]:
            skip_idx += 1
        if skip_idx < len(skip) and skip[skip_idx][0] <= i < skip[skip_idx][1]:
            continue
        if ch == "{":
            stack.append(i)
        elif ch == "}" and stack:
            pairs[stack.pop()] = i
    for i in stack:
        pairs[i] = len(text)
    return pairs


def _match_parens(text: str, open_idx: int) -> int:
    """Offset of the ')' matching text[open_idx] == '('; len(text) if none."""
    depth = 0
    for i in range(open_idx, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    return len(text)


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i] in " \t\r\n":
        i += 1
    return i


# --- runtime conditionals ---


def conditional_spans(
    file: "SourceFile", profile: LanguageProfile | None = None
) -> list[Conditional]:
    """All runtime conditionals (if / else-if / elif / switch) in the file."""
    profile = profile or get_profile(file.language)
    if profile.block_style is BlockStyle.INDENTATION:
        return _python_conditionals(file, profile)
    return _brace_conditionals(file, profile)


def _brace_conditionals(file: "SourceFile", profile: LanguageProfile) -> list[Conditional]:
    text = file.masked
    directives = _directive_lines(file)
    braces = _brace_map(file)
    out: list[Conditional] = []
    for pattern in profile.conditional_markers:
        for m in re.finditer(pattern, text):
            marker = m.start()
            if directives and _offset_on_directive_line(file, directives, marker):
                continue
            kw_end = m.end()
            if file.language is Language.GO:
                cond = _go_conditional(text, marker, kw_end, braces, file)
            else:
                cond = _paren_conditional(text, marker, kw_end, braces, file)
            out.append(cond)
    out.sort(key=lambda c: c.marker)
    return out


def _go_conditional(
    text: str, marker: int, kw_end: int, braces: dict[int, int], file: "SourceFile"
) -> Conditional:
    kind = text[marker:kw_end]
    depth = 0
    i = kw_end
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "{" and depth <= 0:
            close = braces.get(i, len(text))
            return Conditional(kind, marker, Span(marker, i), Span(i + 1, close))
        i += 1
    return Conditional(kind, marker, Span(marker, len(text)), Span(0, 0))


def _paren_conditional(
    text: str, marker: int, kw_end: int, braces: dict[int, int], file: "SourceFile"
) -> Conditional:
    kind = text[marker:kw_end]
    i = _skip_ws(text, kw_end)
    if i >= len(text) or text[i] != "(":
        _, line_end = file.line_span(marker)
        return Conditional(kind, marker, Span(marker, line_end), Span(0, 0))
    close = _match_parens(text, i)
    if close >= len(text):
        return Conditional(kind, marker, Span(marker, len(text)), Span(0, 0))
    header = Span(marker, close + 1)
    j = _skip_ws(text, close + 1)
    if j >= len(text):
        return Conditional(kind, marker, header, Span(0, 0))
    if text[j] == "{":
        return Conditional(kind, marker, header, Span(j + 1, braces.get(j, len(text))))
    # Braceless body: the statement line.
    _, line_end = file.line_span(j)
    return Conditional(kind, marker, header, Span(j, line_end))


def _line_indent(text: str, line_start: int) -> int:
    i = line_start
    while i < len(text) and text[i] in " \t":
        i += 1
    return i - line_start


def _line_blank(text: str, start: int, end: int) -> bool:
    return text[start:end].strip() == ""


def _indent_block(file: "SourceFile", after_line: int, indent: int) -> Span:
    """Maximal following block of lines indented deeper than ``indent``.

    after_line is a 0-based line index; the block starts on the next line.
    Blank lines do not end the block; the span ends at the last non-blank
    block line.
    """
    text = file.masked
    index = file.line_index
    start = None
    last_end = None
    for li in range(after_line + 1, len(index)):
        ls = index[li]
        le = index[li + 1] - 1 if li + 1 < len(index) else len(text)
        if _line_blank(text, ls, le):
            continue
        if _line_indent(text, ls) <= indent:
            break
        if start is None:
            start = index[after_line + 1] if after_line + 1 < len(index) else len(text)
        last_end = le
    if start is None or last_end is None:
        return Span(0, 0)
    return Span(start, last_end)


def _python_conditionals(file: "SourceFile", profile: LanguageProfile) -> list[Conditional]:
    text = file.masked
    index = file.line_index
    out: list[Conditional] = []
    for pattern in profile.conditional_markers:
        for m in re.finditer(pattern, text):
            frag = m.group(0)
            marker = m.start() + len(frag) - len(frag.lstrip(" \t"))
            kw = frag.strip()
            line_no = file.line_of(marker) - 1
            indent = marker - index[line_no]
            # Find the suite colon at bracket depth 0.
            depth = 0
            colon = None
            i = m.end()
            while i < len(text):
                ch = text[i]
                if ch in "([{":
                    depth += 1
                elif ch in ")]}":
                    depth -= 1
                elif ch == ":" and depth <= 0:
                    colon = i
                    break
                i += 1
            if colon is None:
                out.append(Conditional(kw, marker, Span(marker, len(text)), Span(0, 0)))
                continue
            colon_line = file.line_of(colon) - 1
            body = _indent_block(file, colon_line, indent)
            out.append(Conditional(kw, marker, Span(marker, colon), body))
    out.sort(key=lambda c: c.marker)
    return out


def nesting_depth_at(file: "SourceFile", offset: int) -> int:
    """Number of runtime-conditional bodies strictly enclosing the offset."""
    return sum(
        1 for c in conditional_spans(file) if c.body.contains(offset)
    )


# --- enum spans ---

_ENUM_KW_RE = re.compile(r"(?<![A-Za-z0-9_])enum(?![A-Za-z0-9_])")
_GO_CONST_RE = re.compile(r"(?<![A-Za-z0-9_])const[ \t]*\(")
_IOTA_RE = re.compile(r"(?<![A-Za-z0-9_])iota(?![A-Za-z0-9_])")
_PY_ENUM_CLASS_RE = re.compile(
    r"(?m)^[ \t]*class[ \t]+[A-Za-z_][A-Za-z0-9_]*[ \t]*\(([^)\n]*)\)[ \t]*:"
)


def enum_spans(file: "SourceFile") -> list[Span]:
    """Regions whose identifiers are enum-style constant declarations."""
    lang = file.language
    text = file.masked
    if lang is Language.GO:
        spans = []
        for m in _GO_CONST_RE.finditer(text):
            open_idx = m.end() - 1
            close = _match_parens(text, open_idx)
            if _IOTA_RE.search(text[open_idx:close]):
                spans.append(Span(open_idx + 1, close))
        return spans
    if lang is Language.PYTHON:
        spans = []
        for m in _PY_ENUM_CLASS_RE.finditer(text):
            bases = [b.strip() for b in m.group(1).split(",") if b.strip()]
            if not any(b.split(".")[-1].endswith("Enum") for b in bases):
                continue
            colon = m.end() - 1
            line_no = file.line_of(m.start()) - 1
            indent = _line_indent(text, file.line_index[line_no])
            colon_line = file.line_of(colon) - 1
            spans.append(_indent_block(file, colon_line, indent))
        return [s for s in spans if s.end > s.start]
    # Brace languages: enum ... { ... }
    directives = _directive_lines(file)
    braces = _brace_map(file)
    spans = []
    for m in _ENUM_KW_RE.finditer(text):
        if directives and _offset_on_directive_line(file, directives, m.start()):
            continue
        i = m.end()
        while i < len(text) and text[i] not in "{;":
            i += 1
        if i < len(text) and text[i] == "{":
            spans.append(Span(i + 1, braces.get(i, len(text))))
    return spans


# --- components ---

_CLASS_RE = re.compile(r"(?<![A-Za-z0-9_])class[ \t]+([A-Za-z_][A-Za-z0-9_]*)")
_NAMESPACE_RE = re.compile(r"(?<![A-Za-z0-9_])namespace[ \t]+([A-Za-z_][A-Za-z0-9_.]*)")
_PY_CLASS_RE = re.compile(r"(?m)^[ \t]*class[ \t]+([A-Za-z_][A-Za-z0-9_]*)")


def _preceded_by_enum(text: str, kw_start: int) -> bool:
    i = kw_start - 1
    while i >= 0 and text[i] in " \t":
        i -= 1
    return i >= 3 and text[i - 3 : i + 1] == "enum" and (
        i - 4 < 0 or not _is_ident_char(text[i - 4])
    )


def _brace_decl_spans(file: "SourceFile", pattern: re.Pattern[str], skip_enum: bool) -> list[tuple[Span, str, int]]:
    text = file.masked
    directives = _directive_lines(file)
    braces = _brace_map(file)
    out = []
    for m in pattern.finditer(text):
        if directives and _offset_on_directive_line(file, directives, m.start()):
            continue
        if skip_enum and _preceded_by_enum(text, m.start()):
            continue
        name = m.group(1)
        i = m.end()
        while i < len(text) and text[i] not in "{;":
            i += 1
        if i < len(text) and text[i] == "{":
            out.append((Span(i + 1, braces.get(i, len(text))), name, m.start()))
    return out


def component_spans(file: "SourceFile") -> list[tuple[Span, str, int]]:
    """(span, name, declaration offset) for the file's component constructs."""
    rule = get_profile(file.language).component_rule
    if rule is ComponentRule.ENCLOSING_CLASS and file.language is Language.PYTHON:
        text = file.masked
        out = []
        for m in _PY_CLASS_RE.finditer(text):
            line_no = file.line_of(m.start()) - 1
            line_start = file.line_index[line_no]
            indent = _line_indent(text, line_start)
            # The suite colon bounds the header; body follows by indentation.
            depth = 0
            colon = None
            i = m.end()
            while i < len(text):
                ch = text[i]
                if ch in "([{":
                    depth += 1
                elif ch in ")]}":
                    depth -= 1
                elif ch == ":" and depth <= 0:
                    colon = i
                    break
                i += 1
            if colon is None:
                continue
            colon_line = file.line_of(colon) - 1
            body = _indent_block(file, colon_line, indent)
            if body.end > body.start:
                out.append((Span(line_start, body.end), m.group(1), m.start()))
        return out
    if rule is ComponentRule.ENCLOSING_CLASS:
        return _brace_decl_spans(file, _CLASS_RE, skip_enum=True)
    if rule is ComponentRule.NAMESPACE:
        return _brace_decl_spans(file, _NAMESPACE_RE, skip_enum=False)
    return []


def component_of(file: "SourceFile", offset: int) -> ComponentId:
    """The component owning an offset; total over every file position."""
    rule = get_profile(file.language).component_rule
    if rule is ComponentRule.GO_PACKAGE:
        directory = file.path.rsplit("/", 1)[0] if "/" in file.path else "."
        return ComponentId(ComponentRule.GO_PACKAGE, directory)
    if rule is ComponentRule.FILE_MODULE:
        return ComponentId(ComponentRule.FILE_MODULE, file.path)
    innermost: tuple[Span, str, int] | None = None
    for span, name, decl in component_spans(file):
        if span.contains(offset):
            if innermost is None or (span.start, decl) > (innermost[0].start, innermost[2]):
                innermost = (span, name, decl)
    if innermost is not None:
        return ComponentId(rule, innermost[1])
    return ComponentId(ComponentRule.FILE_MODULE, file.path)


def iter_profiles() -> Iterable[LanguageProfile]:
    return _DEFAULT_PROFILES.values()
