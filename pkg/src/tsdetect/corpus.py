"""Project walking, language inference, and comment/string masking.

Masking replaces comments and string literals with spaces, character for
character, so every offset and line number reported downstream refers to the
original file. Newlines inside masked regions are preserved. C and C++
preprocessor lines (first non-space character ``#``) are copied verbatim so
directive conditions stay visible to the detectors.
"""

from __future__ import annotations

import os
import re
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .errors import NoRecognizedFilesError
from .languages import (
    C_FAMILY,
    EXTENSION_TO_LANGUAGE,
    LANGUAGE_ORDER,
    Language,
    corpus_extensions,
)

DEFAULT_IGNORE_DIRS: tuple[str, ...] = (
    "node_modules",
    "vendor",
    "third_party",
    "build",
    "out",
)

# Token scanners per language family. Alternation order resolves conflicts at
# a shared start character (preprocessor line before comments, /* before //,
# triple quotes before single quotes). Unterminated regions run to end of
# file. Strings are not line-bounded: the region ends at the next unescaped
# delimiter, wherever that is.
_C_FAMILY_TOKENS = re.compile(
    r"""
      (?P<preproc>^[\ \t]*\#[^\n]*)
    | (?P<block>/\*.*?(?:\*/|\Z))
    | (?P<line>//[^\n]*)
    | (?P<dq>"(?:\\.?|[^"\\])*?(?:"|\Z))
    | (?P<sq>'(?:\\.?|[^'\\])*?(?:'|\Z))
    """,
    re.DOTALL | re.MULTILINE | re.VERBOSE,
)

_GO_TOKENS = re.compile(
    r"""
      (?P<block>/\*.*?(?:\*/|\Z))
    | (?P<line>//[^\n]*)
    | (?P<dq>"(?:\\.?|[^"\\])*?(?:"|\Z))
    | (?P<sq>'(?:\\.?|[^'\\])*?(?:'|\Z))
    | (?P<raw>`[^`]*(?:`|\Z))
    """,
    re.DOTALL | re.VERBOSE,
)

_BRACE_TOKENS = re.compile(  # Java, C#
    r"""
      (?P<block>/\*.*?(?:\*/|\Z))
    | (?P<line>//[^\n]*)
    | (?P<dq>"(?:\\.?|[^"\\])*?(?:"|\Z))
    | (?P<sq>'(?:\\.?|[^'\\])*?(?:'|\Z))
    """,
    re.DOTALL | re.VERBOSE,
)

_PYTHON_TOKENS = re.compile(
    r"""
      (?P<line>\#[^\n]*)
    | (?P<tsq>'''(?:\\.?|[^\\])*?(?:'''|\Z))
    | (?P<tdq>\"\"\"(?:\\.?|[^\\])*?(?:\"\"\"|\Z))
    | (?P<sq>'(?:\\.?|[^'\\])*?(?:'|\Z))
    | (?P<dq>"(?:\\.?|[^"\\])*?(?:"|\Z))
    """,
    re.DOTALL | re.VERBOSE,
)


def _token_pattern(language: Language) -> re.Pattern[str]:
    if language in C_FAMILY:
        return _C_FAMILY_TOKENS
    if language is Language.GO:
        return _GO_TOKENS
    if language is Language.PYTHON:
        return _PYTHON_TOKENS
    return _BRACE_TOKENS


def mask(content: str, language: Language) -> str:
    """Blank comments and string literals, preserving length and newlines."""
    out = list(content)
    for m in _token_pattern(language).finditer(content):
        if m.lastgroup == "preproc":
            continue
        for i in range(m.start(), m.end()):
            if out[i] != "\n":
                out[i] = " "
    return "".join(out)


def compute_line_index(text: str) -> list[int]:
    """Offsets of line starts; always begins at 0."""
    index = [0]
    for i, ch in enumerate(text):
        if ch == "\n":
            index.append(i + 1)
    return index


@dataclass(eq=False)
class SourceFile:
    """One language-tagged file with offset-preserving masked content."""

    path: str
    language: Language
    raw: str
    masked: str
    line_index: list[int]

    @classmethod
    def build(
        cls, path: str, language: Language, raw: str, apply_mask: bool = True
    ) -> "SourceFile":
        masked = mask(raw, language) if apply_mask else raw
        return cls(
            path=path,
            language=language,
            raw=raw,
            masked=masked,
            line_index=compute_line_index(raw),
        )

    def line_of(self, offset: int) -> int:
        """1-based line number of a character offset."""
        return bisect_right(self.line_index, offset)

    def line_span(self, offset: int) -> tuple[int, int]:
        """(start, end) of the line containing offset; end excludes the newline."""
        line = bisect_right(self.line_index, offset) - 1
        start = self.line_index[line]
        if line + 1 < len(self.line_index):
            return start, self.line_index[line + 1] - 1
        return start, len(self.raw)


@dataclass
class SourceCorpus:
    """The walked project: files unique by path, sorted lexicographically."""

    root: str
    files: list[SourceFile]
    language: Language
    warnings: list[str] = field(default_factory=list)


def _walk_tree(root: Path, ignore: set[str], warnings: list[str]):
    """Yield regular files under root, pruning hidden and ignored dirs."""

    def onerror(err: OSError) -> None:
        if Path(err.filename) == root:
            raise err
        warnings.append(f"skipped unreadable directory {err.filename}: {err}")

    for dirpath, dirnames, filenames in os.walk(root, onerror=onerror):
        dirnames[:] = sorted(
            d for d in dirnames if not d.startswith(".") and d not in ignore
        )
        base = Path(dirpath)
        for name in sorted(filenames):
            yield base / name


def infer_language(
    root: str | os.PathLike[str],
    override: Language | None = None,
    ignore_names: tuple[str, ...] | None = None,
) -> Language:
    """Pick the project language by extension count; an override wins.

    Ties break in declaration order of Language.
    """
    if override is not None:
        return override
    rootp = Path(root)
    if not rootp.is_dir():
        raise OSError(f"project root is not a readable directory: {rootp}")
    ignore = set(DEFAULT_IGNORE_DIRS if ignore_names is None else ignore_names)
    counts: Counter[Language] = Counter()
    for path in _walk_tree(rootp, ignore, []):
        lang = EXTENSION_TO_LANGUAGE.get(path.suffix)
        if lang is not None:
            counts[lang] += 1
    if not counts:
        raise NoRecognizedFilesError(
            f"no files with a recognized extension under {rootp}; "
            "pass an explicit language"
        )
    best = max(counts.values())
    for lang in LANGUAGE_ORDER:
        if counts.get(lang) == best:
            return lang
    raise AssertionError("unreachable")


def walk_corpus(
    root: str | os.PathLike[str],
    language: Language,
    config_paths: tuple[str, ...] | list[str] = (),
    *,
    ignore_names: tuple[str, ...] | None = None,
    apply_mask: bool = True,
) -> SourceCorpus:
    """Collect the project's source files for the given language.

    Files named in config_paths are excluded; hidden directories and the
    ignore list are skipped; unreadable files are skipped with a warning.
    """
    rootp = Path(root)
    if not rootp.is_dir():
        raise OSError(f"project root is not a readable directory: {rootp}")
    ignore = set(DEFAULT_IGNORE_DIRS if ignore_names is None else ignore_names)
    excluded = {Path(p).resolve() for p in config_paths}
    exts = corpus_extensions(language)
    warnings: list[str] = []
    files: list[SourceFile] = []
    for path in _walk_tree(rootp, ignore, warnings):
        if path.suffix not in exts or path.is_symlink():
            continue
        if path.resolve() in excluded:
            continue
        rel = path.relative_to(rootp).as_posix()
        try:
            raw = path.read_text(encoding="utf-8", errors="replace")
        except OSError as exc:
            warnings.append(f"skipped unreadable file {rel}: {exc}")
            continue
        files.append(
            SourceFile.build(rel, EXTENSION_TO_LANGUAGE[path.suffix], raw, apply_mask)
        )
    files.sort(key=lambda f: f.path)
    return SourceCorpus(root=str(rootp), files=files, language=language, warnings=warnings)


def corpus_from_contents(
    contents: dict[str, str],
    language: Language,
    *,
    root: str = "<memory>",
    apply_mask: bool = True,
) -> SourceCorpus:
    """Build a corpus from in-memory path/text pairs (testing and embedding)."""
    files = []
    for path, text in contents.items():
        suffix = "." + path.rsplit(".", 1)[-1] if "." in path else ""
        lang = EXTENSION_TO_LANGUAGE.get(suffix, language)
        files.append(SourceFile.build(path, lang, text, apply_mask))
    files.sort(key=lambda f: f.path)
    return SourceCorpus(root=root, files=files, language=language)
