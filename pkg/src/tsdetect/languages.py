"""Language identities and file-extension classification."""

from __future__ import annotations

from enum import Enum


class Language(Enum):
    """Supported languages, declared in tie-break precedence order."""

    C = "c"
    CPP = "c++"
    PYTHON = "python"
    JAVA = "java"
    GO = "go"
    CSHARP = "csharp"


# Precedence used to break ties when inferring a project language.
LANGUAGE_ORDER: tuple[Language, ...] = (
    Language.C,
    Language.CPP,
    Language.PYTHON,
    Language.JAVA,
    Language.GO,
    Language.CSHARP,
)

EXTENSIONS: dict[Language, frozenset[str]] = {
    Language.C: frozenset({".c", ".h"}),
    Language.CPP: frozenset({".cc", ".cpp", ".cxx", ".hpp", ".hh"}),
    Language.PYTHON: frozenset({".py"}),
    Language.JAVA: frozenset({".java"}),
    Language.GO: frozenset({".go"}),
    Language.CSHARP: frozenset({".cs"}),
}

EXTENSION_TO_LANGUAGE: dict[str, Language] = {
    ext: lang for lang, exts in EXTENSIONS.items() for ext in exts
}

# Languages that share the C preprocessor.
C_FAMILY: frozenset[Language] = frozenset({Language.C, Language.CPP})

_CLI_NAMES: dict[str, Language] = {lang.value: lang for lang in Language}


def corpus_extensions(language: Language) -> frozenset[str]:
    """Extensions scanned for a project of the given language.

    C projects routinely mix C and C++ translation units and share headers,
    so a C scan covers both extension sets.
    """
    if language is Language.C:
        return EXTENSIONS[Language.C] | EXTENSIONS[Language.CPP]
    return EXTENSIONS[language]


def language_from_cli_name(name: str) -> Language:
    """Map a command-line language name (e.g. ``c++``) to its Language."""
    try:
        return _CLI_NAMES[name.lower()]
    except KeyError:
        raise ValueError(
            f"unknown language {name!r}; expected one of "
            + ", ".join(sorted(_CLI_NAMES))
        ) from None
