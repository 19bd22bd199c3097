"""Random mini-corpus generator for property and equivalence tests.

Emits small, plausible files per language exercising the constructs the
detectors care about: plain uses, top-level and nested conditionals, alias
bindings, strings and comments as red herrings, enum declarations,
preprocessor regions for C/C++, and component wrappers (classes, namespaces,
Go package directories). A little deliberate weirdness (unterminated
strings, stray braces, missing #endif) is mixed in at low probability.
"""

from __future__ import annotations

import random

TOGGLES = [
    "ENABLE_ALPHA",
    "ENABLE_ALPHA_FAST",
    "enableBeta",
    "kEnableGamma",
    "FEATURE_OMEGA",
    "disable_kappa",
    "GHOST_SWITCH",
]

_NAMES = ["ready", "level", "mode", "count", "active", "warm"]
_ALIASES = ["local_flag", "cached", "picked", "onoff"]


def _toggle(rng: random.Random) -> str:
    return rng.choice(TOGGLES[:-1])  # GHOST_SWITCH stays mostly unused


def _qualified(rng: random.Random, toggle: str) -> str:
    form = rng.randrange(4)
    if form == 0:
        return toggle
    if form == 1:
        return f"cfg.{toggle}"
    if form == 2:
        return f"cfg.Features.{toggle}"
    return f"*cfg.{toggle}"


# ---------------------------------------------------------------- Go


def _go_stmts(rng: random.Random, depth: int, lines: list[str], indent: str) -> None:
    for _ in range(rng.randrange(1, 4)):
        kind = rng.randrange(10)
        if kind == 0:
            lines.append(f"{indent}use({_qualified(rng, _toggle(rng))})")
        elif kind == 1:
            lines.append(f"{indent}if {_qualified(rng, _toggle(rng))} {{")
            if depth < 2 and rng.random() < 0.6:
                _go_stmts(rng, depth + 1, lines, indent + "\t")
            else:
                lines.append(f"{indent}\trun()")
            lines.append(f"{indent}}}")
        elif kind == 2:
            lines.append(f"{indent}if {rng.choice(_NAMES)} {{")
            _go_stmts(rng, depth + 1, lines, indent + "\t")
            lines.append(f"{indent}}}")
        elif kind == 3:
            alias = rng.choice(_ALIASES)
            lines.append(f"{indent}{alias} := {_qualified(rng, _toggle(rng))}")
            if rng.random() < 0.7:
                lines.append(f"{indent}if {alias} {{")
                lines.append(f"{indent}\tgo run()")
                lines.append(f"{indent}}}")
        elif kind == 4:
            lines.append(f'{indent}s := "{_toggle(rng)} inside text"')
        elif kind == 5:
            lines.append(f"{indent}// note about {_toggle(rng)}")
        elif kind == 6:
            lines.append(f"{indent}switch {_qualified(rng, _toggle(rng))} {{")
            lines.append(f"{indent}case true:")
            lines.append(f"{indent}\trun()")
            lines.append(f"{indent}}}")
        elif kind == 7:
            lines.append(f"{indent}x := `raw {_toggle(rng)} text`")
        elif kind == 8:
            lines.append(f"{indent}/* {_toggle(rng)} historic */")
        else:
            lines.append(f"{indent}count = count + 1")


def _gen_go(rng: random.Random, path_idx: int) -> tuple[str, str]:
    pkg = rng.choice(["alpha", "beta", "gamma"])
    lines = [f"package {pkg}", ""]
    if rng.random() < 0.3:
        lines.append("const (")
        lines.append(f"\tfirstMode = iota")
        lines.append(f"\t{_toggle(rng)}")
        lines.append(")")
        lines.append("")
    lines.append("func handler(cfg *Config) {")
    _go_stmts(rng, 0, lines, "\t")
    lines.append("}")
    if rng.random() < 0.05:
        lines.append('broken := "unterminated')
    return f"{pkg}/file{path_idx}.go", "\n".join(lines) + "\n"


# ---------------------------------------------------------------- Python


def _py_stmts(rng: random.Random, depth: int, lines: list[str], indent: str) -> None:
    for _ in range(rng.randrange(1, 4)):
        kind = rng.randrange(9)
        if kind == 0:
            lines.append(f"{indent}use({_toggle(rng)})")
        elif kind == 1:
            lines.append(f"{indent}if {rng.choice(['cfg.', ''])}{_toggle(rng)}:")
            if depth < 2 and rng.random() < 0.6:
                _py_stmts(rng, depth + 1, lines, indent + "    ")
            else:
                lines.append(f"{indent}    run()")
        elif kind == 2:
            lines.append(f"{indent}if {rng.choice(_NAMES)}:")
            _py_stmts(rng, depth + 1, lines, indent + "    ")
            if rng.random() < 0.4:
                lines.append(f"{indent}elif {_toggle(rng)}:")
                lines.append(f"{indent}    other()")
        elif kind == 3:
            alias = rng.choice(_ALIASES)
            lines.append(f"{indent}{alias} = {_toggle(rng)}")
            if rng.random() < 0.7:
                lines.append(f"{indent}if {alias}:")
                lines.append(f"{indent}    run()")
        elif kind == 4:
            lines.append(f'{indent}s = "{_toggle(rng)} inside"')
        elif kind == 5:
            lines.append(f"{indent}# comment about {_toggle(rng)}")
        elif kind == 6:
            lines.append(f'{indent}doc = """{_toggle(rng)}')
            lines.append(f"{indent}still text")
            lines.append(f'{indent}"""')
        else:
            lines.append(f"{indent}count += 1")


def _gen_python(rng: random.Random, path_idx: int) -> tuple[str, str]:
    lines = ["import os", ""]
    if rng.random() < 0.3:
        lines.append(f"class Palette{path_idx}(enum.Enum):")
        lines.append(f"    {_toggle(rng)} = 1")
        lines.append("    OTHER = 2")
        lines.append("")
    if rng.random() < 0.5:
        lines.append(f"class Service{path_idx}:")
        lines.append("    def run(self, cfg):")
        _py_stmts(rng, 0, lines, "        ")
        lines.append("")
    lines.append("def main(cfg):")
    _py_stmts(rng, 0, lines, "    ")
    return f"mod{path_idx}.py", "\n".join(lines) + "\n"


# ---------------------------------------------------------------- C family


def _c_stmts(rng: random.Random, depth: int, lines: list[str], indent: str, lang: str) -> None:
    for _ in range(rng.randrange(1, 4)):
        kind = rng.randrange(10)
        if kind == 0:
            lines.append(f"{indent}use({_toggle(rng)});")
        elif kind == 1:
            lines.append(f"{indent}if ({_toggle(rng)}) {{")
            if depth < 2 and rng.random() < 0.6:
                _c_stmts(rng, depth + 1, lines, indent + "    ", lang)
            else:
                lines.append(f"{indent}    run();")
            lines.append(f"{indent}}}")
        elif kind == 2:
            lines.append(f"{indent}if ({rng.choice(_NAMES)}) {{")
            _c_stmts(rng, depth + 1, lines, indent + "    ", lang)
            lines.append(f"{indent}}}")
        elif kind == 3:
            lines.append(f"{indent}if ({_toggle(rng)}) run();")
        elif kind == 4:
            alias = rng.choice(_ALIASES)
            lines.append(f"{indent}int {alias} = {_toggle(rng)};")
            if rng.random() < 0.7:
                lines.append(f"{indent}if ({alias}) {{")
                lines.append(f"{indent}    run();")
                lines.append(f"{indent}}}")
        elif kind == 5:
            lines.append(f'{indent}const char *s = "{_toggle(rng)} text";')
        elif kind == 6:
            lines.append(f"{indent}// {_toggle(rng)} note")
        elif kind == 7:
            lines.append(f"{indent}/* {_toggle(rng)} */")
        elif kind == 8:
            lines.append(f"{indent}switch ({_toggle(rng)}) {{")
            lines.append(f"{indent}case 1:")
            lines.append(f"{indent}    run();")
            lines.append(f"{indent}}}")
        else:
            lines.append(f"{indent}count++;")


def _c_preproc_block(rng: random.Random, lines: list[str], lang: str) -> None:
    directive = rng.choice(["#ifdef", "#ifndef", "#if defined"])
    toggle = _toggle(rng)
    if directive == "#if defined":
        lines.append(f"#if defined({toggle})")
    else:
        lines.append(f"{directive} {toggle}")
    _c_stmts(rng, 0, lines, "    ", lang)
    if rng.random() < 0.9:
        lines.append("#endif")


def _gen_c(rng: random.Random, path_idx: int, lang: str) -> tuple[str, str]:
    lines = ['#include "base.h"', ""]
    if rng.random() < 0.3:
        lines.append(f"enum bits{path_idx} {{")
        lines.append(f"    {_toggle(rng)},")
        lines.append("    SPARE,")
        lines.append("};")
        lines.append("")
    wrap_class = lang == "cpp" and rng.random() < 0.6
    if wrap_class:
        lines.append(f"class Widget{path_idx} {{")
        lines.append(" public:")
        lines.append("  void tick() {")
        _c_stmts(rng, 0, lines, "    ", lang)
        lines.append("  }")
        lines.append("};")
        lines.append("")
    lines.append("void handler(int level) {")
    _c_stmts(rng, 0, lines, "    ", lang)
    if rng.random() < 0.5:
        _c_preproc_block(rng, lines, lang)
    lines.append("}")
    ext = ".c" if lang == "c" else ".cc"
    return f"src/unit{path_idx}{ext}", "\n".join(lines) + "\n"


# ---------------------------------------------------------------- Java / C#


def _gen_java(rng: random.Random, path_idx: int) -> tuple[str, str]:
    lines = ["package app;", ""]
    if rng.random() < 0.3:
        lines.append(f"enum Bits{path_idx} {{")
        lines.append(f"    {_toggle(rng)},")
        lines.append("    SPARE")
        lines.append("}")
        lines.append("")
    lines.append(f"class Handler{path_idx} {{")
    lines.append("    void tick(Request req) {")
    _java_stmts(rng, 0, lines, "        ")
    lines.append("    }")
    lines.append("}")
    return f"src/Handler{path_idx}.java", "\n".join(lines) + "\n"


def _java_stmts(rng: random.Random, depth: int, lines: list[str], indent: str) -> None:
    for _ in range(rng.randrange(1, 4)):
        kind = rng.randrange(8)
        if kind == 0:
            lines.append(f"{indent}use(Flags.{_toggle(rng)});")
        elif kind == 1:
            lines.append(f"{indent}if (Flags.{_toggle(rng)}) {{")
            if depth < 2 and rng.random() < 0.6:
                _java_stmts(rng, depth + 1, lines, indent + "    ")
            else:
                lines.append(f"{indent}    run();")
            lines.append(f"{indent}}}")
        elif kind == 2:
            lines.append(f"{indent}if ({rng.choice(_NAMES)}) {{")
            _java_stmts(rng, depth + 1, lines, indent + "    ")
            lines.append(f"{indent}}}")
        elif kind == 3:
            alias = rng.choice(_ALIASES)
            lines.append(f"{indent}boolean {alias} = Flags.{_toggle(rng)};")
            if rng.random() < 0.7:
                lines.append(f"{indent}if ({alias}) {{")
                lines.append(f"{indent}    run();")
                lines.append(f"{indent}}}")
        elif kind == 4:
            lines.append(f'{indent}String s = "{_toggle(rng)}";')
        elif kind == 5:
            lines.append(f"{indent}// {_toggle(rng)}")
        else:
            lines.append(f"{indent}count++;")


def _gen_csharp(rng: random.Random, path_idx: int) -> tuple[str, str]:
    ns = rng.choice(["App.Core", "App.Jobs"])
    lines = [f"namespace {ns}", "{"]
    if rng.random() < 0.3:
        lines.append(f"    enum Bits{path_idx}")
        lines.append("    {")
        lines.append(f"        {_toggle(rng)},")
        lines.append("        Spare,")
        lines.append("    }")
    lines.append(f"    class Handler{path_idx}")
    lines.append("    {")
    lines.append("        void Tick(Job job)")
    lines.append("        {")
    _java_stmts(rng, 0, lines, "            ")
    lines.append("        }")
    lines.append("    }")
    lines.append("}")
    return f"src/Handler{path_idx}.cs", "\n".join(lines) + "\n"


_GENERATORS = {
    "go": lambda rng, i: _gen_go(rng, i),
    "python": lambda rng, i: _gen_python(rng, i),
    "c": lambda rng, i: _gen_c(rng, i, "c"),
    "cpp": lambda rng, i: _gen_c(rng, i, "cpp"),
    "java": lambda rng, i: _gen_java(rng, i),
    "csharp": lambda rng, i: _gen_csharp(rng, i),
}


def gen_corpus(
    rng: random.Random,
    lang: str,
    max_files: int = 10,
    max_lines: int = 40,
) -> tuple[dict[str, str], list[str]]:
    """Random (files, toggles) pair for one language, files capped in length."""
    files: dict[str, str] = {}
    for i in range(rng.randrange(1, max_files + 1)):
        for _ in range(20):
            path, text = _GENERATORS[lang](rng, i)
            if text.count("\n") <= max_lines:
                break
        files[path] = text
    return files, list(TOGGLES)
