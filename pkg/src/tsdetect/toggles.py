"""Toggle extraction from configuration files and registry filtering."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator

from .errors import EmptyRegistryError
from .profiles import LanguageProfile

MIN_NAME_LENGTH = 4

# Heuristic name markers applied under --strict-names.
STRICT_NAME_MARKERS: tuple[str, ...] = (
    "enable",
    "disable",
    "flag",
    "toggle",
    "feature",
    "experiment",
)

_IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_K_PREFIX_RE = re.compile(r"k[A-Z]")


@dataclass
class ToggleRegistry:
    """Ordered, filtered toggle identifiers with an audit trail."""

    toggles: list[str] = field(default_factory=list)
    source_config: list[str] = field(default_factory=list)
    rejected: list[tuple[str, str]] = field(default_factory=list)

    def __iter__(self) -> Iterator[str]:
        return iter(self.toggles)

    def __len__(self) -> int:
        return len(self.toggles)

    def __contains__(self, name: object) -> bool:
        return name in set(self.toggles)


def extract_toggles(config_content: str, profile: LanguageProfile) -> list[str]:
    """Identifiers captured by the profile's declaration patterns.

    Returned in order of appearance; repeated captures of the same name at
    different offsets are kept so filtering can record duplicates.
    """
    found: list[tuple[int, str]] = []
    seen_at: set[tuple[int, str]] = set()
    for pattern in profile.declaration_patterns:
        for m in re.finditer(pattern, config_content):
            name = m.group(1)
            pos = m.start(1)
            if (pos, name) in seen_at or not _IDENTIFIER_RE.match(name):
                continue
            seen_at.add((pos, name))
            found.append((pos, name))
    found.sort()
    return [name for _, name in found]


def _strict_name_ok(name: str) -> bool:
    lowered = name.lower()
    if any(marker in lowered for marker in STRICT_NAME_MARKERS):
        return True
    return bool(_K_PREFIX_RE.match(name))


def filter_toggles(
    candidates: list[str],
    profile: LanguageProfile,
    strict_names: bool = False,
    *,
    min_name_length: int = MIN_NAME_LENGTH,
    source_config: list[str] | None = None,
) -> ToggleRegistry:
    """Filter candidates into a registry; every drop is recorded with a reason.

    First occurrence of a name decides its fate; later occurrences are
    rejected as duplicates. Raises EmptyRegistryError (carrying the empty
    registry) when nothing survives.
    """
    registry = ToggleRegistry(source_config=list(source_config or []))
    accepted: set[str] = set()
    seen: set[str] = set()
    for name in candidates:
        if name in seen:
            registry.rejected.append((name, "duplicate"))
            continue
        seen.add(name)
        if not _IDENTIFIER_RE.match(name):
            registry.rejected.append((name, "not-identifier"))
        elif name in profile.keywords:
            registry.rejected.append((name, "keyword"))
        elif len(name) < min_name_length:
            registry.rejected.append((name, "too-short"))
        elif strict_names and not _strict_name_ok(name):
            registry.rejected.append((name, "strict-name"))
        else:
            registry.toggles.append(name)
            accepted.add(name)
    if not registry.toggles:
        raise EmptyRegistryError(
            "no toggles survived filtering; check the configuration path",
            registry=registry,
        )
    return registry


def build_registry(
    configs: list[tuple[str, str]],
    profile: LanguageProfile,
    strict_names: bool = False,
) -> ToggleRegistry:
    """Union extraction over (path, content) config pairs, filtered once."""
    candidates: list[str] = []
    for _, content in configs:
        candidates.extend(extract_toggles(content, profile))
    return filter_toggles(
        candidates,
        profile,
        strict_names,
        source_config=[path for path, _ in configs],
    )
