import enum


class Modes(enum.Enum):
    FEATURE_EXPORT = "export"
    BULK = "bulk"


def describe():
    name = "FEATURE_SEARCH"
    if FEATURE_SEARCH:
        return name
    return ""
