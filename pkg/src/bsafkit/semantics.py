"""One entry point for every semantics, and the family groupings."""

from __future__ import annotations

from .classical import CLASSICAL, GAMMA, enumerate_classical, enumerate_gamma
from .framework import BSAF
from .strong import STRONG, STRONG_GAMMA, enumerate_strong, enumerate_strong_gamma
from .weak import WEAK, enumerate_weak

ALL_SEMANTICS = CLASSICAL + GAMMA + STRONG + STRONG_GAMMA + WEAK

_DISPATCH = {}
for _names, _fn in ((CLASSICAL, enumerate_classical), (GAMMA, enumerate_gamma),
                    (STRONG, enumerate_strong), (STRONG_GAMMA, enumerate_strong_gamma),
                    (WEAK, enumerate_weak)):
    for _s in _names:
        _DISPATCH[_s] = _fn


def normalize(name: str) -> str:
    """Accept ``adm-sg`` / ``adm_sG`` style spellings."""
    key = name.strip().replace("-", "_")
    if key.endswith("G"):
        key = key[:-1] + "g"
    if key not in _DISPATCH:
        raise ValueError(f"unknown semantics {name!r}")
    return key


def extensions(F: BSAF, sem: str) -> list[int]:
    sem = normalize(sem)
    return _DISPATCH[sem](F, sem)


def credulous(F: BSAF, sem: str, arg: int) -> bool:
    return any((E >> arg) & 1 for E in extensions(F, sem))


def skeptical(F: BSAF, sem: str, arg: int) -> bool:
    return all((E >> arg) & 1 for E in extensions(F, sem))
