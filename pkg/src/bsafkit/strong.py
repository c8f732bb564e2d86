"""Strong defense, strong admissibility and the strongly-Gamma family."""

from __future__ import annotations

from .classical import enumerate_classical, is_gamma_closed, maximal, minimal
from .framework import BSAF, closed_sets, closure, gamma, indices, is_conflict_free, subsets

STRONG = ("adm_s", "com_s", "pref_s")
STRONG_GAMMA = ("adm_sg", "com_sg", "grd_sg", "pref_sg")


def is_strongly_defended(F: BSAF, E: int) -> bool:
    """Each member is defended by a strongly defended subset not containing it.

    Literal recursion over subsets, memoized per framework.
    """
    memo = F._cache.setdefault("sd", {})
    hit = memo.get(E)
    if hit is not None:
        return hit
    ok = is_conflict_free(F, E)
    if ok:
        for a in indices(E):
            rest = E & ~(1 << a)
            if not any((gamma(F, S) >> a) & 1 and is_strongly_defended(F, S)
                       for S in subsets(rest)):
                ok = False
                break
    memo[E] = ok
    return ok


def strong_sequence(F: BSAF, E: int) -> list[int] | None:
    """Greedy layering ``[∅, E_2, ...]`` with each layer defended by its prefix.

    Returns ``None`` when the layering stalls before covering ``E`` (or ``E``
    is not conflict-free).
    """
    if not is_conflict_free(F, E):
        return None
    layers = [0]
    acc = 0
    while acc != E:
        layer = gamma(F, acc) & E & ~acc
        if not layer:
            return None
        layers.append(layer)
        acc |= layer
    return layers


def check_sequence(F: BSAF, E: int, layers: list[int]) -> bool:
    """Validate any layering against the constructive characterization."""
    if not layers or layers[0] != 0:
        return False
    acc = 0
    for layer in layers:
        if layer & acc or layer & ~gamma(F, acc):
            return False
        acc |= layer
    return acc == E and is_conflict_free(F, E)


def _sd(F: BSAF, E: int) -> bool:
    return strong_sequence(F, E) is not None


def enumerate_strong(F: BSAF, sem: str) -> list[int]:
    cache = F._cache.setdefault("sem", {})
    if sem in cache:
        return cache[sem]
    if sem == "adm_s":
        out = [E for E in closed_sets(F) if _sd(F, E)]
    elif sem == "com_s":
        out = [E for E in enumerate_strong(F, "adm_s") if gamma(F, E) & ~E == 0]
    elif sem == "pref_s":
        out = maximal(enumerate_strong(F, "adm_s"))
    else:
        raise ValueError(f"not a strong semantics: {sem!r}")
    cache[sem] = out
    return out


def enumerate_strong_gamma(F: BSAF, sem: str) -> list[int]:
    cache = F._cache.setdefault("sem", {})
    if sem in cache:
        return cache[sem]
    if sem == "adm_sg":
        out = [E for E in enumerate_classical(F, "cf")
               if is_gamma_closed(F, E) and _sd(F, E)]
    elif sem == "com_sg":
        out = [E for E in enumerate_strong_gamma(F, "adm_sg") if gamma(F, E) & ~E == 0]
    elif sem == "grd_sg":
        out = minimal(enumerate_strong_gamma(F, "com_sg"))
    elif sem == "pref_sg":
        out = maximal(enumerate_strong_gamma(F, "adm_sg"))
    else:
        raise ValueError(f"not a strongly-Gamma semantics: {sem!r}")
    cache[sem] = out
    return out


def is_strongly_admissible(F: BSAF, E: int) -> bool:
    return closure(F, E) == E and is_strongly_defended(F, E)
