"""Conflict-free, admissible, complete, grounded and preferred extensions.

Also the Gamma-closure and the Gamma-variants of the same four semantics.
All enumeration is exhaustive over the subsets of the argument universe.
"""

from __future__ import annotations

from .framework import (BSAF, canonical, closed_sets, closure, gamma, is_conflict_free)

CLASSICAL = ("cf", "adm", "com", "grd", "pref")
GAMMA = ("adm_g", "com_g", "grd_g", "pref_g")


def minimal(family: list[int]) -> list[int]:
    return canonical(E for E in family
                     if not any(F != E and F & ~E == 0 for F in family))


def maximal(family: list[int]) -> list[int]:
    return canonical(E for E in family
                     if not any(F != E and E & ~F == 0 for F in family))


def is_admissible(F: BSAF, E: int) -> bool:
    return (is_conflict_free(F, E) and closure(F, E) == E
            and E & ~gamma(F, E) == 0)


def is_complete(F: BSAF, E: int) -> bool:
    return is_admissible(F, E) and gamma(F, E) == E


def enumerate_classical(F: BSAF, sem: str) -> list[int]:
    cache = F._cache.setdefault("sem", {})
    if sem in cache:
        return cache[sem]
    if sem == "cf":
        F.check_size()
        out = canonical(E for E in range(F.full + 1) if is_conflict_free(F, E))
    elif sem == "adm":
        out = [E for E in closed_sets(F) if is_conflict_free(F, E)
               and E & ~gamma(F, E) == 0]
    elif sem == "com":
        # admissible and E ⊆ Γ(E) together with Γ(E) ⊆ E
        out = [E for E in enumerate_classical(F, "adm") if gamma(F, E) == E]
    elif sem == "grd":
        out = minimal(enumerate_classical(F, "com"))
    elif sem == "pref":
        out = maximal(enumerate_classical(F, "adm"))
    else:
        raise ValueError(f"not a classical semantics: {sem!r}")
    cache[sem] = out
    return out


def gamma_closure(F: BSAF, E: int) -> int:
    """Least fixpoint of adding everything the set both supports and defends."""
    cur = E
    while True:
        nxt = cur | (closure(F, cur) & gamma(F, cur))
        if nxt == cur:
            return cur
        cur = nxt


def is_gamma_closed(F: BSAF, E: int) -> bool:
    return closure(F, E) & gamma(F, E) & ~E == 0


def enumerate_gamma(F: BSAF, sem: str) -> list[int]:
    cache = F._cache.setdefault("sem", {})
    if sem in cache:
        return cache[sem]
    if sem == "adm_g":
        out = [E for E in enumerate_classical(F, "cf")
               if E & ~gamma(F, E) == 0 and is_gamma_closed(F, E)]
    elif sem == "com_g":
        out = [E for E in enumerate_gamma(F, "adm_g") if gamma(F, E) & ~E == 0]
    elif sem == "grd_g":
        out = minimal(enumerate_gamma(F, "com_g"))
    elif sem == "pref_g":
        out = maximal(enumerate_gamma(F, "adm_g"))
    else:
        raise ValueError(f"not a Gamma semantics: {sem!r}")
    cache[sem] = out
    return out
