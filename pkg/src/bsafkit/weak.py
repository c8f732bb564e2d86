"""Weak admissibility through the reduct recursion, and the weak family.

The recursion terminates because the reduct of a nonempty set has strictly
fewer arguments, and the empty set never needs a reduct (no attack can hit
one of its members).
"""

from __future__ import annotations

from functools import lru_cache

from .classical import maximal, minimal
from .framework import (BSAF, attacked_by, closed_sets, closure, is_conflict_free,
                        subsets)
from .reducts import lift, project, reduct

WEAK = ("adm_w", "com_w", "grd_w", "pref_w")


def is_weakly_admissible(F: BSAF, E: int) -> bool:
    if not is_conflict_free(F, E) or closure(F, E) != E:
        return False
    plus = attacked_by(F, E)
    live = [a for a in F.attacks if (E >> a.head) & 1 and not a.tail & plus]
    if not live:
        return True
    G = reduct(F, E)
    W = adm_w(G)
    for a in live:
        need = project(F, G, a.tail)
        if any(need & ~w == 0 for w in W):
            return False
    return True


@lru_cache(maxsize=1 << 16)
def adm_w(F: BSAF) -> tuple[int, ...]:
    """Weakly admissible sets, memoized on the framework's value."""
    return tuple(E for E in closed_sets(F) if is_weakly_admissible(F, E))


def is_weakly_admissible_cc(F: BSAF, E: int) -> bool:
    """Closed-attacker characterization, recursing only into itself."""
    if not is_conflict_free(F, E) or closure(F, E) != E:
        return False
    eplus = attacked_by(F, E)
    attackers = [C for C in closed_sets(F) if attacked_by(F, C) & E and not eplus & C]
    if not attackers:
        return True
    G = reduct(F, E)
    W = set(adm_w_cc(G))
    return all(project(F, G, C & ~E) not in W for C in attackers)


@lru_cache(maxsize=1 << 16)
def adm_w_cc(F: BSAF) -> tuple[int, ...]:
    return tuple(E for E in closed_sets(F) if is_weakly_admissible_cc(F, E))


def w_defends(F: BSAF, E: int, X: int) -> bool:
    """Weak defense of ``X`` by ``E``, all quantifiers by enumeration."""
    eplus = attacked_by(F, E)
    hits = [a for a in F.attacks if (X >> a.head) & 1]
    if not hits:
        return True
    lifted = None
    extendable = None
    for a in hits:
        for C in closed_sets(F):
            if a.tail & ~C or eplus & C:
                continue
            if lifted is None:
                G = reduct(F, E)
                lifted = [E | lift(F, G, w) for w in adm_w(G)]
            if any(C & ~w == 0 for w in lifted):
                return False
            if extendable is None:
                extendable = any(X & ~w == 0 for w in adm_w(F))
            if not extendable:
                return False
    return True


def _blocks_completeness(F: BSAF, E: int, X: int, closed_targets: bool) -> bool:
    if closed_targets and closure(F, X) != X:
        return False
    return w_defends(F, E, X)


def is_weakly_complete(F: BSAF, E: int, closed_targets: bool = False) -> bool:
    """No strict superset of ``E`` is w-defended by ``E``.

    By default every superset counts, so an unattacked but unclosed set is
    defended vacuously.  That reading breaks modularization once supports are
    present; ``closed_targets`` restricts the check to closed supersets,
    which restores it but also hides the sets that make weak completeness
    fail the semantics-relations principle.
    """
    if not is_weakly_admissible(F, E):
        return False
    free = F.full & ~E
    return not any(s and _blocks_completeness(F, E, E | s, closed_targets)
                   for s in subsets(free))


def enumerate_weak(F: BSAF, sem: str, closed_targets: bool = False) -> list[int]:
    cache = F._cache.setdefault("sem", {})
    key = sem + "/closed" if closed_targets and sem in ("com_w", "grd_w") else sem
    if key in cache:
        return cache[key]
    if sem == "adm_w":
        out = list(adm_w(F))
    elif sem == "com_w":
        out = [E for E in adm_w(F) if is_weakly_complete(F, E, closed_targets)]
    elif sem == "grd_w":
        out = minimal(enumerate_weak(F, "com_w", closed_targets))
    elif sem == "pref_w":
        out = maximal(list(adm_w(F)))
    else:
        raise ValueError(f"not a weak semantics: {sem!r}")
    cache[key] = out
    return out
