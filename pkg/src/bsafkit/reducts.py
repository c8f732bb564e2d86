"""E-reducts of a BSAF: standard, alternative and Gamma variants."""

from __future__ import annotations

from enum import Enum

from .framework import BSAF, attacked_by, closure, indices


class ReductVariant(str, Enum):
    STANDARD = "standard"
    ALTERNATIVE = "alternative"
    GAMMA = "gamma"


def _restricted(F: BSAF, keep: int, attacks, supports) -> BSAF:
    """Re-index edges over the surviving arguments ``keep``."""
    old = indices(keep)
    pos = {o: i for i, o in enumerate(old)}

    def remap(m):
        out = 0
        for o in indices(m):
            out |= 1 << pos[o]
        return out

    return BSAF(
        [F.names[o] for o in old],
        {(remap(t), pos[h]) for t, h in attacks},
        {(remap(t), pos[h]) for t, h in supports},
    )


def _reduct_for(F: BSAF, C: int, constraints: bool) -> BSAF:
    """Shared construction: ``C`` is the set treated as accepted."""
    plus = attacked_by(F, C)
    keep = F.full & ~(C | plus)
    attacks = set()
    if constraints:
        # Supports of a defeated argument become joint self-attacks on their
        # surviving tail; tails touching a defeated argument can never fire.
        for s in F.supports:
            if (plus >> s.head) & 1 and not s.tail & plus:
                rest = s.tail & ~C
                for t in indices(rest):
                    attacks.add((rest, t))
    for a in F.attacks:
        if not a.tail & plus and (keep >> a.head) & 1:
            attacks.add((a.tail & ~C, a.head))
    supports = {(s.tail & ~C, s.head) for s in F.supports
                if not s.tail & plus and (keep >> s.head) & 1}
    return _restricted(F, keep, attacks, supports)


def reduct(F: BSAF, E: int) -> BSAF:
    """The E-reduct: removes ``cl(E)`` and everything it attacks.

    Supports into a defeated argument are turned into constraint attacks
    from the remaining tail onto each tail member.
    """
    cache = F._cache.setdefault("reduct", {})
    hit = cache.get(E)
    if hit is None:
        hit = cache[E] = _reduct_for(F, closure(F, E), True)
    return hit


def setaf_reduct(F: BSAF, E: int) -> BSAF:
    if F.supports:
        raise ValueError("setaf_reduct requires a framework without supports")
    return _reduct_for(F, E, False)


def alt_reduct(F: BSAF, E: int) -> BSAF:
    """Uses ``E`` itself instead of its closure and adds no constraint attacks."""
    return _reduct_for(F, E, False)


def gamma_reduct(F: BSAF, E: int) -> BSAF:
    """The standard construction driven by the Gamma-closure of ``E``."""
    from .classical import gamma_closure

    return _reduct_for(F, gamma_closure(F, E), True)


def reduct_by(F: BSAF, E: int, variant: ReductVariant | str = ReductVariant.STANDARD) -> BSAF:
    variant = ReductVariant(variant)
    if variant is ReductVariant.STANDARD:
        return reduct(F, E)
    if variant is ReductVariant.ALTERNATIVE:
        return alt_reduct(F, E)
    return gamma_reduct(F, E)


def frameworks_equal(F1: BSAF, F2: BSAF) -> bool:
    """Same argument names and the same named attack and support edges."""

    def named(F):
        return (
            frozenset(F.names),
            frozenset((frozenset(F.members(e.tail)), F.names[e.head]) for e in F.attacks),
            frozenset((frozenset(F.members(e.tail)), F.names[e.head]) for e in F.supports),
        )

    return named(F1) == named(F2)


def lift(F: BSAF, G: BSAF, mask: int) -> int:
    """Map an argument set of ``G`` (a reduct of ``F``) into ``F``'s index."""
    out = 0
    for i in indices(mask):
        out |= 1 << F.index[G.names[i]]
    return out


def project(F: BSAF, G: BSAF, mask: int) -> int:
    """Map an argument set of ``F`` onto ``G``; members outside ``G`` are dropped."""
    out = 0
    for i in indices(mask):
        j = G.index.get(F.names[i])
        if j is not None:
            out |= 1 << j
    return out
