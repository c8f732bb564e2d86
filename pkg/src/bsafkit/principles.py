"""Executable principle checks, paradoxical edges, restriction and generators.

A check evaluates a principle's quantified statement exhaustively on one
framework.  The verdict is ``holds-on-sample`` or ``violated``; ``holds`` is
only produced by :func:`sweep`, which covers every framework of a bounded
size.  Witnesses are the first violating instance in canonical set order and
:func:`verify_witness` re-derives them from the serialized framework.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb
from typing import Iterator

from .aba import ABAF, Rule
from .classical import maximal, minimal
from .framework import BSAF, canonical, gamma, indices, parse_bsaf, set_order, subsets
from .reducts import lift, project, reduct
from .semantics import extensions


class Principle(str, Enum):
    F = "F"
    WF = "WF"
    SR = "SR"
    NE = "NE"
    MC = "MC"
    M = "M"
    S = "S"
    L = "L"
    UM = "UM"
    URM = "URM"
    CC = "CC"
    PA = "PA"
    PRS = "PRS"


FAMILIES = ("classical", "gamma", "strong", "strong_gamma", "weak")

# role -> semantics name; None marks a role computed here (strong has no grd)
_ROLES = {
    "classical": {"adm": "adm", "com": "com", "grd": "grd", "pref": "pref"},
    "gamma": {"adm": "adm_g", "com": "com_g", "grd": "grd_g", "pref": "pref_g"},
    "strong": {"adm": "adm_s", "com": "com_s", "grd": None, "pref": "pref_s"},
    "strong_gamma": {"adm": "adm_sg", "com": "com_sg", "grd": "grd_sg", "pref": "pref_sg"},
    "weak": {"adm": "adm_w", "com": "com_w", "grd": "grd_w", "pref": "pref_w"},
}

# the non-strong baseline each strong family is compared against
_BASE = {"strong": ("adm", "com"), "strong_gamma": ("adm_g", "com_g")}

_GLOBAL = {Principle.F, Principle.SR, Principle.NE, Principle.MC, Principle.M}
_ALLOWED = {fam: set(_GLOBAL) for fam in FAMILIES}
for _fam in ("classical", "gamma", "strong", "strong_gamma"):
    _ALLOWED[_fam].add(Principle.WF)
for _fam in ("strong", "strong_gamma"):
    _ALLOWED[_fam] |= {Principle.S, Principle.UM, Principle.URM, Principle.CC}
_ALLOWED["weak"] |= {Principle.L, Principle.PA, Principle.PRS}

_ONLY = {
    Principle.WF: "the weakened fundamental lemma is stated for the non-weak families",
    Principle.S: "strengthening compares a strong family with its baseline",
    Principle.UM: "unique maximum is a strong-admissibility desideratum",
    Principle.URM: "unique relative maximum is a strong-admissibility desideratum",
    Principle.CC: "complete containment is a strong-admissibility desideratum",
    Principle.L: "liberalization compares weak admissibility with admissibility",
    Principle.PA: "paradoxical assumptions is a weak-admissibility principle",
    Principle.PRS: "paradoxical attacks/supports is a weak-admissibility principle",
}


HOLDS_ON_SAMPLE = "holds-on-sample"
VIOLATED = "violated"
HOLDS = "holds"


@dataclass
class PrincipleReport:
    principle: str
    family: str
    verdict: str
    framework: str = ""
    sets: list[list[str]] = field(default_factory=list)
    note: str = ""
    semantics: str | None = None

    @property
    def violated(self) -> bool:
        return self.verdict == VIOLATED

    def to_dict(self) -> dict:
        out = {"principle": self.principle, "family": self.family, "verdict": self.verdict}
        if self.violated:
            w = {"framework": self.framework, "sets": self.sets, "note": self.note}
            if self.semantics:
                w["semantics"] = self.semantics
            out["witness"] = w
        else:
            out["witness"] = None
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# -- framework surgery -----------------------------------------------------


def find_paradoxical(F: BSAF) -> tuple[set, set]:
    def covered(T: int, head: int | None) -> bool:
        for t in indices(T):
            if not any(r.head == t and r.tail and r.tail & ~T == 0
                       and (head is None or not (r.tail >> head) & 1)
                       for r in F.attacks):
                return False
        return True

    atts = {r for r in F.attacks if r.tail and covered(r.tail, r.head)}
    sups = {s for s in F.supports if s.tail and covered(s.tail, None)}
    return atts, sups


def restrict(F: BSAF, keep: int) -> BSAF:
    """Sub-framework on ``keep``; edges mentioning anything else are dropped."""
    old = indices(keep)
    pos = {o: i for i, o in enumerate(old)}

    def remap(m):
        return sum(1 << pos[o] for o in indices(m))

    def inside(e):
        return e.tail & ~keep == 0 and (keep >> e.head) & 1

    return BSAF([F.names[o] for o in old],
                [(remap(e.tail), pos[e.head]) for e in F.attacks if inside(e)],
                [(remap(e.tail), pos[e.head]) for e in F.supports if inside(e)])


def without_edge(F: BSAF, edge, kind: str) -> BSAF:
    if kind == "attack":
        return BSAF(F.names, F.attacks - {edge}, F.supports)
    return BSAF(F.names, F.attacks, F.supports - {edge})


# -- semantics by role -----------------------------------------------------


def role(F: BSAF, family: str, r: str) -> list[int]:
    name = _ROLES[family][r]
    if name is None:
        return minimal(extensions(F, _ROLES[family]["com"]))
    return extensions(F, name)


def _named_family(F: BSAF, sets) -> frozenset:
    return frozenset(frozenset(F.members(E)) for E in sets)


def _sets(F: BSAF, *masks: int) -> list[list[str]]:
    return [list(F.members(m)) for m in masks]


# -- individual principles -------------------------------------------------
#
# Each returns None when the principle holds on F, else (sets, note, semantics).


def _p_F(F, fam):
    adm = role(F, fam, "adm")
    admset = set(adm)
    for S in adm:
        for a in indices(gamma(F, S) & ~S):
            if S | (1 << a) not in admset:
                return (_sets(F, S, 1 << a),
                        f"{F.fmt(S)} defends {F.names[a]} but the union is not in "
                        f"{_ROLES[fam]['adm']}", _ROLES[fam]["adm"])
    return None


def _p_WF(F, fam):
    adm = role(F, fam, "adm")
    for S in adm:
        for a in indices(gamma(F, S) & ~S):
            want = S | (1 << a)
            if not any(want & ~T == 0 for T in adm):
                return (_sets(F, S, 1 << a),
                        f"no {_ROLES[fam]['adm']} set contains {F.fmt(want)}",
                        _ROLES[fam]["adm"])
    return None


def _p_SR(F, fam):
    adm, com, grd, pref = (set(role(F, fam, r)) for r in ("adm", "com", "grd", "pref"))
    for bigger_name, smaller, bigger in (("com", pref, com), ("adm", com, adm), ("com", grd, com)):
        for E in canonical(smaller - bigger):
            return (_sets(F, E), f"{F.fmt(E)} is missing from {bigger_name}", None)
    return None


def _p_NE(F, fam):
    for r in ("adm", "com", "grd", "pref"):
        if not role(F, fam, r):
            return ([], f"{_ROLES[fam][r] or 'grd_s'} is empty", _ROLES[fam][r])
    return None


def _p_MC(F, fam):
    pref = set(role(F, fam, "pref"))
    mc = set(maximal(role(F, fam, "com")))
    diff = canonical(pref ^ mc)
    if diff:
        return (_sets(F, diff[0]),
                f"pref and the maximal complete sets differ on {F.fmt(diff[0])}", None)
    return None


def _p_M(F, fam):
    # modularization for the strong families is a statement about admissibility
    roles = ("adm",) if fam in _BASE else ("adm", "com", "grd", "pref")
    for r in roles:
        name = _ROLES[fam][r]
        if name is None:
            continue
        sigma = extensions(F, name)
        sset = set(sigma)
        for E in sigma:
            G = reduct(F, E)
            inner = extensions(G, name)
            for Ep in inner:
                U = E | lift(F, G, Ep)
                if U not in sset:
                    return (_sets(F, E, lift(F, G, Ep)),
                            f"union {F.fmt(U)} is not in {name}", name)
            if fam == "weak":
                inner_set = set(inner)
                for U in sigma:
                    if U & E != E:
                        continue
                    rest = U & ~E
                    if lift(F, G, project(F, G, rest)) != rest:
                        continue
                    if project(F, G, rest) not in inner_set:
                        return (_sets(F, E, rest),
                                f"{F.fmt(rest)} is not in {name} of the reduct", name)
    return None


def _p_S(F, fam):
    base = set(extensions(F, _BASE[fam][0]))
    for E in role(F, fam, "adm"):
        if E not in base:
            return (_sets(F, E), f"{F.fmt(E)} is not in {_BASE[fam][0]}", _ROLES[fam]["adm"])
    return None


def _p_L(F, fam):
    weak = set(extensions(F, "adm_w"))
    for E in extensions(F, "adm"):
        if E not in weak:
            return (_sets(F, E), f"admissible {F.fmt(E)} is not weakly admissible", "adm_w")
    return None


def _p_UM(F, fam):
    top = maximal(role(F, fam, "adm"))
    if len(top) > 1:
        return (_sets(F, *top), "several maximal strongly admissible sets", _ROLES[fam]["adm"])
    return None


def _p_URM(F, fam):
    strong = role(F, fam, "adm")
    for S in extensions(F, "adm"):
        top = maximal([E for E in strong if E & ~S == 0])
        if len(top) > 1:
            return (_sets(F, S, *top),
                    f"admissible {F.fmt(S)} has several maximal strongly admissible subsets",
                    _ROLES[fam]["adm"])
    return None


def _p_CC(F, fam):
    com = extensions(F, _BASE[fam][1])
    for E in role(F, fam, "adm"):
        for C in com:
            if E & ~C:
                return (_sets(F, E, C), f"{F.fmt(E)} is not inside complete {F.fmt(C)}",
                        _ROLES[fam]["adm"])
    return None


def _p_PA(F, fam):
    here = _named_family(F, extensions(F, "adm_w"))
    for a in range(F.n):
        if any(r.tail == 1 << a and r.head == a for r in F.attacks):
            G = restrict(F, F.full & ~(1 << a))
            there = _named_family(G, extensions(G, "adm_w"))
            if here != there:
                return (_sets(F, 1 << a),
                        f"removing self-attacker {F.names[a]} changes adm_w", "adm_w")
    return None


def _p_PRS(F, fam):
    here = _named_family(F, extensions(F, "adm_w"))
    atts, sups = find_paradoxical(F)
    edges = [("attack", e) for e in atts] + [("support", e) for e in sups]
    edges.sort(key=lambda ke: (ke[0], set_order(ke[1].tail), ke[1].head))
    for kind, e in edges:
        G = without_edge(F, e, kind)
        if _named_family(G, extensions(G, "adm_w")) != here:
            return (_sets(F, e.tail, 1 << e.head),
                    f"removing paradoxical {kind} {F.edge_text(e)} changes adm_w", "adm_w")
    return None


_CHECKS = {
    Principle.F: _p_F, Principle.WF: _p_WF, Principle.SR: _p_SR, Principle.NE: _p_NE,
    Principle.MC: _p_MC, Principle.M: _p_M, Principle.S: _p_S, Principle.L: _p_L,
    Principle.UM: _p_UM, Principle.URM: _p_URM, Principle.CC: _p_CC,
    Principle.PA: _p_PA, Principle.PRS: _p_PRS,
}


def validate(p: Principle | str, family: str) -> Principle:
    p = Principle(p)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if p not in _ALLOWED[family]:
        raise ValueError(f"({p.value}) is not meaningful for the {family} family: {_ONLY[p]}")
    return p


def check_principle(F: BSAF, p: Principle | str, family: str) -> PrincipleReport:
    p = validate(p, family)
    found = _CHECKS[p](F, family)
    if found is None:
        return PrincipleReport(p.value, family, HOLDS_ON_SAMPLE)
    sets, note, sem = found
    return PrincipleReport(p.value, family, VIOLATED, F.to_text(), sets, note, sem)


def verify_witness(report: PrincipleReport) -> bool:
    """Re-run the check on a fresh parse of the witness framework."""
    if not report.violated:
        return False
    F = parse_bsaf(report.framework)
    again = check_principle(F, report.principle, report.family)
    return again.violated and again.sets == report.sets


# -- generators ------------------------------------------------------------


@dataclass(frozen=True)
class GenParams:
    n_args: int
    n_attacks: int = 0
    n_supports: int = 0
    max_tail: int = 2
    seed: int = 0
    empty_tail_prob: float = 0.0
    n_aux: int = 0

    def __post_init__(self):
        if min(self.n_args, self.n_attacks, self.n_supports, self.n_aux) < 0:
            raise ValueError("counts must be non-negative")
        if self.max_tail < 1:
            raise ValueError("max_tail must be at least 1")
        if not 0.0 <= self.empty_tail_prob <= 1.0:
            raise ValueError("empty_tail_prob must lie in [0, 1]")


def arg_names(n: int) -> list[str]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    return list(letters[:n]) if n <= 26 else [f"a{i}" for i in range(n)]


def _tail_count(n: int, k: int) -> int:
    return sum(comb(n, s) for s in range(1, min(k, n) + 1))


def _draw_tail(rng: random.Random, pool: list[int], k: int, p_empty: float) -> frozenset:
    if p_empty and rng.random() < p_empty:
        return frozenset()
    k = min(k, len(pool))
    weights = [comb(len(pool), s) for s in range(1, k + 1)]
    size = rng.choices(range(1, k + 1), weights)[0]
    return frozenset(rng.sample(pool, size))


def _draw_edges(rng, n, count, k, p_empty, taken=None):
    avail = _tail_count(n, k) * n + (n if p_empty > 0 else 0)
    if p_empty >= 1.0:
        avail = n
    if count > avail:
        raise ValueError(f"cannot draw {count} distinct edges; only {avail} exist")
    out = set()
    while len(out) < count:
        tail = _draw_tail(rng, list(range(n)), k, p_empty)
        out.add((sum(1 << t for t in tail), rng.randrange(n)))
    return sorted(out, key=lambda e: (indices(e[0]), e[1]))


def random_bsaf(params: GenParams) -> BSAF:
    rng = random.Random(params.seed)
    n = params.n_args
    atts = _draw_edges(rng, n, params.n_attacks, params.max_tail, params.empty_tail_prob)
    sups = _draw_edges(rng, n, params.n_supports, params.max_tail, params.empty_tail_prob)
    return BSAF(arg_names(n), atts, sups)


def random_abaf(params: GenParams) -> ABAF:
    """Assumptions with fresh contraries; attack rules conclude contraries,
    support rules conclude assumptions (so the result is non-flat whenever
    ``n_supports > 0``) and ``n_aux`` rules conclude auxiliary atoms."""
    rng = random.Random(params.seed)
    n = params.n_args
    asm = arg_names(n)
    atoms = asm + [f"{x}_bar" for x in asm] + [f"p{i}" for i in range(params.n_aux)]
    ids = {a: i for i, a in enumerate(atoms)}
    body_pool = [ids[a] for a in asm] + [ids[f"p{i}"] for i in range(params.n_aux)]
    if not body_pool and (params.n_attacks or params.n_supports):
        raise ValueError("rules need at least one assumption or auxiliary atom")
    heads = ([ids[f"{x}_bar"] for x in asm], [ids[a] for a in asm],
             [ids[f"p{i}"] for i in range(params.n_aux)])
    rules: list[Rule] = []
    seen = set()
    for pool, count in zip(heads, (params.n_attacks, params.n_supports, params.n_aux)):
        made = 0
        tries = 0
        while made < count:
            tries += 1
            if tries > 1000 * (count + 1):
                raise ValueError("could not draw enough distinct rules")
            r = Rule(rng.choice(pool),
                     tuple(_draw_tail(rng, body_pool, params.max_tail, params.empty_tail_prob)))
            if r in seen:
                continue
            seen.add(r)
            rules.append(r)
            made += 1
    return ABAF(tuple(atoms), tuple(rules), tuple(ids[a] for a in asm),
                {ids[a]: ids[f"{a}_bar"] for a in asm})


def parse_gen(spec: str) -> list[GenParams]:
    """``n=4,att=4,sup=2,tail=2,seed=1..50`` -> one GenParams per seed."""
    keys = {"n": "n_args", "att": "n_attacks", "sup": "n_supports", "tail": "max_tail",
            "empty": "empty_tail_prob", "aux": "n_aux"}
    kw: dict = {}
    seeds = [0]
    for part in spec.split(","):
        k, _, v = part.partition("=")
        k = k.strip()
        if not v:
            raise ValueError(f"bad generator field {part!r}")
        if k == "seed":
            lo, dots, hi = v.partition("..")
            seeds = list(range(int(lo), int(hi) + 1)) if dots else [int(lo)]
        elif k in keys:
            kw[keys[k]] = float(v) if k == "empty" else int(v)
        else:
            raise ValueError(f"unknown generator field {k!r}")
    if "n_args" not in kw:
        raise ValueError("generator needs n=<args>")
    return [GenParams(seed=s, **kw) for s in seeds]


# -- campaigns -------------------------------------------------------------


def all_bsafs(n: int, max_attacks: int, max_supports: int, max_tail: int = 2) -> Iterator[BSAF]:
    """Every BSAF over ``n`` arguments within the edge bounds."""
    names = arg_names(n)
    edges = [(t, h) for t in range(1, 1 << n) if bin(t).count("1") <= max_tail
             for h in range(n)]
    for na in range(max_attacks + 1):
        for atts in combinations(edges, na):
            for ns in range(max_supports + 1):
                for sups in combinations(edges, ns):
                    yield BSAF(names, atts, sups)


def sweep(frameworks, p: Principle | str, family: str) -> PrincipleReport:
    """``holds`` if no framework in the (finite, exhaustive) collection violates ``p``."""
    p = validate(p, family)
    for F in frameworks:
        rep = check_principle(F, p, family)
        if rep.violated:
            return rep
    return PrincipleReport(p.value, family, HOLDS)
