"""Assumption-based argumentation frameworks and their BSAF instantiation.

The text format is line based::

    asm a
    ctr a a_bar
    rule a_bar <- b, c
    rule p <-

The contrary of an assumption may itself be an assumption; instantiation
treats that case like any other atom.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .framework import BSAF, NAME_RE, ParseError, canonical, indices, max_args, SizeCapExceeded


@dataclass(frozen=True)
class Rule:
    """``head <- body``; the body is a sorted tuple and may repeat an atom,
    each occurrence being a separate child in a derivation tree."""

    head: int
    body: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(sorted(self.body)))


@dataclass(frozen=True, eq=False)
class ABAF:
    """``(L, R, A, c)`` with atoms densely indexed in first-occurrence order.

    ``assumptions`` holds atom ids in index order; ``contrary`` maps an
    assumption id to an atom id.
    """

    atoms: tuple[str, ...]
    rules: tuple[Rule, ...]
    assumptions: tuple[int, ...]
    contrary: dict[int, int]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("atom names must be unique")
        if set(self.contrary) != set(self.assumptions):
            raise ValueError("contrary must be defined for exactly the assumptions")

    @property
    def asm_names(self) -> tuple[str, ...]:
        return tuple(self.atoms[a] for a in self.assumptions)

    def atom_id(self, name: str) -> int:
        return self.atoms.index(name)

    def is_flat(self) -> bool:
        asm = set(self.assumptions)
        return all(r.head not in asm for r in self.rules)

    def canonical_form(self):
        """Name-based structure; two frameworks are equal iff these match."""
        names = self.atoms
        return (
            frozenset(names),
            frozenset(names[a] for a in self.assumptions),
            frozenset((names[a], names[c]) for a, c in self.contrary.items()),
            frozenset((names[r.head], tuple(sorted(names[b] for b in r.body))) for r in self.rules),
        )

    def __eq__(self, other):
        return isinstance(other, ABAF) and self.canonical_form() == other.canonical_form()

    def __hash__(self):
        return hash(self.canonical_form())

    def to_text(self) -> str:
        names = self.atoms
        lines = [f"asm {names[a]}" for a in self.assumptions]
        lines += [f"ctr {names[a]} {names[self.contrary[a]]}" for a in self.assumptions]
        for r in self.rules:
            body = ", ".join(names[b] for b in sorted(r.body))
            lines.append(f"rule {names[r.head]} <- {body}".rstrip())
        return "\n".join(lines) + "\n"


def parse_abaf(text: str) -> ABAF:
    atoms: list[str] = []
    ids: dict[str, int] = {}

    def atom(name: str, lineno: int) -> int:
        if not NAME_RE.match(name):
            raise ParseError(f"bad atom name {name!r}", lineno)
        if name not in ids:
            ids[name] = len(atoms)
            atoms.append(name)
        return ids[name]

    asms: list[int] = []
    ctr_lines: list[tuple[str, str, int]] = []
    rules: list[Rule] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        kw, _, rest = line.partition(" ")
        rest = rest.strip()
        if kw == "asm":
            if len(rest.split()) != 1:
                raise ParseError("expected 'asm <name>'", lineno)
            a = atom(rest, lineno)
            if a not in asms:
                asms.append(a)
        elif kw == "ctr":
            parts = rest.split()
            if len(parts) != 2:
                raise ParseError("expected 'ctr <assumption> <atom>'", lineno)
            atom(parts[0], lineno)
            atom(parts[1], lineno)
            ctr_lines.append((parts[0], parts[1], lineno))
        elif kw == "rule":
            if "<-" not in rest:
                raise ParseError("expected 'rule <head> <- <body>'", lineno)
            head_txt, body_txt = (s.strip() for s in rest.split("<-", 1))
            head = atom(head_txt, lineno)
            body = [atom(b.strip(), lineno) for b in body_txt.split(",")] if body_txt else []
            rules.append(Rule(head, tuple(body)))
        else:
            raise ParseError(f"unknown directive {kw!r}", lineno)

    contrary: dict[int, int] = {}
    asm_set = set(asms)
    for a_name, c_name, lineno in ctr_lines:
        a = ids[a_name]
        if a not in asm_set:
            raise ParseError(f"contrary declared for undeclared assumption {a_name!r}", lineno)
        if a in contrary:
            raise ParseError(f"duplicate contrary declaration for {a_name!r}", lineno)
        contrary[a] = ids[c_name]
    missing = [atoms[a] for a in asms if a not in contrary]
    if missing:
        raise ParseError(f"assumption without contrary: {', '.join(missing)}")
    # dedupe rules, keep first occurrence order
    rules = list(dict.fromkeys(rules))
    return ABAF(tuple(atoms), tuple(rules), tuple(sorted(asms)), contrary)


def _asm_bits(D: ABAF) -> dict[int, int]:
    """Atom id of an assumption -> its bit in the assumption mask."""
    return {a: 1 << i for i, a in enumerate(D.assumptions)}


def derivable_tails(D: ABAF, expand_assumptions: bool = False) -> list[set[int]]:
    """Leaf sets of derivation trees, per atom.

    ``table[p]`` is a set of assumption bitmasks (bit ``i`` is the ``i``-th
    assumption); no minimality filter is applied.  By default an assumption
    occurring below the root is a leaf, so a tree never continues through
    another assumption's rules.  ``expand_assumptions=True`` drops that
    restriction and returns every tree's leaf set.  Both tables decide the
    same derivability once combined with :func:`aba_closure`.
    """
    key = ("tails", expand_assumptions)
    hit = D._cache.get(key)
    if hit is not None:
        return hit
    bits = _asm_bits(D)
    table: list[set[int]] = [set() for _ in D.atoms]
    for a, b in bits.items():
        table[a].add(b)
    for r in D.rules:
        if not r.body:
            table[r.head].add(0)

    def pool(atom):
        if not expand_assumptions and atom in bits:
            return (bits[atom],)
        return tuple(table[atom])

    changed = True
    while changed:
        changed = False
        for r in D.rules:
            if not r.body:
                continue
            pools = [pool(b) for b in r.body]
            if any(not p for p in pools):
                continue
            new = set()
            for combo in product(*pools):
                acc = 0
                for t in combo:
                    acc |= t
                if acc not in table[r.head]:
                    new.add(acc)
            if new:
                table[r.head] |= new
                changed = True
    D._cache[key] = table
    return table


def derives(D: ABAF, S: int, p: int) -> bool:
    """``S ⊢ p`` for some subset of the assumption mask ``S``."""
    base = aba_closure(D, S)
    return any(t & ~base == 0 for t in derivable_tails(D)[p])


def aba_closure(D: ABAF, S: int) -> int:
    """All assumptions derivable from subsets of ``S`` (assumption bitmask)."""
    tails = derivable_tails(D)
    cur = S
    changed = True
    while changed:
        changed = False
        for i, a in enumerate(D.assumptions):
            if not (cur >> i) & 1 and any(t & ~cur == 0 for t in tails[a]):
                cur |= 1 << i
                changed = True
    return cur


def instantiate(D: ABAF, expand_assumptions: bool = False) -> BSAF:
    """The BSAF ``F_D``: arguments are the assumptions.

    Attacks are ``(T, h)`` for every tail ``T`` of ``contrary(h)``; supports
    are ``(T, h)`` for every tail of the assumption ``h`` except the
    one-node tree ``{h}``.  See :func:`derivable_tails` for the tail table.
    """
    tails = derivable_tails(D, expand_assumptions)
    bits = _asm_bits(D)
    attacks, supports = set(), set()
    for i, h in enumerate(D.assumptions):
        for t in tails[D.contrary[h]]:
            attacks.add((t, i))
        for t in tails[h]:
            if t != bits[h]:
                supports.add((t, i))
    return BSAF(D.asm_names, attacks, supports)


# -- direct ABA-side semantics (cross-check oracle) -------------------------
#
# Everything below uses forward chaining over the rules and never touches the
# tail table, so it can check instantiate() independently.


def theory(D: ABAF, S: int) -> set[int]:
    """``Th_D(S)``: atoms derivable from the assumption mask ``S``."""
    derived = {a for i, a in enumerate(D.assumptions) if (S >> i) & 1}
    changed = True
    while changed:
        changed = False
        for r in D.rules:
            if r.head not in derived and derived.issuperset(r.body):
                derived.add(r.head)
                changed = True
    return derived


def direct_extensions(D: ABAF, sem: str) -> list[int]:
    """Extensions of ``D`` computed straight from the ABA definitions."""
    n = len(D.assumptions)
    if n > max_args():
        raise SizeCapExceeded(f"{n} assumptions exceed the enumeration cap")
    full = (1 << n) - 1
    th = [theory(D, S) for S in range(full + 1)]
    pos = {a: i for i, a in enumerate(D.assumptions)}
    cl = [sum(1 << pos[a] for a in th[S] if a in pos) for S in range(full + 1)]
    # assumptions whose contrary S derives
    hits = [sum(1 << i for i, a in enumerate(D.assumptions) if D.contrary[a] in th[S])
            for S in range(full + 1)]
    closed = [S for S in range(full + 1) if cl[S] == S]

    def def_(S, i):
        return all(hits[S] & T for T in closed if (hits[T] >> i) & 1)

    def defended(S):
        return sum(1 << i for i in range(n) if def_(S, i))

    adm = [S for S in closed
           if not hits[S] & S and all(def_(S, i) for i in indices(S))]
    if sem == "adm":
        return canonical(adm)
    if sem == "pref":
        return canonical(S for S in adm if not any(S != T and S & ~T == 0 for T in adm))
    com = [S for S in adm if defended(S) & ~S == 0]
    if sem == "com":
        return canonical(com)
    if sem == "grd":
        return canonical(S for S in com if not any(S != T and T & ~S == 0 for T in com))
    raise ValueError(f"unsupported semantics {sem!r}")
