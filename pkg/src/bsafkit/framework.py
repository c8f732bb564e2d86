"""Bipolar set-based argumentation frameworks and their primitive predicates.

Argument sets are plain ``int`` bitmasks over the framework's argument
index: bit ``i`` set means ``names[i]`` is a member.  Every semantics in the
package is built from the predicates defined here.
"""

from __future__ import annotations

import os
import re
from typing import Iterable, Iterator, NamedTuple

NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")

DEFAULT_MAX_ARGS = 22


class ParseError(ValueError):
    """Malformed framework text; carries the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class SizeCapExceeded(RuntimeError):
    pass


def max_args() -> int:
    value = os.environ.get("BSAFKIT_MAX_ARGS")
    return int(value) if value else DEFAULT_MAX_ARGS


class Edge(NamedTuple):
    """An attack or support: a tail bitmask and a single head index."""

    tail: int
    head: int


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def set_order(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: cardinality first, then lexicographic over member indices."""
    return popcount(mask), indices(mask)


def canonical(masks: Iterable[int]) -> list[int]:
    return sorted(set(masks), key=set_order)


def subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class BSAF:
    """A finite BSAF ``(A, R, S)``.

    ``names`` fixes the argument index; ``attacks`` and ``supports`` are
    frozensets of :class:`Edge`.  Instances are immutable and compare by
    value, so they can key memo tables.
    """

    __slots__ = ("names", "attacks", "supports", "index", "_key", "_cache")

    def __init__(self, names: Iterable[str], attacks: Iterable[tuple[int, int]] = (),
                 supports: Iterable[tuple[int, int]] = ()):
        self.names = tuple(names)
        self.index = {name: i for i, name in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise ValueError("duplicate argument names")
        full = (1 << len(self.names)) - 1
        self.attacks = frozenset(Edge(*e) for e in attacks)
        self.supports = frozenset(Edge(*e) for e in supports)
        for e in self.attacks | self.supports:
            if e.tail & ~full or not 0 <= e.head < len(self.names):
                raise ValueError(f"edge {e} mentions an argument outside the framework")
        self._key = (
            self.names,
            tuple(sorted(self.attacks, key=edge_order)),
            tuple(sorted(self.supports, key=edge_order)),
        )
        self._cache: dict = {}

    @classmethod
    def from_names(cls, names: Iterable[str],
                   attacks: Iterable[tuple[Iterable[str], str]] = (),
                   supports: Iterable[tuple[Iterable[str], str]] = ()) -> "BSAF":
        names = tuple(names)
        index = {n: i for i, n in enumerate(names)}

        def conv(edges):
            out = []
            for tail, head in edges:
                if isinstance(tail, str):
                    tail = [tail] if tail else []
                m = 0
                for t in tail:
                    m |= 1 << index[t]
                out.append((m, index[head]))
            return out

        return cls(names, conv(attacks), conv(supports))

    # -- identity -----------------------------------------------------------

    @property
    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, BSAF) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"BSAF({len(self.names)} args, {len(self.attacks)} attacks, {len(self.supports)} supports)"

    # -- set helpers --------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full(self) -> int:
        return (1 << len(self.names)) - 1

    def mask(self, *members: str) -> int:
        """Bitmask of the given argument names: ``F.mask("a", "c")``."""
        m = 0
        for name in members:
            m |= 1 << self.index[name]
        return m

    def members(self, mask: int) -> tuple[str, ...]:
        return tuple(self.names[i] for i in indices(mask))

    def fmt(self, mask: int) -> str:
        return "{" + ",".join(self.members(mask)) + "}"

    def edge_text(self, e: Edge) -> str:
        return f"{','.join(self.members(e.tail))} -> {self.names[e.head]}"

    def check_size(self, cap: int | None = None) -> None:
        cap = max_args() if cap is None else cap
        if self.n > cap:
            raise SizeCapExceeded(
                f"{self.n} arguments exceed the enumeration cap of {cap} (set BSAFKIT_MAX_ARGS)")

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"arg {name}" for name in self.names]
        for kw, edges in (("att", self._key[1]), ("sup", self._key[2])):
            for e in edges:
                tail = ",".join(self.members(e.tail))
                lines.append(f"{kw} {tail} -> {self.names[e.head]}" if tail
                             else f"{kw} -> {self.names[e.head]}")
        return "\n".join(lines) + "\n"


def edge_order(e: Edge):
    return indices(e.tail), e.head


def parse_bsaf(text: str) -> BSAF:
    """Parse the line-based BSAF format (``arg``, ``att``, ``sup`` lines)."""
    names: list[str] = []
    seen: set[str] = set()
    raw_edges: list[tuple[str, list[str], str, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        kw, _, rest = line.partition(" ")
        rest = rest.strip()
        if kw == "arg":
            if not NAME_RE.match(rest):
                raise ParseError(f"bad argument name {rest!r}", lineno)
            if rest in seen:
                raise ParseError(f"duplicate argument {rest!r}", lineno)
            seen.add(rest)
            names.append(rest)
        elif kw in ("att", "sup") or line.startswith(("att->", "sup->")):
            kw, body = line[:3], line[3:]
            if "->" not in body:
                raise ParseError("expected '->'", lineno)
            tail_txt, head = (s.strip() for s in body.split("->", 1))
            tail = [t.strip() for t in tail_txt.split(",")] if tail_txt else []
            for t in tail + [head]:
                if not NAME_RE.match(t):
                    raise ParseError(f"bad argument name {t!r}", lineno)
            raw_edges.append((kw, tail, head, lineno))
        else:
            raise ParseError(f"unknown directive {kw!r}", lineno)
    index = {n: i for i, n in enumerate(names)}
    attacks, supports = [], []
    for kw, tail, head, lineno in raw_edges:
        m = 0
        for t in tail + [head]:
            if t not in index:
                raise ParseError(f"undeclared argument {t!r}", lineno)
        for t in tail:
            m |= 1 << index[t]
        (attacks if kw == "att" else supports).append((m, index[head]))
    return BSAF(names, attacks, supports)


# -- primitive predicates ---------------------------------------------------


def closure(F: BSAF, E: int) -> int:
    """Least superset of ``E`` closed under the support relation."""
    cache = F._cache.setdefault("cl", {})
    hit = cache.get(E)
    if hit is not None:
        return hit
    cur = E
    pending = [s for s in F.supports if not (cur >> s.head) & 1]
    changed = True
    while changed:
        changed = False
        rest = []
        for s in pending:
            if (cur >> s.head) & 1:
                continue
            if s.tail & ~cur == 0:
                cur |= 1 << s.head
                changed = True
            else:
                rest.append(s)
        pending = rest
    cache[E] = cur
    return cur


def is_closed(F: BSAF, E: int) -> bool:
    return closure(F, E) == E


def attacked_by(F: BSAF, E: int) -> int:
    """``E^+``: heads of all attacks whose tail lies inside ``E``."""
    cache = F._cache.setdefault("plus", {})
    hit = cache.get(E)
    if hit is not None:
        return hit
    out = 0
    for a in F.attacks:
        if a.tail & ~E == 0:
            out |= 1 << a.head
    cache[E] = out
    return out


def attacks_set(F: BSAF, E: int, T: int) -> bool:
    return attacked_by(F, E) & T != 0


def is_conflict_free(F: BSAF, E: int) -> bool:
    # Deliberately ignores closure(E).
    return attacked_by(F, E) & E == 0


def closed_sets(F: BSAF) -> list[int]:
    """All closed subsets, by cardinality then lexicographic index order."""
    hit = F._cache.get("closed")
    if hit is None:
        F.check_size()
        if not F.supports:
            hit = canonical(range(F.full + 1))
        else:
            hit = canonical(E for E in range(F.full + 1) if closure(F, E) == E)
        F._cache["closed"] = hit
    return hit


def _closed_with_plus(F: BSAF) -> list[tuple[int, int]]:
    hit = F._cache.get("closed_plus")
    if hit is None:
        hit = [(C, attacked_by(F, C)) for C in closed_sets(F)]
        hit = [(C, p) for C, p in hit if p]
        F._cache["closed_plus"] = hit
    return hit


def defends(F: BSAF, E: int, a: int) -> bool:
    """``E`` attacks every closed set that attacks argument index ``a``."""
    bit = 1 << a
    eplus = attacked_by(F, E)
    return all(eplus & C for C, plus in _closed_with_plus(F) if plus & bit)


def gamma(F: BSAF, E: int) -> int:
    """The characteristic function: every argument ``E`` defends."""
    cache = F._cache.setdefault("gamma", {})
    hit = cache.get(E)
    if hit is not None:
        return hit
    eplus = attacked_by(F, E)
    undefended = 0
    for C, plus in _closed_with_plus(F):
        if not eplus & C:
            undefended |= plus
    out = F.full & ~undefended
    cache[E] = out
    return out


def defends_set(F: BSAF, E: int, X: int) -> bool:
    return X & ~gamma(F, E) == 0
