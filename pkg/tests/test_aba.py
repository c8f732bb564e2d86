from itertools import product

import pytest

from corpus import abaf_corpus, text
import oracle as O

from bsafkit import ParseError, derivable_tails, direct_extensions, extensions, instantiate, parse_abaf
from bsafkit.aba import aba_closure, derives


def named_tails(D, table, atom):
    return {frozenset(D.asm_names[i] for i in range(len(D.assumptions)) if (t >> i) & 1)
            for t in table[D.atom_id(atom)]}


def brute_tails(D, atom, expand):
    rules = [(D.atoms[r.head], tuple(D.atoms[b] for b in r.body)) for r in D.rules]
    asms = frozenset(D.asm_names)
    depth = len(D.atoms) + len(D.rules)
    got = O.derivation_tails(D.atoms, rules, asms, atom, depth, expand)
    # one level deeper must not add anything
    assert got == O.derivation_tails(D.atoms, rules, asms, atom, depth + 1, expand)
    return set(got)


@pytest.fixture
def ex1():
    return parse_abaf(text("intro.aba"))


def test_intro_shape(ex1):
    assert len(ex1.assumptions) == 5
    assert len(ex1.rules) == 5
    assert not ex1.is_flat()
    assert parse_abaf(ex1.to_text()) == ex1


def test_intro_tails(ex1):
    table = derivable_tails(ex1)
    fs = frozenset
    assert named_tails(ex1, table, "c_bar") == {fs("d")}
    assert named_tails(ex1, table, "e_bar") == {fs("e"), fs("bc")}
    assert named_tails(ex1, table, "e") == {fs("ab"), fs("e")}


def test_intro_instantiation(ex1):
    F = instantiate(ex1)
    att = {(frozenset(F.members(e.tail)), F.names[e.head]) for e in F.attacks}
    sup = {(frozenset(F.members(e.tail)), F.names[e.head]) for e in F.supports}
    fs = frozenset
    assert att == {(fs("d"), "c"), (fs("c"), "d"), (fs("bc"), "e"), (fs("e"), "e")}
    assert sup == {(fs("ab"), "e")}


def test_intro_expanded_tails(ex1):
    # following e's own rule inside e_bar's tree adds the tail {a,b}
    F = instantiate(ex1, expand_assumptions=True)
    extra = {(frozenset(F.members(e.tail)), F.names[e.head]) for e in F.attacks}
    assert (frozenset("ab"), "e") in extra
    for sem in ("adm", "com", "grd", "pref"):
        assert extensions(F, sem) == extensions(instantiate(ex1), sem)


def test_repeated_body_atom_mixes_derivations():
    D = parse_abaf("asm a\nasm b\nctr a x\nctr b y\nrule p <- a\nrule p <- b\nrule q <- p, p\n")
    fs = frozenset
    assert named_tails(D, derivable_tails(D), "q") == {fs("a"), fs("b"), fs("ab")}
    assert named_tails(D, derivable_tails(D), "q") == brute_tails(D, "q", False)


def test_fact_assumption_is_in_every_closure():
    D = parse_abaf("asm a\nctr a a_bar\nrule a <-\n")
    assert aba_closure(D, 0) == 1
    assert instantiate(D).supports == {(0, 0)}


def test_two_rule_framework():
    D = parse_abaf("asm a\nasm b\nctr a a_bar\nctr b b_bar\nrule a_bar <- b\nrule a <-\n")
    F = instantiate(D)
    assert (F.mask("b"), F.index["a"]) in F.attacks
    assert (0, F.index["a"]) in F.supports


def test_flat_gives_setaf():
    D = parse_abaf("asm a\nasm b\nctr a b\nctr b x\nrule x <- a\n")
    assert D.is_flat()
    assert not instantiate(D).supports


@pytest.mark.parametrize("src", [
    "asm a\n",                                  # no contrary
    "asm a\nctr a x\nctr a y\n",               # duplicate contrary
    "asm a\nctr b x\nctr a x\n",               # contrary for a non-assumption
    "rule p q\n",
    "fact p\n",
    "asm a b\n",
])
def test_parse_errors(src):
    with pytest.raises(ParseError):
        parse_abaf(src)


@pytest.mark.parametrize("expand", [False, True])
def test_tails_match_tree_enumeration(expand):
    for D in abaf_corpus(60):
        table = derivable_tails(D, expand)
        for atom in D.atoms:
            assert named_tails(D, table, atom) == brute_tails(D, atom, expand), (D.to_text(), atom)


def test_derives_matches_forward_chaining():
    from bsafkit.aba import theory
    for D in abaf_corpus(60):
        n = len(D.assumptions)
        for S, p in product(range(1 << n), range(len(D.atoms))):
            assert derives(D, S, p) == (p in theory(D, S))


def test_direct_semantics_match_instantiation():
    for D in abaf_corpus(40):
        F = instantiate(D)
        for sem in ("adm", "com", "grd", "pref"):
            assert direct_extensions(D, sem) == extensions(F, sem)
