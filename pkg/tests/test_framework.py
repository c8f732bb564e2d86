import pytest

from corpus import bsaf_corpus, bundled
import oracle as O

from bsafkit import BSAF, ParseError, SizeCapExceeded, parse_bsaf
from bsafkit.framework import (attacked_by, attacks_set, canonical, closed_sets, closure,
                               defends, gamma, is_closed, is_conflict_free, set_order, subsets)


@pytest.fixture
def ex1():
    return bundled("intro.aba")


def test_parse_roundtrip_and_value_equality():
    text = "arg a\narg b\narg c\natt a,b -> c\nsup c -> a\natt -> b\n"
    F = parse_bsaf(text)
    assert F.n == 3
    assert parse_bsaf(F.to_text()) == F
    assert hash(parse_bsaf(F.to_text())) == hash(F)
    # comments and blank lines are ignored, edge order is irrelevant
    G = parse_bsaf("# header\narg a\n\narg b\narg c\natt -> b\nsup c -> a\natt b,a -> c\n")
    assert G == F


@pytest.mark.parametrize("text", [
    "arg a\narg a\n",
    "arg a\natt a -> b\n",
    "arg a\natt a b\n",
    "argument a\n",
    "arg a-b\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_bsaf(text)


def test_size_cap(monkeypatch):
    F = BSAF([f"x{i}" for i in range(5)])
    F.check_size(5)
    with pytest.raises(SizeCapExceeded):
        F.check_size(4)
    monkeypatch.setenv("BSAFKIT_MAX_ARGS", "3")
    with pytest.raises(SizeCapExceeded):
        F.check_size()


def test_canonical_order():
    assert canonical([0b11, 0b100, 0, 0b1]) == [0, 0b1, 0b100, 0b11]
    assert set_order(0b101) == (2, (0, 2))
    assert sorted(subsets(0b101)) == [0, 1, 4, 5]


def test_closure_examples(ex1):
    assert closure(ex1, ex1.mask("a", "b")) == ex1.mask("a", "b", "e")
    F = BSAF.from_names("a", supports=[((), "a")])
    assert closure(F, 0) == F.mask("a")
    assert closed_sets(F) == [F.mask("a")]


def test_attacks_and_conflicts(ex1):
    assert attacks_set(ex1, ex1.mask("c"), ex1.mask("d"))
    F = BSAF.from_names("a", attacks=[((), "a")])
    assert attacks_set(F, 0, F.mask("a"))
    assert is_conflict_free(ex1, ex1.mask("a", "b"))
    assert not is_conflict_free(ex1, ex1.mask("a", "b", "e"))


def test_closed_sets_intro(ex1):
    # everything except the four sets containing a,b but not e
    closed = set(closed_sets(ex1))
    assert len(closed) == 28
    ab, e = ex1.mask("a", "b"), ex1.mask("e")
    assert all((E & ab == ab and not E & e) == (E not in closed) for E in range(32))


def test_defense_examples(ex1):
    assert defends(ex1, ex1.mask("c"), ex1.index["c"])
    assert gamma(ex1, 0) == ex1.mask("a", "b")
    F = BSAF.from_names("ab", attacks=[((), "a")])
    assert not any(defends(F, E, 0) for E in range(4))
    exc = bundled("strong_closure.bsaf")
    assert gamma(exc, exc.mask("e")) == exc.mask("a", "b", "c", "e")


def test_primitives_match_oracle():
    for F in bsaf_corpus(60):
        fw = O.from_bsaf(F)
        assert O.names_of(F, closed_sets(F)) == set(O.closed_sets(fw))
        for E in range(F.full + 1):
            named = frozenset(F.members(E))
            assert frozenset(F.members(closure(F, E))) == O.cl(fw, named)
            assert frozenset(F.members(attacked_by(F, E))) == O.plus(fw, named)
            assert is_conflict_free(F, E) == O.cf(fw, named)
            assert is_closed(F, E) == O.closed(fw, named)
            assert frozenset(F.members(gamma(F, E))) == O.Gamma(fw, named)
