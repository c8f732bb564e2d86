"""Randomized invariants over small frameworks drawn by hypothesis."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracle as O

from bsafkit import BSAF, extensions, parse_bsaf, reduct
from bsafkit.classical import maximal
from bsafkit.framework import closure, is_closed, is_conflict_free
from bsafkit.reducts import lift, project
from bsafkit.weak import is_weakly_admissible, is_weakly_admissible_cc

NAMES = "abcde"


@st.composite
def frameworks(draw, max_args=4, supports=True):
    n = draw(st.integers(0, max_args))
    full = (1 << n) - 1
    edge = st.tuples(st.integers(0, full), st.integers(0, max(n - 1, 0)))
    if n == 0:
        return BSAF(())
    atts = draw(st.lists(edge, max_size=5))
    sups = draw(st.lists(edge, max_size=3)) if supports else []
    return BSAF(NAMES[:n], atts, sups)


common = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@common
@given(frameworks())
def test_text_roundtrip(F):
    assert parse_bsaf(F.to_text()) == F


@common
@given(frameworks(), st.data())
def test_closure_is_a_closure_operator(F, data):
    E = data.draw(st.integers(0, F.full))
    X = data.draw(st.integers(0, F.full))
    c = closure(F, E)
    assert E & ~c == 0
    assert closure(F, c) == c
    assert closure(F, E & X) & ~closure(F, E) == 0


@common
@given(frameworks(), st.data())
def test_reduct_shape(F, data):
    E = data.draw(st.integers(0, F.full))
    G = reduct(F, E)
    if E:
        assert G.n < F.n
    for m in range(G.full + 1):
        assert project(F, G, lift(F, G, m)) == m


@common
@given(frameworks(), st.data())
def test_closedness_transfer(F, data):
    E = data.draw(st.integers(0, F.full))
    if not (is_conflict_free(F, E) and is_closed(F, E)):
        return
    G = reduct(F, E)
    for Ep in range(G.full + 1):
        U = E | lift(F, G, Ep)
        if is_conflict_free(G, Ep) and is_closed(G, Ep):
            assert is_closed(F, U)
        if is_conflict_free(F, U) and is_closed(F, U):
            assert is_closed(G, Ep)


@common
@given(frameworks())
def test_semantics_inclusions(F):
    adm = set(extensions(F, "adm"))
    assert set(extensions(F, "com")) <= adm
    assert set(extensions(F, "pref")) == set(maximal(list(adm)))
    assert set(extensions(F, "grd")) <= set(extensions(F, "com"))
    assert set(extensions(F, "adm_s")) <= adm
    assert set(extensions(F, "adm_w")) >= adm


@common
@given(frameworks())
def test_weak_characterizations_agree(F):
    for E in range(F.full + 1):
        assert is_weakly_admissible(F, E) == is_weakly_admissible_cc(F, E)


@common
@given(frameworks())
def test_against_oracle(F):
    fw = O.from_bsaf(F)
    for sem in ("adm", "com", "adm_g", "adm_s", "adm_sg", "adm_w", "com_w"):
        assert O.names_of(F, extensions(F, sem)) == set(O.extensions(fw, sem))


@common
@given(frameworks(supports=False))
def test_support_free_frameworks_are_setafs(F):
    fw = O.from_bsaf(F)
    for sem in ("adm", "com", "pref"):
        assert O.names_of(F, extensions(F, sem)) == O.setaf_classical(fw, sem)
    assert O.names_of(F, extensions(F, "adm_w")) == set(O.adm_w_setaf(fw))
