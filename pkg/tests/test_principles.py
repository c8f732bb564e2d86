import json

import pytest

from corpus import abaf_corpus, bundled
import oracle as O

from bsafkit import (BSAF, GenParams, Principle, check_principle, extensions, find_paradoxical,
                     parse_abaf, random_abaf, random_bsaf, restrict, verify_witness)
from bsafkit.framework import Edge
from bsafkit.principles import all_bsafs, parse_gen, sweep, validate


def test_paradoxical_edges():
    F = BSAF.from_names("ab", attacks=[("a", "a"), ("a", "b")], supports=[("a", "b")])
    a, b = F.mask("a"), F.mask("b")
    atts, sups = find_paradoxical(F)
    assert atts == {Edge(a, 1)}
    assert sups == {Edge(a, 1)}


def test_restrict():
    F = bundled("pa_witness.bsaf")
    R = restrict(F, 0)
    assert R.n == 0 and not R.supports
    assert extensions(R, "adm_w") == [0]
    F1 = bundled("intro.aba")
    R1 = restrict(F1, F1.mask("a", "b", "e"))
    assert R1.names == ("a", "b", "e")
    assert R1.attacks == {Edge(R1.mask("e"), 2)}
    assert R1.supports == {Edge(R1.mask("a", "b"), 2)}


def test_pa_weak():
    rep = check_principle(bundled("pa_witness.bsaf"), "PA", "weak")
    assert rep.violated
    assert verify_witness(rep)


def test_um_strong_on_exc():
    rep = check_principle(bundled("strong_closure.bsaf"), Principle.UM, "strong")
    assert rep.violated
    assert rep.sets == [["a"], ["b"]]
    assert verify_witness(rep)


def test_report_json_shape():
    held = json.loads(check_principle(bundled("strong_af.bsaf"), "S", "strong").to_json())
    assert held == {"principle": "S", "family": "strong", "verdict": "holds-on-sample",
                    "witness": None}
    bad = json.loads(check_principle(bundled("pa_witness.bsaf"), "NE", "weak").to_json())
    assert bad["verdict"] == "violated"
    assert set(bad["witness"]) >= {"framework", "sets", "note"}


def test_verify_rejects_holding_report():
    assert not verify_witness(check_principle(bundled("strong_af.bsaf"), "S", "strong"))


@pytest.mark.parametrize("p, fam", [("PA", "classical"), ("UM", "weak"), ("WF", "weak"),
                                    ("L", "strong"), ("S", "gamma")])
def test_meaningless_combinations(p, fam):
    with pytest.raises(ValueError):
        validate(p, fam)


def test_unknown_family():
    with pytest.raises(ValueError):
        validate("F", "stable")


def test_strong_gamma_relations_can_fail():
    F = bundled("sg_ne_witness.bsaf")
    for p in ("NE", "WF", "SR", "MC"):
        rep = check_principle(F, p, "strong_gamma")
        assert rep.violated and verify_witness(rep), p
    assert check_principle(bundled("sg_um_witness.bsaf"), "UM", "strong_gamma").violated


def test_strong_gamma_modularization_witness():
    rep = check_principle(bundled("gamma_modular.bsaf"), "M", "strong_gamma")
    assert rep.violated
    assert rep.sets == [["d"], ["a"]]


def test_generator_counts():
    F = random_bsaf(GenParams(5, 6, 3, 3, seed=42))
    assert F.n == 5 and len(F.attacks) == 6 and len(F.supports) == 3
    assert random_bsaf(GenParams(5, 6, 3, 3, seed=42)) == F
    assert all(bin(e.tail).count("1") <= 3 for e in F.attacks | F.supports)


def test_generator_rejects_impossible_counts():
    with pytest.raises(ValueError):
        random_bsaf(GenParams(1, 5, 0, 1, seed=0))


def test_empty_tails():
    F = random_bsaf(GenParams(3, 4, 2, 2, seed=3, empty_tail_prob=0.5))
    assert any(e.tail == 0 for e in F.attacks | F.supports)


def test_parse_gen():
    specs = parse_gen("n=4,att=4,sup=2,tail=2,seed=1..50")
    assert len(specs) == 50
    assert specs[0] == GenParams(4, 4, 2, 2, seed=1)
    assert parse_gen("n=3,att=1,sup=0,seed=7")[0].seed == 7
    with pytest.raises(ValueError):
        parse_gen("n=3,bogus=1")


def test_abaf_roundtrip():
    for D in abaf_corpus(500):
        assert parse_abaf(D.to_text()) == D
    D = random_abaf(GenParams(3, 3, 2, 2, seed=9, n_aux=1))
    assert not D.is_flat()


def test_sweep_small_frameworks():
    # exhaustive collections earn a plain "holds"
    assert sweep(all_bsafs(2, 2, 1), "S", "strong").verdict == "holds"
    assert sweep(all_bsafs(2, 1, 1), "F", "classical").violated


def test_weak_modularization_witness():
    F = bundled("weak_m_witness.bsaf")
    rep = check_principle(F, "M", "weak")
    assert rep.violated and verify_witness(rep)
    assert rep.sets == [["a", "b", "e"], []]
    assert rep.semantics == "com_w"


def test_classical_modularization_counterexample():
    F = bundled("classical_m_witness.bsaf")
    fw = O.from_bsaf(F)
    fs = frozenset
    assert fs("c") in O.classical(fw, "adm")
    assert fs("d") in O.classical(O.reduct(fw, fs("c")), "adm")
    assert fs("cd") not in O.classical(fw, "adm")
    rep = check_principle(F, "M", "classical")
    assert rep.violated and rep.sets == [["c"], ["d"]]
