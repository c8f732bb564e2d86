"""Walk through the bundled counterexample frameworks.

    python3 demos/counterexamples.py
"""

from importlib.resources import files

from bsafkit import check_principle, extensions, parse_bsaf, reduct, verify_witness
from bsafkit.weak import enumerate_weak

CASES = [
    ("pa_witness.bsaf", "weak", "PA"),
    ("weak_fl_witness.bsaf", "weak", "SR"),
    ("strong_closure.bsaf", "strong", "UM"),
    ("gamma_modular.bsaf", "strong_gamma", "M"),
    ("sg_ne_witness.bsaf", "strong_gamma", "NE"),
    ("sg_um_witness.bsaf", "strong_gamma", "UM"),
    ("weak_m_witness.bsaf", "weak", "M"),
    ("classical_m_witness.bsaf", "classical", "M"),
]


def load(name):
    return parse_bsaf(files("bsafkit.data").joinpath(name).read_text())


def show(F, sem):
    return ", ".join(F.fmt(E) for E in extensions(F, sem)) or "none"


def main():
    for name, fam, p in CASES:
        F = load(name)
        rep = check_principle(F, p, fam)
        print(f"{name}: ({p}) for {fam} -> {rep.verdict}"
              f"{'' if not rep.violated else ', witness re-checked ' + str(verify_witness(rep))}")
        if rep.note:
            print(f"    {rep.note}")

    F = load("weak_fl_witness.bsaf")
    print("\nweak completeness on weak_fl_witness.bsaf")
    print("  every superset counts:", [F.fmt(E) for E in enumerate_weak(F, "com_w")])
    print("  closed supersets only:", [F.fmt(E) for E in enumerate_weak(F, "com_w", closed_targets=True)])

    F = load("gamma_modular.bsaf")
    G = reduct(F, F.mask("d"))
    print("\ngamma_modular.bsaf: adm_sg =", show(F, "adm_sg"))
    print("  reduct wrt {d}: adm_sg =", show(G, "adm_sg"))


if __name__ == "__main__":
    main()
