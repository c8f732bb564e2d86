"""Print which principles survive a seeded random campaign, per family.

    python3 demos/principle_matrix.py [seeds]
"""

import sys

from bsafkit import GenParams, check_principle, random_bsaf
from bsafkit.principles import FAMILIES, Principle, validate


def campaign(seeds):
    out = []
    for s in range(seeds):
        n = 1 + s % 5
        try:
            out.append(random_bsaf(GenParams(n, 1 + s % 6, s % 4, 2, s)))
        except ValueError:  # too many edges for a tiny framework
            continue
    return out


def main():
    seeds = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    frameworks = campaign(seeds)
    print(f"{len(frameworks)} frameworks\n")
    for fam in FAMILIES:
        cells = []
        for p in Principle:
            try:
                validate(p, fam)
            except ValueError:
                continue
            bad = sum(check_principle(F, p, fam).violated for F in frameworks)
            cells.append(f"{p.value}:{'ok' if not bad else bad}")
        print(f"{fam:<13} " + "  ".join(cells))


if __name__ == "__main__":
    main()
