"""Proper-minor census of the two 7- and 8-vertex intrinsically chiral graphs.

    python scripts/gamma_minors.py
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from mmic.planarity import planar
from mmic.workbench.theorems import mmic_details


@dataclass(frozen=True)
class MinorConfig:
    jobs: int = 1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=1)
    cfg = MinorConfig(ap.parse_args().jobs)
    d = mmic_details(cfg.jobs)
    for name in ("GAMMA7", "GAMMA8"):
        minors, verdicts = d[name]["minors"], d[name]["verdicts"]
        by_kind = Counter(
            ("simple" if h.is_simple else "multi", "planar" if planar(h) else "non-planar", v.status.value)
            for h, v in zip(minors, verdicts)
        )
        print(f"{name}: {len(minors)} proper minors")
        for key, count in sorted(by_kind.items()):
            print(f"  {' / '.join(key):45} {count:>4}")
    print("\nGAMMA7 edge classes whose contraction leaves a parallel pair:")
    for (a, b), h in d["gamma7_contractions"]:
        print(f"  {a}{b}: planar={planar(h)}")
    simple = all(h.is_simple for h in d["gamma8_contractions"])
    print(f"\nGAMMA8 one-contraction minors all simple: {simple}")


if __name__ == "__main__":
    main()
