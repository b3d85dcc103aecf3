"""Classify every connected simple non-planar graph up to an edge budget.

    python scripts/sweep_nonplanar.py --max-edges 11 --jobs 4
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from mmic.canon import automorphism_group, canonical_form
from mmic.enumeration import nonplanar_sweep
from mmic.graph import degree_info
from mmic.workbench.theorems import classify_many


@dataclass(frozen=True)
class SweepConfig:
    max_edges: int = 11
    min_edges: int = 0
    jobs: int = 1


def run(cfg: SweepConfig) -> list[tuple]:
    graphs = list(nonplanar_sweep(cfg.max_edges, cfg.min_edges))
    verdicts = classify_many(graphs, cfg.jobs)
    rows = []
    for g, v in zip(graphs, verdicts):
        sigma = v.mirror.sigma if v.mirror else None
        moved = sum(s != i for i, s in enumerate(sigma)) if sigma else "-"
        rows.append((g.n, g.edge_count, degree_info(g)[1], automorphism_group(g).order, v.status.value, moved, canonical_form(g).decode()))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-edges", type=int, default=SweepConfig.max_edges)
    ap.add_argument("--min-edges", type=int, default=SweepConfig.min_edges)
    ap.add_argument("--jobs", type=int, default=SweepConfig.jobs)
    cfg = SweepConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})
    t0 = time.perf_counter()
    rows = run(cfg)
    print(f"{'n':>3} {'m':>3} {'mindeg':>6} {'|Aut|':>6} {'verdict':>20} {'moved':>5}  graph6")
    for r in rows:
        print(f"{r[0]:>3} {r[1]:>3} {r[2]:>6} {r[3]:>6} {r[4]:>20} {r[5]:>5}  {r[6]}")
    print(f"\n{len(rows)} classes, {dict(Counter(r[4] for r in rows))}, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
