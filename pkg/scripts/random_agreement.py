"""Searcher/verifier agreement and certificate exclusivity on random graphs.

    python scripts/random_agreement.py --count 10000 --max-vertices 8 --seed 1
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from mmic.canon import automorphism_group
from mmic.chirality import classify, search_ic_certificate, search_mirror_certificate, verify_verdict
from mmic.graph import from_edge_list


@dataclass(frozen=True)
class RandomConfig:
    count: int = 10_000
    max_vertices: int = 8
    seed: int = 1


def random_graph(rng: random.Random, max_n: int):
    n = rng.randint(1, max_n)
    p = rng.random()
    return from_edge_list(n, [(u, w) for u in range(n) for w in range(u + 1, n) if rng.random() < p])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=RandomConfig.count)
    ap.add_argument("--max-vertices", type=int, default=RandomConfig.max_vertices)
    ap.add_argument("--seed", type=int, default=RandomConfig.seed)
    a = ap.parse_args()
    cfg = RandomConfig(a.count, a.max_vertices, a.seed)
    rng = random.Random(cfg.seed)
    stats: Counter = Counter()
    t0 = time.perf_counter()
    for _ in range(cfg.count):
        g = random_graph(rng, cfg.max_vertices)
        v = classify(g)
        stats[v.status.value] += 1
        if not verify_verdict(g, v):
            stats["verifier_rejects"] += 1
        group = automorphism_group(g)
        if search_mirror_certificate(g, group) and search_ic_certificate(g, 3, group):
            stats["both_certificates"] += 1
    print(dict(stats), f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
