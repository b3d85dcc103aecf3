"""Brute-force reference computations, independent of the package's search code."""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from mmic.graph import MultiGraph


def perm_table(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)


_TABLES: dict[int, np.ndarray] = {}


def brute_automorphisms(g: MultiGraph) -> set[tuple[int, ...]]:
    """Every vertex permutation preserving the multiplicity matrix (all n! tried)."""
    n = g.n
    if n == 0:
        return {()}
    if n not in _TABLES:
        _TABLES[n] = perm_table(n)
    perms = _TABLES[n]
    a = np.array(g.adj, dtype=np.int16)
    images = a[perms[:, :, None], perms[:, None, :]]
    ok = (images == a).all(axis=(1, 2))
    return {tuple(int(x) for x in p) for p in perms[ok]}


def brute_cycles(g: MultiGraph) -> set[tuple[tuple[int, int], ...]]:
    """All cycles (length >= 3 on the skeleton, plus 2-cycles of parallel pairs) by vertex-order enumeration."""
    out = set()
    for k in range(3, g.n + 1):
        for sub in combinations(range(g.n), k):
            first, rest = sub[0], sub[1:]
            for tail in permutations(rest):
                if tail[0] > tail[-1]:
                    continue
                cyc = (first, *tail)
                edges = [tuple(sorted((cyc[i], cyc[(i + 1) % k]))) for i in range(k)]
                if all(g.multiplicity(u, w) for u, w in edges):
                    out.add(tuple(sorted(edges)))
    for u, w, m in g.edges:
        if m >= 2:
            out.add(((u, w), (u, w)))
    return out


def invariant_under(perms, edges) -> bool:
    from collections import Counter

    base = Counter(edges)
    for p in perms:
        img = Counter(tuple(sorted((p[u], p[w]))) for u, w in edges)
        if img != base:
            return False
    return True
