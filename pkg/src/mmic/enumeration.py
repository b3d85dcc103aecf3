"""Isomorph-free generation of small (multi)graphs.

The generator grows graphs one edge at a time by canonical augmentation:
a child ``G + e`` is kept only when ``e`` lies in the automorphism orbit of
the child's canonical deletion edge, and only one representative per
automorphism orbit of candidate pairs is tried in each parent.  No global
dedup set is needed.  ``generate_bruteforce`` enumerates labelled graphs and
dedups by a permutation-minimum code; it shares no code with the fast path
and serves as its oracle for up to 6 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from .canon import AutGroup, canonical_form, canonical_labeling, inverse
from .graph import MultiGraph, Pair, add_edge, complete_graph, from_edge_list, is_connected, min_degree
from .planarity import planar

FILTERS = ("nonplanar", "planar", "triangle_free")


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GenSpec:
    max_vertices: int
    max_edges: int
    min_vertices: int = 1
    min_edges: int = 0
    min_degree: int | None = None
    connected: bool = True
    simple_only: bool = True
    filters: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_edges < 0:
            raise ValueError("budgets must be positive")
        unknown = set(self.filters) - set(FILTERS)
        if unknown:
            raise ValueError(f"unknown filters {sorted(unknown)}")

    def accepts(self, g: MultiGraph) -> bool:
        if not (self.min_vertices <= g.n <= self.max_vertices and self.min_edges <= g.edge_count <= self.max_edges):
            return False
        if self.simple_only and not g.is_simple:
            return False
        if self.connected and not is_connected(g):
            return False
        if self.min_degree is not None and min_degree(g) < self.min_degree:
            return False
        if "triangle_free" in self.filters and has_triangle(g):
            return False
        if "nonplanar" in self.filters and planar(g):
            return False
        if "planar" in self.filters and not planar(g):
            return False
        return True


MAX_GEN_VERTICES = 10


def has_triangle(g: MultiGraph) -> bool:
    nb = [set(x) for x in g.neighbors]
    return any(nb[u] & nb[w] for u, w in g.pairs)


def _deletion_class(child: MultiGraph, order: tuple[int, ...], group: AutGroup) -> set[Pair]:
    """Orbit of the canonical deletion pair: largest pair in canonical positions."""
    pos = inverse(order)
    best = max(child.pairs, key=lambda p: sorted((pos[p[0]], pos[p[1]]), reverse=True))
    for orb in group.pair_orbits(child.pairs):
        if best in orb:
            return set(orb)
    raise AssertionError("unreachable")


def _augment(n: int, max_edges: int, simple_only: bool) -> Iterator[MultiGraph]:
    """All graphs on ``n`` vertices with at most ``max_edges`` edges, one per class."""
    root = MultiGraph(n)
    stack = [root]
    all_pairs = list(combinations(range(n), 2))
    while stack:
        g = stack.pop()
        yield g
        if g.edge_count >= max_edges:
            continue
        group = AutGroup(g, canonical_labeling(g)[1], 0)
        candidates = all_pairs if not simple_only else [p for p in all_pairs if p not in g.mult]
        for orb in group.pair_orbits(candidates):
            e = min(orb)
            child = add_edge(g, *e)
            order, gens = canonical_labeling(child)
            cgroup = AutGroup(child, gens, 0)
            if e in _deletion_class(child, order, cgroup):
                stack.append(child)


def generate(spec: GenSpec) -> Iterator[MultiGraph]:
    """One representative per isomorphism class meeting ``spec``.

    Output is ordered by (vertex count, edge count, canonical form); each graph
    is in canonical labelling.
    """
    if spec.max_vertices > MAX_GEN_VERTICES:
        raise BudgetExceeded(f"generation is limited to {MAX_GEN_VERTICES} vertices")
    for n in range(spec.min_vertices, spec.max_vertices + 1):
        if spec.connected and n - 1 > spec.max_edges:
            break
        batch = []
        for g in _augment(n, spec.max_edges, spec.simple_only):
            if spec.accepts(g):
                key = canonical_form(g)
                batch.append((g.edge_count, key, g))
        batch.sort(key=lambda t: (t[0], t[1]))
        for _, _, g in batch:
            order, _ = canonical_labeling(g)
            yield g.relabel(inverse(order))


# -- brute-force oracle --------------------------------------------------------


def _perm_codes(n: int, masks: np.ndarray) -> np.ndarray:
    """Minimum edge-bitmask over all vertex permutations, for each mask."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    best = masks.copy()
    bits = [(masks >> i) & 1 for i in range(len(pairs))]
    for perm in permutations(range(n)):
        code = np.zeros_like(masks)
        for i, (u, w) in enumerate(pairs):
            a, b = perm[u], perm[w]
            j = index[(a, b) if a < b else (b, a)]
            code |= bits[i] << j
        np.minimum(best, code, out=best)
    return best


def generate_bruteforce(n: int, connected: bool = True) -> list[MultiGraph]:
    """Every simple graph on exactly ``n`` vertices, one per class (n <= 6)."""
    if n > 6:
        raise BudgetExceeded("brute-force generation is limited to 6 vertices")
    pairs = list(combinations(range(n), 2))
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    codes = np.unique(_perm_codes(n, masks))
    out = []
    for code in codes.tolist():
        g = from_edge_list(n, [p for i, p in enumerate(pairs) if (code >> i) & 1])
        if not connected or is_connected(g):
            out.append(g)
    return out


# -- non-planar corpora ----------------------------------------------------------


def nonplanar_subgraphs_of_k6(connected_only: bool = True) -> list[MultiGraph]:
    """Non-planar spanning subgraphs of K6 up to isomorphism.

    Walks down from K6 one edge deletion at a time; a planar graph is never
    expanded, since deleting edges keeps it planar.
    """
    start = complete_graph(6)
    seen = {canonical_form(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for e in g.pairs:
                child = from_edge_list(6, [p for p in g.pairs if p != e])
                key = canonical_form(child)
                if key in seen or planar(child):
                    continue
                seen[key] = child
                nxt.append(child)
        frontier = nxt
    out = [g for _, g in sorted(seen.items(), key=lambda kv: (kv[1].edge_count, kv[0]))]
    if connected_only:
        out = [g for g in out if is_connected(g)]
    return out


def nonplanar_sweep(max_edges: int = 11, min_edges: int = 0) -> Iterator[MultiGraph]:
    """Connected simple non-planar graphs with ``min_edges <= ||G|| <= max_edges``.

    A connected graph with ``||G|| - |G| <= 2`` is planar, so ``|G| <= max_edges - 3``.
    """
    max_v = max_edges - 3
    if max_v < 5:
        return
    spec = GenSpec(max_vertices=max_v, max_edges=max_edges, min_vertices=5, min_edges=min_edges, filters=frozenset({"nonplanar"}))
    yield from generate(spec)
