"""Canonical labelling, isomorphism and automorphism groups.

Individualization-refinement: equitable refinement of an ordered partition,
backtracking over the first largest non-singleton cell, and pruning of
children that are equivalent under automorphisms already discovered.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .graph import MultiGraph, Pair, norm_pair, to_graph6

Permutation = tuple[int, ...]

DEFAULT_MAX_ORDER = 10**7


class GroupTooLarge(RuntimeError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"automorphism group order {order} exceeds cap {cap} (raise --max-aut-order)")
        self.order = order
        self.cap = cap


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p after q``: v -> p[q[v]]."""
    return tuple(p[x] for x in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for v, pv in enumerate(p):
        inv[pv] = v
    return tuple(inv)


def is_automorphism(g: MultiGraph, p: Sequence[int]) -> bool:
    if sorted(p) != list(range(g.n)):
        return False
    mult = g.mult
    return all(mult.get(norm_pair(p[u], p[w]), 0) == m for (u, w), m in mult.items())


# -- search ----------------------------------------------------------------


def _refine(adj, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; cell order is label-invariant."""
    while True:
        sigs = {}
        for cell in cells:
            for v in cell:
                row = adj[v]
                sigs[v] = tuple(sum(row[w] for w in c) for c in cells)
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sigs[v], []).append(v)
            for key in sorted(groups):
                new.append(groups[key])
        if len(new) == len(cells):
            return new
        cells = new


def _orbit_roots(n: int, gens: Iterable[Permutation]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: MultiGraph):
        self.n = g.n
        self.adj = g.adj
        self.first: tuple | None = None
        self.first_order: list[int] | None = None
        self.best: tuple | None = None
        self.best_order: list[int] | None = None
        self.auts: list[Permutation] = []

    def run(self):
        n = self.n
        degs = [sum(r) for r in self.adj]
        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(degs[v], []).append(v)
        cells = [groups[d] for d in sorted(groups)]
        self._visit(cells, [])

    def _leaf(self, cells):
        order = [c[0] for c in cells]
        adj = self.adj
        key = tuple(adj[order[i]][order[j]] for j in range(1, self.n) for i in range(j))
        if self.first is None:
            self.first, self.first_order = key, order
            self.best, self.best_order = key, order
            return
        if key == self.first:
            self._record(self.first_order, order)
        elif key == self.best:
            self._record(self.best_order, order)
        elif key > self.best:
            self.best, self.best_order = key, order

    def _record(self, ref: list[int], order: list[int]):
        p = [0] * self.n
        for a, b in zip(ref, order):
            p[a] = b
        p = tuple(p)
        if p != identity(self.n) and p not in self.auts:
            self.auts.append(p)

    def _visit(self, cells, seq):
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            self._leaf(cells)
            return
        size = max(len(c) for c in cells)
        t = next(i for i, c in enumerate(cells) if len(c) == size)
        target = cells[t]
        done: list[int] = []
        for v in sorted(target):
            if done:
                stab = [a for a in self.auts if all(a[x] == x for x in seq)]
                if stab:
                    roots = _orbit_roots(self.n, stab)
                    if any(roots[v] == roots[u] for u in done):
                        continue
            done.append(v)
            rest = [x for x in target if x != v]
            self._visit(cells[:t] + [[v], rest] + cells[t + 1 :], seq + [v])


@lru_cache(maxsize=200_000)
def _search_cached(g: MultiGraph) -> tuple[tuple[int, ...], tuple[Permutation, ...]]:
    if g.n == 0:
        return (), ()
    s = _Search(g)
    s.run()
    return tuple(s.best_order), tuple(s.auts)


def canonical_labeling(g: MultiGraph) -> tuple[tuple[int, ...], tuple[Permutation, ...]]:
    """Return ``(order, generators)``; ``order[i]`` is the vertex placed at position ``i``.

    The generators generate the full automorphism group.
    """
    key = MultiGraph(g.n, g.edges)  # drop labels so the cache ignores them
    return _search_cached(key)


def canonical_relabel(g: MultiGraph) -> MultiGraph:
    order, _ = canonical_labeling(g)
    return g.relabel(inverse(order))


def canonical_form(g: MultiGraph) -> bytes:
    """Label-independent identifier: graph6 of the canonical skeleton plus a multiplicity block."""
    c = canonical_relabel(g).with_labels(None)
    text = to_graph6(c.skeleton())
    multi = [f"{u}-{w}:{m}" for u, w, m in c.edges if m > 1]
    if multi:
        text += "|" + ",".join(multi)
    return text.encode("ascii")


def are_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)


def find_isomorphism(g: MultiGraph, h: MultiGraph) -> Permutation | None:
    """A vertex map ``p`` with ``g.relabel(p) == h``, or None."""
    if not are_isomorphic(g, h):
        return None
    og, _ = canonical_labeling(g)
    oh, _ = canonical_labeling(h)
    p = [0] * g.n
    for a, b in zip(og, oh):
        p[a] = b
    return tuple(p)


# -- automorphism groups ---------------------------------------------------


def _group_order(n: int, gens: Sequence[Permutation]) -> int:
    if not gens:
        return 1
    from sympy.combinatorics import Permutation as SymPerm, PermutationGroup

    return int(PermutationGroup([SymPerm(list(g)) for g in gens]).order())


@dataclass(frozen=True)
class AutGroup:
    graph: MultiGraph
    generators: tuple[Permutation, ...]
    order: int

    @property
    def n(self) -> int:
        return self.graph.n

    def elements(self) -> Iterator[Permutation]:
        """All elements, identity first, then in lexicographic order."""
        yield from _closure(self.n, self.generators, self.order)

    def involutions(self) -> list[Permutation]:
        """Elements with sigma^2 = id, ordered by (moved points, image)."""
        invs = [p for p in self.elements() if all(p[p[v]] == v for v in range(self.n))]
        return sorted(invs, key=lambda p: (sum(p[v] != v for v in range(self.n)), p))

    def vertex_orbits(self) -> list[list[int]]:
        roots = _orbit_roots(self.n, self.generators)
        orbs: dict[int, list[int]] = {}
        for v, r in enumerate(roots):
            orbs.setdefault(r, []).append(v)
        return list(orbs.values())

    def pair_orbits(self, pairs: Iterable[Pair]) -> list[list[Pair]]:
        """Orbits on the given vertex pairs (assumed to be a union of orbits)."""
        pairs = sorted(set(norm_pair(*p) for p in pairs))
        index = {p: i for i, p in enumerate(pairs)}
        parent = list(range(len(pairs)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, (u, w) in enumerate(pairs):
                j = index.get(norm_pair(g[u], g[w]))
                if j is None:
                    continue
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        orbs: dict[int, list[Pair]] = {}
        for i, p in enumerate(pairs):
            orbs.setdefault(find(i), []).append(p)
        return list(orbs.values())


@lru_cache(maxsize=4096)
def _closure_list(n: int, gens: tuple[Permutation, ...], order: int = 0) -> tuple[Permutation, ...]:
    ident = identity(n)
    seen = {ident}
    queue = deque([ident])
    getters = [g.__getitem__ for g in gens]
    while queue and len(seen) != order:
        p = queue.popleft()
        for get in getters:
            q = tuple(map(get, p))
            if q not in seen:
                seen.add(q)
                queue.append(q)
    rest = sorted(seen - {ident})
    return (ident, *rest)


def _closure(n: int, gens: tuple[Permutation, ...], order: int = 0) -> Iterator[Permutation]:
    yield from _closure_list(n, gens, order)


def automorphism_group(g: MultiGraph, max_order: int = DEFAULT_MAX_ORDER) -> AutGroup:
    _, gens = canonical_labeling(g)
    order = _group_order(g.n, gens)
    if order > max_order:
        raise GroupTooLarge(order, max_order)
    for p in gens:
        if not is_automorphism(g, p):  # pragma: no cover - internal consistency
            raise AssertionError(f"search produced a non-automorphism {p}")
    return AutGroup(g, tuple(gens), order)


def image_of_edges(p: Sequence[int], edges: Iterable[Pair]) -> Counter:
    return Counter(norm_pair(p[u], p[w]) for u, w in edges)


def is_invariant_edge_set(group: AutGroup, edges: Iterable[Pair]) -> bool:
    """True iff every automorphism maps the edge multiset onto itself."""
    s = Counter(norm_pair(*e) for e in edges)
    mult = group.graph.mult
    for e, m in s.items():
        if mult.get(e, 0) < m:
            raise ValueError(f"edge {e} x{m} is not in the graph")
    return all(image_of_edges(p, s.elements()) == s for p in group.generators)
