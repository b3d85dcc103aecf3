"""Edge deletion / contraction and minor enumeration up to isomorphism."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .canon import automorphism_group, canonical_form
from .graph import MultiGraph, Pair, _build, drop_isolated, norm_pair, remove_edge


class MinorBudgetExceeded(RuntimeError):
    pass


MAX_MINOR_VERTICES = 10
MAX_MINOR_EDGES = 14


class StepKind(enum.Enum):
    DELETE_EDGE = "delete_edge"
    CONTRACT_EDGE = "contract_edge"
    DELETE_ISOLATED_VERTEX = "delete_isolated_vertex"


@dataclass(frozen=True)
class MinorStep:
    kind: StepKind
    target: Pair | int

    def apply(self, g: MultiGraph) -> MultiGraph:
        if self.kind is StepKind.DELETE_EDGE:
            return delete_edge(g, self.target)
        if self.kind is StepKind.CONTRACT_EDGE:
            return contract_edge(g, self.target)
        return delete_vertex(g, self.target)


def delete_edge(g: MultiGraph, e: Pair) -> MultiGraph:
    return remove_edge(g, *e)


def delete_vertex(g: MultiGraph, v: int) -> MultiGraph:
    if g.neighbors[v]:
        raise ValueError(f"vertex {v} is not isolated")
    keep = [x for x in range(g.n) if x != v]
    pos = {x: i for i, x in enumerate(keep)}
    counts = {(pos[u], pos[w]): m for (u, w), m in g.mult.items()}
    labels = [g.label(x) for x in keep] if g.labels else None
    return _build(len(keep), counts, labels)


def contract_edge(g: MultiGraph, e: Pair) -> MultiGraph:
    """Merge the endpoints of ``e``; loops vanish, parallel edges add up."""
    u, w = norm_pair(*e)
    if (u, w) not in g.mult:
        raise ValueError(f"edge {(u, w)} not present")

    def image(x):
        x = u if x == w else x
        return x - 1 if x > w else x

    counts: dict[Pair, int] = {}
    for (a, b), m in g.mult.items():
        a, b = image(a), image(b)
        if a != b:
            p = norm_pair(a, b)
            counts[p] = counts.get(p, 0) + m
    labels = None
    if g.labels:
        labels = [g.label(x) for x in range(g.n) if x != w]
        labels[u] = f"{g.label(u)}+{g.label(w)}"
    return _build(g.n - 1, counts, labels)


def normalize(g: MultiGraph) -> MultiGraph:
    """Drop isolated vertices; an edgeless graph collapses to K1."""
    if not g.edges:
        return MultiGraph(min(g.n, 1))
    return drop_isolated(g)


def nonsimple_contraction_classes(g: MultiGraph) -> list[Pair]:
    """One edge per automorphism orbit whose contraction creates a parallel edge."""
    if not g.is_simple:
        raise ValueError("expects a simple graph")
    nb = [set(x) for x in g.neighbors]
    hits = [(u, w) for u, w in g.pairs if nb[u] & nb[w]]
    if not hits:
        return []
    group = automorphism_group(g)
    return sorted(min(orb) for orb in group.pair_orbits(hits))


def single_step_minors(g: MultiGraph) -> list[MultiGraph]:
    out = []
    for e in g.pairs:
        out.append(normalize(delete_edge(g, e)))
        out.append(normalize(contract_edge(g, e)))
    return out


def all_proper_minors(g: MultiGraph) -> dict[bytes, MultiGraph]:
    """Every proper minor up to isomorphism, keyed (and ordered) by canonical form."""
    if g.n > MAX_MINOR_VERTICES or g.edge_count > MAX_MINOR_EDGES:
        raise MinorBudgetExceeded(
            f"minor enumeration limited to {MAX_MINOR_VERTICES} vertices and {MAX_MINOR_EDGES} edges"
        )
    start = normalize(g)
    root = canonical_form(start)
    seen: dict[bytes, MultiGraph] = {}
    frontier = [start]
    while frontier:
        nxt = []
        for h in frontier:
            for child in single_step_minors(h):
                key = canonical_form(child)
                if key != root and key not in seen:
                    seen[key] = child
                    nxt.append(child)
        frontier = nxt
    return dict(sorted(seen.items()))


def contains_minor(g: MultiGraph, h: MultiGraph) -> bool:
    """Whether ``h`` (isolated vertices ignored) is a minor of ``g``."""
    h = normalize(h)
    if not h.edges:
        return g.n >= h.n
    simple_target = h.is_simple
    g = normalize(g.skeleton() if simple_target else g)
    return _contains(canonical_form(g), g, canonical_form(h), h.n, h.edge_count, simple_target)


_memo: dict[tuple[bytes, bytes], bool] = {}


def _contains(gkey, g, hkey, hn, hm, simple_target) -> bool:
    if gkey == hkey:
        return True
    if g.n < hn or g.edge_count < hm:
        return False
    memo_key = (gkey, hkey)
    if memo_key in _memo:
        return _memo[memo_key]
    found = False
    children = {}
    for e in g.pairs:
        for child in (delete_edge(g, e), contract_edge(g, e)):
            child = normalize(child.skeleton() if simple_target else child)
            children.setdefault(canonical_form(child), child)
    for ckey, child in children.items():
        if _contains(ckey, child, hkey, hn, hm, simple_target):
            found = True
            break
    _memo[memo_key] = found
    return found
