"""Planarity decisions with checkable evidence.

The decision and the Kuratowski witness come from networkx's
Left-Right planarity test; everything it returns is re-checked here
(rotation systems by face tracing and Euler's formula, witnesses by
smoothing and comparing with K5 / K3,3).  ``find_kuratowski_subdivision``
is an independent brute-force search used as a test oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

import networkx as nx

from .graph import GraphDomainError, MultiGraph, Pair, complete_bipartite, complete_graph, components, edge_subgraph, is_connected, norm_pair, smooth_degree_two

# rotation: vertex -> cyclic sequence of darts (neighbour, copy index)
Rotation = Mapping[int, Sequence[tuple[int, int]]]


class FastPath(enum.Enum):
    PLANAR = "planar"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Planar:
    rotation: dict[int, tuple[tuple[int, int], ...]]

    planar = True


@dataclass(frozen=True)
class NonPlanar:
    witness: tuple[Pair, ...]
    kind: str  # "K5" or "K33"

    planar = False


PlanarityResult = Planar | NonPlanar


def euler_fastpath(g: MultiGraph) -> FastPath:
    """Cheap sufficient test: a connected graph with ``#pairs - #vertices <= 2`` is planar."""
    if not is_connected(g):
        raise GraphDomainError("euler_fastpath needs a connected graph")
    return FastPath.PLANAR if len(g.edges) - g.n <= 2 else FastPath.INCONCLUSIVE


def _nx_skeleton(g: MultiGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.pairs)
    return h


def is_planar(g: MultiGraph) -> PlanarityResult:
    ok, cert = nx.check_planarity(_nx_skeleton(g), counterexample=True)
    if ok:
        return Planar(_rotation_with_copies(g, cert))
    witness = tuple(sorted(norm_pair(u, w) for u, w in cert.edges()))
    kind = witness_kind(g, witness)
    if kind is None:  # pragma: no cover - would mean a broken backend
        raise AssertionError("planarity backend returned an invalid Kuratowski subgraph")
    return NonPlanar(witness, kind)


def planar(g: MultiGraph) -> bool:
    return nx.is_planar(_nx_skeleton(g))


def planar_rotation(g: MultiGraph) -> dict[int, tuple[tuple[int, int], ...]] | None:
    """Rotation system if planar, else None (no witness extraction)."""
    ok, emb = nx.check_planarity(_nx_skeleton(g))
    return _rotation_with_copies(g, emb) if ok else None


def _rotation_with_copies(g: MultiGraph, emb: nx.PlanarEmbedding) -> dict[int, tuple[tuple[int, int], ...]]:
    rot = {}
    for v in range(g.n):
        darts = []
        for w in emb.neighbors_cw_order(v) if v in emb else ():
            m = g.multiplicity(v, w)
            # parallel copies sit side by side, reversed at the far end
            copies = range(m) if v < w else range(m - 1, -1, -1)
            darts.extend((w, k) for k in copies)
        rot[v] = tuple(darts)
    return rot


def trace_faces(rotation: Rotation) -> list[list[tuple[int, int, int]]]:
    """Faces of a rotation system as lists of darts ``(tail, head, copy)``."""
    succ = {}
    for v, darts in rotation.items():
        for i, (w, k) in enumerate(darts):
            succ[(v, w, k)] = darts[(i + 1) % len(darts)]
    seen = set()
    faces = []
    for start in sorted(succ):
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            v, w, k = d
            nw, nk = succ[(w, v, k)]
            d = (w, nw, nk)
        faces.append(face)
    return faces


def validate_rotation(g: MultiGraph, rotation: Rotation) -> bool:
    """True iff ``rotation`` is a planar rotation system of ``g`` (parallel copies included)."""
    darts = set()
    for v in range(g.n):
        for w, k in rotation.get(v, ()):
            if (v, w, k) in darts or not 0 <= k < g.multiplicity(v, w):
                return False
            darts.add((v, w, k))
    if len(darts) != 2 * g.edge_count or set(rotation) - set(range(g.n)):
        return False
    faces = trace_faces(rotation)
    face_of = {}
    for i, f in enumerate(faces):
        for d in f:
            face_of[d] = i
    for comp in components(g):
        if len(comp) == 1:
            continue
        cs = set(comp)
        e = sum(m for (u, w), m in g.mult.items() if u in cs)
        f = len({face_of[d] for d in darts if d[0] in cs})
        if len(comp) - e + f != 2:
            return False
    return True


# -- witnesses ---------------------------------------------------------------

_K5 = complete_graph(5)
_K33 = complete_bipartite(3, 3)


def witness_kind(g: MultiGraph, witness: Sequence[Pair]) -> str | None:
    """'K5' or 'K33' if the edge set is a subdivision of one, else None."""
    from .canon import are_isomorphic

    try:
        sub = edge_subgraph(g.skeleton(), witness, keep_vertices=False)
    except GraphDomainError:
        return None
    if not sub.is_simple:
        return None
    if any(len(nb) < 2 for nb in sub.neighbors):
        return None
    core = smooth_degree_two(sub)
    if are_isomorphic(core, _K5):
        return "K5"
    if are_isomorphic(core, _K33):
        return "K33"
    return None


def _route(adj, pattern: list[tuple[int, int]], used: set[int], acc: list[list[int]]):
    if not pattern:
        return True
    a, b = pattern[0]
    # depth-first over simple a-b paths whose interior avoids ``used``
    stack = [(a, [a])]
    while stack:
        v, path = stack.pop()
        for w in adj[v]:
            if w == b:
                acc.append(path + [b])
                if _route(adj, pattern[1:], used | set(path[1:]), acc):
                    return True
                acc.pop()
            elif w not in used and w not in path:
                stack.append((w, path + [w]))
    return False


def find_kuratowski_subdivision(g: MultiGraph) -> tuple[str, list[list[int]]] | None:
    """Brute-force search for a K5 or K3,3 subdivision (test oracle).

    Returns the kind and the branch paths, or None when the graph has neither.
    """
    adj = [sorted(nb) for nb in g.neighbors]
    deg = [len(nb) for nb in adj]
    cand4 = [v for v in range(g.n) if deg[v] >= 4]
    for branch in combinations(cand4, 5):
        pattern = list(combinations(branch, 2))
        acc: list[list[int]] = []
        if _route(adj, pattern, set(branch), acc):
            return "K5", acc
    cand3 = [v for v in range(g.n) if deg[v] >= 3]
    for six in combinations(cand3, 6):
        first = six[0]
        for rest in combinations(six[1:], 2):
            left = (first, *rest)
            right = tuple(v for v in six if v not in left)
            pattern = [(x, y) for x in left for y in right]
            acc = []
            if _route(adj, pattern, set(six), acc):
                return "K33", acc
    return None
