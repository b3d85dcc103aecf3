"""Achirality and intrinsic-chirality certificates, and the classifier built on them.

Mirror certificate.  An involutive automorphism ``sigma`` together with an
up/down assignment of its moved vertices describes an embedding that is
symmetric under reflection in a plane: fixed vertices lie on the plane, each
moved pair ``{u, sigma(u)}`` straddles it.  The embedding exists when

* every edge whose endpoints are both moved either is swapped into itself
  (``w = sigma(u)``, drawn crossing the plane once) or joins two vertices on
  the same side -- an edge not mapped to itself cannot cross the plane, since
  its crossing point would also lie on its distinct mirror image;
* the subgraph spanned by fixed vertices is planar -- a reflection-invariant
  arc between two points of the plane lies in the plane.

Moebius certificate.  A cycle ``K`` and a subdivided Moebius ladder ``H``
with loop ``K`` (odd number of rungs, at least three), both mapped onto
themselves by every automorphism.  Any symmetry of an embedding induces an
automorphism, hence preserves ``H`` and ``K``, and by Flapan's theorem on odd
Moebius ladders cannot reverse orientation.  If the graph has a vertex of
degree <= 2 a homeomorphism of the embedded graph need not send vertices to
vertices, so that conclusion needs the vertex-preserving convention; the
``convention_flag`` records whether it is unconditional.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .canon import DEFAULT_MAX_ORDER, AutGroup, automorphism_group, image_of_edges, is_automorphism
from .graph import MultiGraph, Pair, induced_subgraph, min_degree, norm_pair
from .planarity import planar_rotation, validate_rotation

EdgeSet = tuple[Pair, ...]


class SoundnessError(AssertionError):
    """Both certificate kinds verified for one graph; the theory forbids this."""


# -- parity union-find -------------------------------------------------------


class ParityUnionFind:
    """Union-find tracking the parity of each element relative to its root."""

    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}
        self.parity = {x: 0 for x in self.parent}

    def find(self, x: int) -> tuple[int, int]:
        parent = self.parent[x]
        if parent == x:
            return x, 0
        root, p = self.find(parent)
        self.parent[x] = root
        self.parity[x] ^= p
        return root, self.parity[x]

    def union(self, a: int, b: int, parity: int) -> bool:
        """Impose ``side(a) xor side(b) == parity``; False on contradiction."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == parity
        if rb < ra:
            ra, rb, pa, pb = rb, ra, pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ parity
        return True


# -- mirror certificates -----------------------------------------------------


@dataclass(frozen=True)
class MirrorCertificate:
    sigma: tuple[int, ...]
    sides: dict[int, int]  # moved vertex -> +1 (up) / -1 (down)
    fixed_vertices: tuple[int, ...]
    fixed_edges: tuple[tuple[int, int, int], ...]  # (u, w, multiplicity) among fixed vertices
    fixed_embedding: dict[int, tuple[tuple[int, int], ...]]  # rotation in original vertex ids

    def to_json(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "sides": {str(v): s for v, s in sorted(self.sides.items())},
            "fixed_vertices": list(self.fixed_vertices),
            "fixed_edges": [list(e) for e in self.fixed_edges],
            "fixed_embedding": {str(v): [list(d) for d in darts] for v, darts in sorted(self.fixed_embedding.items())},
        }

    @classmethod
    def from_json(cls, doc: dict) -> MirrorCertificate:
        return cls(
            sigma=tuple(doc["sigma"]),
            sides={int(v): int(s) for v, s in doc["sides"].items()},
            fixed_vertices=tuple(doc["fixed_vertices"]),
            fixed_edges=tuple(tuple(e) for e in doc["fixed_edges"]),
            fixed_embedding={int(v): tuple(tuple(d) for d in darts) for v, darts in doc["fixed_embedding"].items()},
        )


def _fixed_part(g: MultiGraph, sigma: Sequence[int]) -> tuple[tuple[int, ...], tuple[tuple[int, int, int], ...]]:
    fixed = tuple(v for v in range(g.n) if sigma[v] == v)
    fs = set(fixed)
    edges = tuple((u, w, m) for u, w, m in g.edges if u in fs and w in fs)
    return fixed, edges


def _fixed_graph(g: MultiGraph, fixed: Sequence[int]) -> tuple[MultiGraph, dict[int, int]]:
    sub = induced_subgraph(g, fixed)
    return sub, {v: i for i, v in enumerate(fixed)}


def verify_mirror_certificate(g: MultiGraph, c: MirrorCertificate) -> bool:
    sigma = tuple(c.sigma)
    if len(sigma) != g.n or sorted(sigma) != list(range(g.n)):
        raise ValueError("sigma is not a permutation of the vertex set")
    if any(sigma[sigma[v]] != v for v in range(g.n)) or not is_automorphism(g, sigma):
        return False
    moved = {v for v in range(g.n) if sigma[v] != v}
    if set(c.sides) != moved or any(c.sides[v] not in (1, -1) or c.sides[sigma[v]] != -c.sides[v] for v in moved):
        return False
    for u, w in g.pairs:
        if u in moved and w in moved and sigma[u] != w and c.sides[u] != c.sides[w]:
            return False
    fixed, fixed_edges = _fixed_part(g, sigma)
    if tuple(c.fixed_vertices) != fixed or tuple(map(tuple, c.fixed_edges)) != fixed_edges:
        return False
    sub, pos = _fixed_graph(g, fixed)
    try:
        rot = {pos[v]: tuple((pos[w], k) for w, k in darts) for v, darts in c.fixed_embedding.items()}
    except KeyError:
        return False
    return validate_rotation(sub, rot)


def _side_assignment(g: MultiGraph, sigma: Sequence[int]) -> dict[int, int] | None:
    moved = [v for v in range(g.n) if sigma[v] != v]
    uf = ParityUnionFind(moved)
    for v in moved:
        if not uf.union(v, sigma[v], 1):
            return None
    ms = set(moved)
    for u, w in g.pairs:
        if u in ms and w in ms and sigma[u] != w and not uf.union(u, w, 0):
            return None
    first: dict[int, int] = {}
    for v in moved:
        first.setdefault(uf.find(v)[0], v)
    sides = {}
    for v in moved:  # the smallest vertex of each constraint component goes up
        root, p = uf.find(v)
        sides[v] = 1 if p == uf.find(first[root])[1] else -1
    return sides


def mirror_certificate_for(g: MultiGraph, sigma: Sequence[int]) -> MirrorCertificate | None:
    """Complete ``sigma`` to a mirror certificate if possible."""
    sigma = tuple(sigma)
    sides = _side_assignment(g, sigma)
    if sides is None:
        return None
    fixed, fixed_edges = _fixed_part(g, sigma)
    sub, _ = _fixed_graph(g, fixed)
    rotation = planar_rotation(sub)
    if rotation is None:
        return None
    rot = {fixed[i]: tuple((fixed[w], k) for w, k in darts) for i, darts in rotation.items()}
    return MirrorCertificate(sigma, sides, fixed, fixed_edges, rot)


def search_mirror_certificate(g: MultiGraph, group: AutGroup | None = None, max_order: int = DEFAULT_MAX_ORDER) -> MirrorCertificate | None:
    """Identity first, then involutions by number of moved vertices."""
    c = mirror_certificate_for(g, tuple(range(g.n)))
    if c is not None:
        return c
    group = group or automorphism_group(g, max_order)
    for sigma in group.involutions()[1:]:
        c = mirror_certificate_for(g, sigma)
        if c is not None:
            return c
    return None


# -- invariant cycles and Moebius ladders ------------------------------------


def _cycles(g: MultiGraph) -> list[EdgeSet]:
    adj = g.neighbors
    out = []
    for s in range(g.n):
        stack = [(s, [s])]
        while stack:
            v, path = stack.pop()
            for w in adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(sorted(norm_pair(path[i], path[(i + 1) % len(path)]) for i in range(len(path)))))
                elif w > s and w not in path:
                    stack.append((w, path + [w]))
    out.extend(((u, w), (u, w)) for u, w, m in g.edges if m >= 2)
    return out


def find_invariant_cycles(g: MultiGraph, group: AutGroup | None = None, max_order: int = DEFAULT_MAX_ORDER) -> list[EdgeSet]:
    """Cycles mapped onto themselves by every automorphism, shortest first."""
    group = group or automorphism_group(g, max_order)
    gens = group.generators
    found = []
    for cyc in _cycles(g):
        c = Counter(cyc)
        if all(image_of_edges(p, cyc) == c for p in gens):
            found.append(cyc)
    return sorted(set(found), key=lambda k: (len(k), k))


def cycle_order(loop: Sequence[Pair]) -> list[int] | None:
    """Cyclic vertex sequence of an edge set forming one cycle, else None."""
    loop = [norm_pair(*e) for e in loop]
    if len(loop) == 2:
        return list(loop[0]) if loop[0] == loop[1] and loop[0][0] != loop[0][1] else None
    if len(loop) < 3 or len(set(loop)) != len(loop):
        return None
    nb: dict[int, list[int]] = {}
    for u, w in loop:
        nb.setdefault(u, []).append(w)
        nb.setdefault(w, []).append(u)
    if any(len(x) != 2 for x in nb.values()):
        return None
    start = min(nb)
    order = [start]
    prev, cur = None, start
    while True:
        a, b = nb[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order if len(order) == len(nb) else None


def _ears(g: MultiGraph, order: Sequence[int], loop: Sequence[Pair]) -> list[tuple[int, int, tuple[int, ...]]]:
    """Paths between distinct loop vertices whose interior avoids the loop.

    Returned as (end, end, vertex path) with ends ordered by position on the loop.
    """
    on = {v: i for i, v in enumerate(order)}
    spare = Counter(g.mult)
    spare.subtract(Counter(norm_pair(*e) for e in loop))
    ears = set()
    for a in order:
        stack = [(a, (a,))]
        while stack:
            v, path = stack.pop()
            for w in g.neighbors[v]:
                if len(path) == 1 and spare[norm_pair(v, w)] <= 0:
                    continue
                if w in on:
                    if on[w] > on[a]:
                        ears.add((a, w, path + (w,)))
                elif w not in path:
                    stack.append((w, path + (w,)))
    return sorted(ears, key=lambda e: (on[e[0]], on[e[1]], len(e[2]), e[2]))


def _crosses(pos: dict[int, int], e1, e2) -> bool:
    a, b = sorted((pos[e1[0]], pos[e1[1]]))
    c, d = pos[e2[0]], pos[e2[1]]
    return (a < c < b) != (a < d < b)


def _path_edges(path: Sequence[int]) -> list[Pair]:
    return [norm_pair(path[i], path[i + 1]) for i in range(len(path) - 1)]


def find_moebius_extension(
    g: MultiGraph,
    loop: Sequence[Pair],
    n: int,
    group: AutGroup | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> EdgeSet | None:
    """Edge set of an invariant M_n subdivision with the given loop, or None."""
    order = cycle_order(loop)
    if order is None or n < 3 or n % 2 == 0 or len(order) < 2 * n:
        return None
    group = group or automorphism_group(g, max_order)
    pos = {v: i for i, v in enumerate(order)}
    ears = _ears(g, order, loop)
    loop_c = Counter(norm_pair(*e) for e in loop)

    def extend(chosen: list, start: int, used: set[int]):
        if len(chosen) == n:
            h = loop_c + Counter(e for ear in chosen for e in _path_edges(ear[2]))
            if all(image_of_edges(p, h.elements()) == h for p in group.generators):
                return tuple(sorted(h.elements()))
            return None
        for i in range(start, len(ears)):
            ear = ears[i]
            verts = set(ear[2])
            if verts & used:
                continue
            if not all(_crosses(pos, ear, other) for other in chosen):
                continue
            res = extend(chosen + [ear], i + 1, used | verts)
            if res is not None:
                return res
        return None

    return extend([], 0, set())


@dataclass(frozen=True)
class MoebiusCertificate:
    n: int
    loop: EdgeSet
    ladder: EdgeSet
    convention_flag: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "loop": [list(e) for e in self.loop],
            "ladder": [list(e) for e in self.ladder],
            "convention_flag": self.convention_flag,
        }

    @classmethod
    def from_json(cls, doc: dict) -> MoebiusCertificate:
        return cls(doc["n"], tuple(tuple(e) for e in doc["loop"]), tuple(tuple(e) for e in doc["ladder"]), bool(doc["convention_flag"]))


def _is_moebius_subdivision(loop: Sequence[Pair], ladder: Sequence[Pair], n: int) -> bool:
    order = cycle_order(loop)
    if order is None:
        return False
    rest = Counter(norm_pair(*e) for e in ladder)
    rest.subtract(Counter(norm_pair(*e) for e in loop))
    if any(m < 0 for m in rest.values()):
        return False
    rest = +rest
    pos = {v: i for i, v in enumerate(order)}
    deg: Counter = Counter()
    nb: dict[int, list[int]] = {}
    for (u, w), m in rest.items():
        for _ in range(m):
            deg[u] += 1
            deg[w] += 1
            nb.setdefault(u, []).append(w)
            nb.setdefault(w, []).append(u)
    for v, d in deg.items():
        if (v in pos and d != 1) or (v not in pos and d != 2):
            return False
    rungs = []
    visited_edges = 0
    for a in sorted(v for v in deg if v in pos):
        if any(a in r for r in rungs):
            continue
        prev, cur, length = None, a, 0
        while True:
            options = list(nb[cur])
            if prev is not None:
                options.remove(prev)
            nxt = options[0]
            length += 1
            prev, cur = cur, nxt
            if cur in pos:
                break
        rungs.append((a, cur))
        visited_edges += length
    if visited_edges != sum(rest.values()) or len(rungs) != n:
        return False
    return all(_crosses(pos, r1, r2) for r1, r2 in combinations(rungs, 2))


def verify_ic_certificate(g: MultiGraph, c: MoebiusCertificate, group: AutGroup | None = None, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    if not isinstance(c.n, int) or not isinstance(c.loop, tuple) or not isinstance(c.ladder, tuple):
        raise ValueError("malformed certificate")
    if c.n < 3 or c.n % 2 == 0:
        return False
    if c.convention_flag != (min_degree(g) >= 3):
        return False
    ladder = Counter(norm_pair(*e) for e in c.ladder)
    if any(g.mult.get(e, 0) < m for e, m in ladder.items()):
        return False
    if not _is_moebius_subdivision(c.loop, c.ladder, c.n):
        return False
    group = group or automorphism_group(g, max_order)
    loop = Counter(norm_pair(*e) for e in c.loop)
    return all(image_of_edges(p, loop.elements()) == loop and image_of_edges(p, ladder.elements()) == ladder for p in group.generators)


def search_ic_certificate(g: MultiGraph, max_n: int = 3, group: AutGroup | None = None, max_order: int = DEFAULT_MAX_ORDER) -> MoebiusCertificate | None:
    group = group or automorphism_group(g, max_order)
    flag = min_degree(g) >= 3
    for loop in find_invariant_cycles(g, group):
        for n in range(3, max_n + 1, 2):
            if len(loop) < 2 * n:
                break
            h = find_moebius_extension(g, loop, n, group)
            if h is not None:
                return MoebiusCertificate(n, loop, h, flag)
    return None


# -- classification -----------------------------------------------------------


class Status(str, enum.Enum):
    ACHIRAL = "achiral"
    INTRINSICALLY_CHIRAL = "intrinsically_chiral"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    mirror: MirrorCertificate | None = None
    moebius: MoebiusCertificate | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def certificate(self):
        return self.mirror or self.moebius


def _is_complete(g: MultiGraph) -> bool:
    return g.is_simple and len(g.edges) == g.n * (g.n - 1) // 2


def classify(g: MultiGraph, max_n: int = 3, max_order: int = DEFAULT_MAX_ORDER, cross_check: bool = True) -> Verdict:
    group = automorphism_group(g, max_order)
    mirror = search_mirror_certificate(g, group)
    moebius = None
    if mirror is None or cross_check:
        moebius = search_ic_certificate(g, max_n, group)
    if mirror is not None and moebius is not None:
        raise SoundnessError(f"graph {g!r} received both certificates")
    if mirror is not None:
        notes = ("planar: identity mirror certificate",) if not any(s != v for v, s in enumerate(mirror.sigma)) else ()
        return Verdict(Status.ACHIRAL, mirror=mirror, notes=notes)
    if moebius is not None:
        notes = ()
        if not moebius.convention_flag:
            notes = ("graph has a vertex of degree <= 2: conclusion assumes symmetries send vertices to vertices",)
        return Verdict(Status.INTRINSICALLY_CHIRAL, moebius=moebius, notes=notes)
    notes = ["no reflection-symmetric embedding and no automorphism-invariant odd Moebius ladder found"]
    if _is_complete(g) and g.n % 4 == 3:
        notes.append(f"K{g.n} is known to be intrinsically chiral (complete graphs K_(4k+3)); that result lies outside what these certificates can show")
    return Verdict(Status.UNKNOWN, notes=tuple(notes))


def verify_verdict(g: MultiGraph, v: Verdict, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    if v.status is Status.ACHIRAL:
        return v.mirror is not None and verify_mirror_certificate(g, v.mirror)
    if v.status is Status.INTRINSICALLY_CHIRAL:
        return v.moebius is not None and verify_ic_certificate(g, v.moebius, max_order=max_order)
    return v.mirror is None and v.moebius is None
