"""Loop-free undirected multigraphs and the named graphs used throughout the package."""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Pair = tuple[int, int]


class GraphInputError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, unparsable text)."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class GraphDomainError(ValueError):
    """Operation not defined for this kind of graph."""


def norm_pair(u: int, w: int) -> Pair:
    return (u, w) if u < w else (w, u)


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph on vertices ``0..n-1`` with no self-loops.

    ``edges`` holds ``(u, w, multiplicity)`` triples with ``u < w``, sorted.
    Labels are for display only and take no part in equality.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError("vertex count must be non-negative")
        seen = set()
        for u, w, m in self.edges:
            if not (0 <= u < w < self.n) or m < 1 or (u, w) in seen:
                raise GraphInputError(f"bad edge record {(u, w, m)}")
            seen.add((u, w))
        if list(self.edges) != sorted(self.edges):
            raise GraphInputError("edge records must be sorted")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphInputError("need one label per vertex")

    # -- basic accessors -------------------------------------------------

    @cached_property
    def mult(self) -> dict[Pair, int]:
        return {(u, w): m for u, w, m in self.edges}

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Multiplicity matrix."""
        rows = [[0] * self.n for _ in range(self.n)]
        for u, w, m in self.edges:
            rows[u][w] = rows[w][u] = m
        return tuple(tuple(r) for r in rows)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, w, _ in self.edges:
            nb[u].append(w)
            nb[w].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    def multiplicity(self, u: int, w: int) -> int:
        return self.mult.get(norm_pair(u, w), 0)

    @property
    def edge_count(self) -> int:
        """Total edge multiplicity, ``||G||``."""
        return sum(m for _, _, m in self.edges)

    @property
    def pairs(self) -> list[Pair]:
        """Distinct adjacent pairs (the simple skeleton)."""
        return [(u, w) for u, w, _ in self.edges]

    def edge_list(self) -> list[Pair]:
        """Every edge copy as a pair, repeats included."""
        return [(u, w) for u, w, m in self.edges for _ in range(m)]

    def degree(self, v: int) -> int:
        return sum(self.adj[v])

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self.edges)

    def skeleton(self) -> MultiGraph:
        return MultiGraph(self.n, tuple((u, w, 1) for u, w, _ in self.edges), self.labels)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def relabel(self, perm: Sequence[int]) -> MultiGraph:
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        counts = Counter()
        for u, w, m in self.edges:
            counts[norm_pair(perm[u], perm[w])] += m
        labels = None
        if self.labels is not None:
            inv = [0] * self.n
            for v, pv in enumerate(perm):
                inv[pv] = v
            labels = tuple(self.labels[inv[i]] for i in range(self.n))
        return _build(self.n, counts, labels)

    def with_labels(self, labels: Sequence[str] | None) -> MultiGraph:
        return MultiGraph(self.n, self.edges, tuple(labels) if labels is not None else None)

    def __repr__(self):
        body = ", ".join(f"{u}-{w}" + (f"x{m}" if m > 1 else "") for u, w, m in self.edges)
        return f"MultiGraph(n={self.n}, [{body}])"


def _build(n: int, counts: Counter | dict, labels=None) -> MultiGraph:
    edges = tuple(sorted((u, w, m) for (u, w), m in counts.items() if m > 0))
    return MultiGraph(n, edges, tuple(labels) if labels is not None else None)


def from_edge_list(n: int, pairs: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> MultiGraph:
    """Build a multigraph; repeated pairs accumulate multiplicity."""
    counts: Counter = Counter()
    for p in pairs:
        u, w = int(p[0]), int(p[1])
        if not (0 <= u < n and 0 <= w < n):
            raise GraphInputError(f"endpoint out of range in pair {(u, w)} for n={n}")
        if u == w:
            raise GraphInputError(f"self-loop at vertex {u}")
        counts[norm_pair(u, w)] += 1
    return _build(n, counts, labels)


def from_named_edges(names: Sequence[str], edges: Iterable[tuple[str, str]]) -> MultiGraph:
    index = {s: i for i, s in enumerate(names)}
    return from_edge_list(len(names), [(index[a], index[b]) for a, b in edges], names)


# -- structural operations ------------------------------------------------


def complement(g: MultiGraph) -> MultiGraph:
    if not g.is_simple:
        raise GraphDomainError("complement is only defined for simple graphs")
    present = g.mult
    counts = {(u, w): 1 for u in range(g.n) for w in range(u + 1, g.n) if (u, w) not in present}
    return _build(g.n, counts, g.labels)


def degree_info(g: MultiGraph) -> tuple[tuple[int, ...], int]:
    """Degree sequence (descending) and minimum degree; multiplicities count."""
    degs = tuple(sorted((g.degree(v) for v in range(g.n)), reverse=True))
    return degs, (degs[-1] if degs else 0)


def min_degree(g: MultiGraph) -> int:
    return degree_info(g)[1]


def components(g: MultiGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in g.neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: MultiGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def induced_subgraph(g: MultiGraph, vertices: Sequence[int]) -> MultiGraph:
    """Induced subgraph, relabelled to ``0..k-1`` in the given vertex order."""
    pos = {v: i for i, v in enumerate(vertices)}
    counts = {}
    for u, w, m in g.edges:
        if u in pos and w in pos:
            counts[norm_pair(pos[u], pos[w])] = m
    labels = [g.label(v) for v in vertices] if g.labels else None
    return _build(len(vertices), counts, labels)


def edge_subgraph(g: MultiGraph, pairs: Iterable[Pair], keep_vertices: bool = True) -> MultiGraph:
    """Subgraph formed by the given edge copies (repeats allowed)."""
    counts = Counter(norm_pair(*p) for p in pairs)
    for p, m in counts.items():
        if g.mult.get(p, 0) < m:
            raise GraphDomainError(f"edge {p} x{m} not present")
    sub = _build(g.n, counts, g.labels)
    return sub if keep_vertices else drop_isolated(sub)


def drop_isolated(g: MultiGraph) -> MultiGraph:
    keep = [v for v in range(g.n) if g.neighbors[v]]
    return induced_subgraph(g, keep) if len(keep) < g.n else g


def add_edge(g: MultiGraph, u: int, w: int, copies: int = 1) -> MultiGraph:
    if u == w:
        raise GraphInputError(f"self-loop at vertex {u}")
    counts = dict(g.mult)
    p = norm_pair(u, w)
    counts[p] = counts.get(p, 0) + copies
    return _build(g.n, counts, g.labels)


def remove_edge(g: MultiGraph, u: int, w: int) -> MultiGraph:
    p = norm_pair(u, w)
    if p not in g.mult:
        raise GraphDomainError(f"edge {p} not present")
    counts = dict(g.mult)
    counts[p] -= 1
    return _build(g.n, counts, g.labels)


def subdivide_edge(g: MultiGraph, e: Pair) -> MultiGraph:
    """Replace one copy of ``e`` by a path through a new last vertex."""
    u, w = norm_pair(*e)
    h = remove_edge(g, u, w)
    counts = dict(h.mult)
    x = g.n
    counts[(u, x)] = 1
    counts[(w, x)] = 1
    labels = list(g.labels) + [f"s{x}"] if g.labels else None
    return _build(g.n + 1, counts, labels)


def smooth_degree_two(g: MultiGraph) -> MultiGraph:
    """Suppress degree-2 vertices whose two edges go to distinct neighbours."""
    counts = dict(g.mult)
    alive = set(range(g.n))
    nbrs = {v: Counter() for v in range(g.n)}
    for (u, w), m in counts.items():
        nbrs[u][w] += m
        nbrs[w][u] += m
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            nb = nbrs[v]
            if sum(nb.values()) != 2 or len(nb) != 2:
                continue
            a, b = sorted(nb)
            for x in (a, b):
                del nbrs[x][v]
                counts.pop(norm_pair(v, x))
            nbrs[a][b] += 1
            nbrs[b][a] += 1
            p = norm_pair(a, b)
            counts[p] = counts.get(p, 0) + 1
            nbrs[v] = Counter()
            alive.discard(v)
            changed = True
    keep = sorted(alive)
    pos = {v: i for i, v in enumerate(keep)}
    new = {norm_pair(pos[u], pos[w]): m for (u, w), m in counts.items()}
    labels = [g.label(v) for v in keep] if g.labels else None
    return _build(len(keep), new, labels)


def disjoint_union(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    counts = dict(g.mult)
    for (u, w), m in h.mult.items():
        counts[(u + g.n, w + g.n)] = m
    return _build(g.n + h.n, counts)


# -- named graphs ----------------------------------------------------------

HEXAGON = [("a1", "a2"), ("a2", "a3"), ("a3", "b1"), ("b1", "b2"), ("b2", "b3"), ("b3", "a1")]


def complete_graph(n: int) -> MultiGraph:
    return from_edge_list(n, [(u, w) for u in range(n) for w in range(u + 1, n)])


def complete_bipartite(p: int, q: int) -> MultiGraph:
    return from_edge_list(p + q, [(u, p + w) for u in range(p) for w in range(q)])


def cycle_graph(n: int) -> MultiGraph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> MultiGraph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def moebius_ladder(n: int) -> MultiGraph:
    """2n-cycle on vertices labelled 1..2n plus rungs {i, i+n}."""
    if n < 1:
        raise GraphDomainError("Moebius ladder needs n >= 1")
    names = [str(i) for i in range(1, 2 * n + 1)]
    pairs = [(i, (i + 1) % (2 * n)) for i in range(2 * n)]
    pairs += [(i, i + n) for i in range(n)]
    return from_edge_list(2 * n, pairs, names)


def gamma7() -> MultiGraph:
    names = ["v", "a1", "a2", "a3", "b1", "b2", "b3"]
    extra = [("v", "a1"), ("v", "b1"), ("v", "a2"), ("v", "b2"), ("a2", "b2"), ("a3", "b3")]
    return from_named_edges(names, HEXAGON + extra)


def gamma8() -> MultiGraph:
    names = ["a1", "a2", "a3", "b1", "b2", "b3", "v1", "v2"]
    extra = [("a1", "v1"), ("v1", "b1"), ("a2", "v2"), ("v2", "b2"), ("a3", "b3")]
    return from_named_edges(names, HEXAGON + extra)


def _k33_named(extra_vertices: Sequence[str] = (), extra_edges: Sequence[tuple[str, str]] = ()) -> MultiGraph:
    names = ["x1", "x2", "x3", "y1", "y2", "y3", *extra_vertices]
    edges = [(f"x{i}", f"y{j}") for i in range(1, 4) for j in range(1, 4)]
    return from_named_edges(names, edges + list(extra_edges))


def graph_e() -> MultiGraph:
    return _k33_named(["p"], [("x1", "p")])


def graph_e_prime() -> MultiGraph:
    g = _k33_named()
    edges = [e for e in g.pairs if e != (0, 3)]
    names = list(g.labels) + ["s"]
    return from_edge_list(7, edges + [(0, 6), (6, 3)], names)


def graph_f() -> MultiGraph:
    return _k33_named(extra_edges=[("x1", "x2")])


def graph_f_prime() -> MultiGraph:
    return _k33_named(["s"], [("x1", "s"), ("s", "y1")])


def _fig6(extra: Sequence[tuple[str, str]]) -> MultiGraph:
    names = ["u", "v1", "v2", "v3", "v4", "v5", "v6"]
    return from_named_edges(names, [("u", f"v{i}") for i in range(1, 5)] + list(extra))


ZOO_BUILDERS = {
    "K5": lambda: complete_graph(5),
    "K6": lambda: complete_graph(6),
    "K7": lambda: complete_graph(7),
    "K33": lambda: _k33_named(),
    "GAMMA7": gamma7,
    "GAMMA8": gamma8,
    "E": graph_e,
    "EPRIME": graph_e_prime,
    "F": graph_f,
    "FPRIME": graph_f_prime,
    # (7 vertices, 11 edges, min degree 3); only FIG6D is non-planar
    "FIG6A": lambda: _fig6([("v1", "v2"), ("v2", "v3"), ("v5", "v6"), ("v5", "v1"), ("v5", "v4"), ("v6", "v3"), ("v6", "v4")]),
    "FIG6B": lambda: _fig6([("v1", "v2"), ("v3", "v4"), ("v5", "v6"), ("v5", "v1"), ("v5", "v2"), ("v6", "v3"), ("v6", "v4")]),
    "FIG6C": lambda: _fig6([("v1", "v2"), ("v3", "v4"), ("v5", "v6"), ("v5", "v1"), ("v5", "v3"), ("v6", "v2"), ("v6", "v4")]),
    "FIG6D": lambda: _fig6([("v1", "v2"), ("v5", "v1"), ("v5", "v3"), ("v5", "v4"), ("v6", "v2"), ("v6", "v3"), ("v6", "v4")]),
}

ZOO_NAMES = tuple(ZOO_BUILDERS) + ("M(n)",)


def zoo(name: str) -> MultiGraph:
    """Named graph lookup; accepts ``M3``, ``M(5)``, ``gamma7``, ``k33`` etc."""
    key = name.strip().upper().replace("'", "PRIME").replace("_", "").replace("Γ", "GAMMA")
    if key.startswith("M"):
        digits = key[1:].strip("()")
        if digits.isdigit():
            return moebius_ladder(int(digits))
    try:
        return ZOO_BUILDERS[key]()
    except KeyError:
        raise GraphInputError(f"unknown zoo graph {name!r}") from None


# -- serialization ---------------------------------------------------------

G6_HEADER = ">>graph6<<"


def to_graph6(g: MultiGraph, header: bool = False) -> str:
    if not g.is_simple:
        raise GraphDomainError("graph6 encodes simple graphs only")
    if g.n > 62:
        raise GraphDomainError("graph6 encoder supports at most 62 vertices")
    bits = [1 if g.mult.get((i, j)) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return (G6_HEADER if header else "") + "".join(chars)


def from_graph6(text: str) -> MultiGraph:
    s = text.strip()
    base = 0
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER) :]
        base = len(G6_HEADER)
    if not s:
        raise GraphInputError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphInputError(f"invalid graph6 character {ch!r}", base + i)
    n = ord(s[0]) - 63
    if n == 63:
        raise GraphInputError("graph6 strings with more than 62 vertices are not supported", base)
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise GraphInputError(f"truncated graph6: expected {need} data bytes, got {len(body)}", base + len(s))
    if len(body) > need:
        raise GraphInputError("trailing bytes after graph6 data", base + 1 + need)
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return from_edge_list(n, pairs)


def to_json(g: MultiGraph) -> str:
    doc = {"n": g.n, "edges": [[u, w, m] for u, w, m in g.edges]}
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return json.dumps(doc)


def from_json(text: str) -> MultiGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"malformed json: {exc.msg}", exc.pos) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("n"), int) or not isinstance(doc.get("edges"), list):
        raise GraphInputError("json graph needs integer 'n' and list 'edges'", 0)
    counts: Counter = Counter()
    for rec in doc["edges"]:
        if not (isinstance(rec, list) and len(rec) in (2, 3) and all(isinstance(x, int) for x in rec)):
            raise GraphInputError(f"bad edge record {rec!r}", 0)
        u, w = rec[0], rec[1]
        m = rec[2] if len(rec) == 3 else 1
        if m < 1:
            raise GraphInputError(f"bad multiplicity in {rec!r}", 0)
        for _ in range(m):
            counts.update(from_edge_list(doc["n"], [(u, w)]).mult)
    labels = doc.get("labels")
    return _build(doc["n"], counts, labels)


def encode(g: MultiGraph, fmt: str = "json") -> str:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "json":
        return to_json(g)
    raise ValueError(f"unknown format {fmt!r}")


def decode(text: str, fmt: str = "json") -> MultiGraph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "json":
        return from_json(text)
    raise ValueError(f"unknown format {fmt!r}")
