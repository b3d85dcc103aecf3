"""Schematic 3-D coordinates for a mirror-certified embedding.

Fixed vertices are drawn in the plane z = 0 using a planar layout of the
fixed subgraph; moved pairs sit at z = +1 / -1 with equal (x, y).  Every
down-side point is produced by negating z of its up-side twin, so the scene
is exactly invariant under z -> -z.  Crossings between edges are not
avoided beyond per-edge z offsets: only the symmetry is contractual.
"""

from __future__ import annotations

import math

import networkx as nx

from ..chirality import MirrorCertificate, verify_mirror_certificate
from ..graph import MultiGraph

Point = tuple[float, float, float]


class InvalidCertificate(ValueError):
    pass


def _flip(p: Point) -> Point:
    return (p[0], p[1], 0.0 if p[2] == 0 else -p[2])


def _fixed_positions(g: MultiGraph, cert: MirrorCertificate) -> dict[int, tuple[float, float]]:
    h = nx.Graph()
    h.add_nodes_from(cert.fixed_vertices)
    h.add_edges_from((u, w) for u, w, _ in cert.fixed_edges)
    if not cert.fixed_vertices:
        return {}
    pos = nx.planar_layout(h) if h.number_of_edges() else {v: (float(i), 0.0) for i, v in enumerate(cert.fixed_vertices)}
    return {v: (float(p[0]), float(p[1])) for v, p in pos.items()}


def emit_mirror_embedding(g: MultiGraph, cert: MirrorCertificate) -> dict:
    if not verify_mirror_certificate(g, cert):
        raise InvalidCertificate("mirror certificate does not verify")
    sigma = cert.sigma
    up = sorted(v for v, s in cert.sides.items() if s == 1)
    coords: dict[int, Point] = {v: (x, y, 0.0) for v, (x, y) in _fixed_positions(g, cert).items()}
    radius = 2.0
    for i, v in enumerate(up):
        angle = 2 * math.pi * i / max(len(up), 1)
        p = (radius * math.cos(angle), radius * math.sin(angle), 1.0)
        coords[v] = p
        coords[sigma[v]] = _flip(p)

    polylines = []

    def add(u, w, k, points):
        polylines.append({"u": u, "w": w, "copy": k, "points": [list(p) for p in points]})

    for u, w, m in g.edges:
        pu, pw = coords[u], coords[w]
        mid = ((pu[0] + pw[0]) / 2, (pu[1] + pw[1]) / 2)
        if sigma[u] == u and sigma[w] == w:
            dx, dy = pw[0] - pu[0], pw[1] - pu[1]
            for k in range(m):
                s = 0.15 * ((k + 1) // 2) * (1 if k % 2 else -1)
                add(u, w, k, [pu, (mid[0] - s * dy, mid[1] + s * dx, 0.0), pw])
        elif sigma[u] == w:
            for k in range(m):
                add(u, w, k, [pu, (mid[0] + 0.1 * k, mid[1] + 0.1 * k, 0.0), pw])
        else:
            side = cert.sides.get(u) or cert.sides.get(w)
            a, b = (u, w) if side == 1 else sorted((sigma[u], sigma[w]))
            pa, pb = coords[a], coords[b]
            for k in range(m):
                lift = 1.0 + 0.05 * ((a * 31 + b * 7 + k) % 11 + 1)
                pts = [pa, ((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2, lift), pb]
                if side != 1:
                    pts = [_flip(p) for p in pts]
                add(u, w, k, pts)
    return {
        "n": g.n,
        "sigma": list(sigma),
        "vertices": [{"id": v, "label": g.label(v), "xyz": list(coords[v])} for v in range(g.n)],
        "edges": polylines,
    }


def _canon_line(points) -> tuple:
    pts = tuple(tuple(float(c) + 0.0 for c in p) for p in points)
    return min(pts, pts[::-1])


def is_reflection_invariant(scene: dict) -> bool:
    """Exact check that z -> -z maps the scene onto itself, vertex v onto sigma(v)."""
    sigma = scene["sigma"]
    xyz = {v["id"]: tuple(v["xyz"]) for v in scene["vertices"]}
    for v, p in xyz.items():
        q = xyz[sigma[v]]
        if (p[0], p[1], -p[2]) != q:
            return False
    lines = {}
    for e in scene["edges"]:
        key = _canon_line(e["points"])
        lines[key] = lines.get(key, 0) + 1
    mirrored = {}
    for e in scene["edges"]:
        key = _canon_line([(x, y, -z) for x, y, z in e["points"]])
        mirrored[key] = mirrored.get(key, 0) + 1
    return lines == mirrored
