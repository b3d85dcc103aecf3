"""Exhaustive checks of the classification results for small graphs.

Each check returns a ``TheoremCheck`` listing expected claims next to what
the computation observed.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..canon import are_isomorphic, automorphism_group, canonical_form, is_invariant_edge_set
from ..chirality import Status, Verdict, classify, verify_verdict
from ..enumeration import GenSpec, generate, nonplanar_subgraphs_of_k6, nonplanar_sweep
from ..graph import HEXAGON, MultiGraph, complete_graph, degree_info, is_connected, zoo
from ..minors import all_proper_minors, contract_edge, delete_edge, nonsimple_contraction_classes
from ..planarity import FastPath, euler_fastpath, planar


@dataclass
class Claim:
    description: str
    expected: object
    observed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass
class TheoremCheck:
    name: str
    claims: list[Claim] = field(default_factory=list)
    info: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.claims) and all(c.ok for c in self.claims)

    def claim(self, description: str, expected, observed):
        self.claims.append(Claim(description, expected, observed))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "claims": [{"description": c.description, "expected": repr(c.expected), "observed": repr(c.observed), "ok": c.ok} for c in self.claims],
            "info": self.info,
        }

    def lines(self) -> list[str]:
        out = [f"[{'ok' if c.ok else 'FAIL'}] {c.description}: expected {c.expected!r}, observed {c.observed!r}" for c in self.claims]
        out += [f"  note: {s}" for s in self.info]
        out.append(f"{self.name}: {'PASS' if self.passed else 'FAIL'}")
        return out


def _classify_checked(g: MultiGraph) -> Verdict:
    v = classify(g)
    if not verify_verdict(g, v):  # pragma: no cover - searcher/verifier disagreement
        raise AssertionError(f"certificate for {g!r} does not verify")
    return v


def classify_many(graphs: Sequence[MultiGraph], jobs: int = 1) -> list[Verdict]:
    """Classify in input order; with ``jobs > 1`` a process pool is used."""
    if jobs <= 1 or len(graphs) < 2:
        return [_classify_checked(g) for g in graphs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_classify_checked, graphs, chunksize=4))


def _statuses(verdicts: Iterable[Verdict]) -> dict[str, int]:
    counts = {s.value: 0 for s in Status}
    for v in verdicts:
        counts[v.status.value] += 1
    return counts


def _mirror_only(verdicts: Sequence[Verdict]) -> bool:
    return all(v.status is Status.ACHIRAL and v.mirror is not None for v in verdicts)


# -- individual checks ----------------------------------------------------------


def check_lemma_6v(jobs: int = 1) -> TheoremCheck:
    t = TheoremCheck("lemma-6v")
    everything = nonplanar_subgraphs_of_k6(connected_only=False)
    connected = [g for g in everything if is_connected(g)]
    t.claim("non-planar subgraphs of K6 on six vertices, up to isomorphism", 14, len(everything))
    t.info.append(f"{len(connected)} of them are connected; the remaining one is K5 plus an isolated vertex")
    gen = list(generate(GenSpec(6, 15, min_vertices=6, connected=False, filters=frozenset({"nonplanar"}))))
    t.claim("walk down from K6 agrees with direct generation", sorted(map(canonical_form, everything)), sorted(map(canonical_form, gen)))
    corpus = list(generate(GenSpec(6, 15, connected=False)))
    verdicts = classify_many(corpus, jobs)
    t.claim("graphs with at most 6 vertices that are not achiral", 0, sum(v.status is not Status.ACHIRAL for v in verdicts))
    t.info.append(f"classified {len(corpus)} graphs with <= 6 vertices: {_statuses(verdicts)}")
    return t


def check_lemma_pla(jobs: int = 1) -> TheoremCheck:
    t = TheoremCheck("lemma-pla")
    k33, k5 = zoo("K33"), zoo("K5")
    t.claim("||K33|| - |K33|", 3, k33.edge_count - k33.n)
    t.claim("||K5|| - |K5|", 5, k5.edge_count - k5.n)
    bad = 0
    total = 0
    for n in range(1, 9):
        for g in generate(GenSpec(n, n + 2, min_vertices=n)):
            total += 1
            if euler_fastpath(g) is not FastPath.PLANAR or not planar(g):
                bad += 1
    t.claim("connected graphs (<= 8 vertices) with ||G|| - |G| <= 2 that are non-planar", 0, bad)
    t.info.append(f"checked {total} connected graphs")
    return t


def check_lemma_10(jobs: int = 1) -> TheoremCheck:
    t = TheoremCheck("lemma-10")
    sweep = list(nonplanar_sweep(10))
    named = [zoo(x) for x in ("K33", "K5", "F", "E", "EPRIME")]
    t.claim("connected non-planar classes with <= 10 edges", 5, len(sweep))
    t.claim("they are K33, K5, K33+e, E, E'", sorted(map(canonical_form, named)), sorted(map(canonical_form, sweep)))
    seven = [g for g in sweep if g.n == 7]
    t.claim("non-planar (7, 10) graphs are exactly E and E'", sorted(map(canonical_form, named[3:])), sorted(map(canonical_form, seven)))
    verdicts = classify_many(sweep, jobs)
    t.claim("all mirror-certified", True, _mirror_only(verdicts))
    return t


def check_prop_gamma7(jobs: int = 1) -> TheoremCheck:
    t = TheoremCheck("prop-gamma7")
    g = zoo("GAMMA7")
    t.claim("(vertices, edges)", (7, 12), (g.n, g.edge_count))
    t.claim("degree sequence", (4, 4, 4, 3, 3, 3, 3), degree_info(g)[0])
    group = automorphism_group(g)
    t.claim("automorphism group order", 2, group.order)
    hexagon = [(g.labels.index(a), g.labels.index(b)) for a, b in HEXAGON]
    t.claim("hexagon a1a2a3b1b2b3 is invariant", True, is_invariant_edge_set(group, hexagon))
    idx = g.labels.index
    h = delete_edge(delete_edge(g, (idx("v"), idx("a2"))), (idx("v"), idx("b2")))
    h = contract_edge(h, (idx("v"), idx("a1")))
    t.claim("deleting va2, vb2 and contracting va1 gives M3", True, are_isomorphic(h, zoo("M3")))
    v = _classify_checked(g)
    t.claim("verdict", Status.INTRINSICALLY_CHIRAL.value, v.status.value)
    t.claim("conclusion is convention-free", True, bool(v.moebius and v.moebius.convention_flag))
    return t


def check_prop_gamma8(jobs: int = 1) -> TheoremCheck:
    t = TheoremCheck("prop-gamma8")
    g = zoo("GAMMA8")
    t.claim("(vertices, edges)", (8, 11), (g.n, g.edge_count))
    t.claim("automorphism group order", 4, automorphism_group(g).order)
    v = _classify_checked(g)
    t.claim("verdict", Status.INTRINSICALLY_CHIRAL.value, v.status.value)
    t.claim("conclusion needs the vertex-preserving convention", False, bool(v.moebius and v.moebius.convention_flag))
    sweep = list(nonplanar_sweep(11))
    verdicts = classify_many(sweep, jobs)
    chiral = [s for s, vv in zip(sweep, verdicts) if vv.status is Status.INTRINSICALLY_CHIRAL]
    t.claim("intrinsically chiral classes among connected graphs with <= 11 edges", 1, len(chiral))
    t.claim("that class is Gamma8", True, len(chiral) == 1 and are_isomorphic(chiral[0], g))
    others = [vv for s, vv in zip(sweep, verdicts) if vv.status is not Status.INTRINSICALLY_CHIRAL]
    t.claim("every other non-planar class is mirror-certified", True, _mirror_only(others))
    t.info.append(f"non-planar classes with <= 11 edges: {len(sweep)} ({_statuses(verdicts)})")
    return t


def check_main(jobs: int = 1) -> TheoremCheck:
    t = TheoremCheck("main")
    parts = [check_lemma_6v(jobs), check_lemma_10(jobs)]
    for p in parts:
        t.claim(f"{p.name} holds", True, p.passed)
    g7, g8 = zoo("GAMMA7"), zoo("GAMMA8")
    v7, v8 = _classify_checked(g7), _classify_checked(g8)
    t.claim("a 7-vertex intrinsically chiral graph exists (Gamma7)", (7, Status.INTRINSICALLY_CHIRAL.value), (g7.n, v7.status.value))
    t.claim("an 11-edge intrinsically chiral graph exists (Gamma8)", (11, Status.INTRINSICALLY_CHIRAL.value), (g8.edge_count, v8.status.value))
    return t


def check_main2(jobs: int = 1) -> TheoremCheck:
    t = TheoremCheck("main2")
    cases = list(generate(GenSpec(7, 11, min_vertices=7, min_edges=11, min_degree=3)))
    t.claim("(7 vertices, 11 edges, min degree >= 3) classes", 4, len(cases))
    named = [zoo(f"FIG6{c}") for c in "ABCD"]
    t.claim("they are FIG6A-FIG6D", sorted(map(canonical_form, named)), sorted(map(canonical_form, cases)))
    t.claim("planar among them", 3, sum(planar(g) for g in cases))
    nonplanar = [g for g in cases if not planar(g)]
    t.claim("the non-planar one is FIG6D", True, len(nonplanar) == 1 and are_isomorphic(nonplanar[0], named[3]))
    t.claim("it is mirror-certified", True, _mirror_only(classify_many(nonplanar, jobs)))
    eight = list(generate(GenSpec(8, 11, min_vertices=8, min_degree=3)))
    t.claim("graphs with >= 8 vertices, min degree >= 3 and <= 11 edges", 0, len(eight))
    # all intrinsically chiral graphs with <= 11 edges have a vertex of degree <= 2
    sweep = list(nonplanar_sweep(11))
    verdicts = classify_many(sweep, jobs)
    t.claim(
        "intrinsically chiral graphs with <= 11 edges and min degree >= 3",
        0,
        sum(v.status is Status.INTRINSICALLY_CHIRAL and degree_info(g)[1] >= 3 for g, v in zip(sweep, verdicts)),
    )
    t.claim("Gamma7 attains 12 edges with min degree 3", (12, 3, Status.INTRINSICALLY_CHIRAL.value), (zoo("GAMMA7").edge_count, degree_info(zoo("GAMMA7"))[1], _classify_checked(zoo("GAMMA7")).status.value))
    return t


def mmic_details(jobs: int = 1) -> dict:
    """Verdicts for every proper minor of Gamma7 and Gamma8, plus the one-contraction analysis."""
    out = {}
    for name in ("GAMMA7", "GAMMA8"):
        g = zoo(name)
        minors = list(all_proper_minors(g).values())
        out[name] = {"graph": g, "minors": minors, "verdicts": classify_many(minors, jobs)}
    g7 = zoo("GAMMA7")
    classes = nonsimple_contraction_classes(g7)
    out["gamma7_contractions"] = [((g7.label(u), g7.label(w)), contract_edge(g7, (u, w))) for u, w in classes]
    g8 = zoo("GAMMA8")
    out["gamma8_contractions"] = [contract_edge(g8, e) for e in g8.pairs]
    return out


def check_mmic(jobs: int = 1) -> TheoremCheck:
    t = TheoremCheck("mmic")
    d = mmic_details(jobs)
    for name in ("GAMMA7", "GAMMA8"):
        v = _classify_checked(zoo(name))
        t.claim(f"{name} is intrinsically chiral", Status.INTRINSICALLY_CHIRAL.value, v.status.value)
        verdicts = d[name]["verdicts"]
        t.claim(f"proper minors of {name} that are not achiral", 0, sum(x.status is not Status.ACHIRAL for x in verdicts))
        t.info.append(f"{name}: {len(verdicts)} proper minors up to isomorphism")
    contr = d["gamma7_contractions"]
    t.claim("edge classes of Gamma7 whose contraction is non-simple", [("v", "a1"), ("v", "a2"), ("a1", "a2"), ("a2", "b2")], [e for e, _ in contr])
    t.claim("planarity of contracting va1, va2, a1a2, a2b2", [False, True, True, True], [planar(h) for _, h in contr])
    va1 = contr[0][1]
    t.claim("Gamma7 / va1 is mirror-certified", True, _mirror_only([_classify_checked(va1)]))
    t.claim("every one-contraction minor of Gamma8 is simple", True, all(h.is_simple for h in d["gamma8_contractions"]))
    return t


def check_k7() -> TheoremCheck:
    t = TheoremCheck("k7-scope")
    v = _classify_checked(complete_graph(7))
    t.claim("K7 verdict (outside certificate scope)", Status.UNKNOWN.value, v.status.value)
    t.info.extend(v.notes)
    return t


CHECKS: dict[str, Callable[..., TheoremCheck]] = {
    "main": check_main,
    "main2": check_main2,
    "mmic": check_mmic,
    "prop-gamma7": check_prop_gamma7,
    "prop-gamma8": check_prop_gamma8,
    "lemma-6v": check_lemma_6v,
    "lemma-pla": check_lemma_pla,
    "lemma-10": check_lemma_10,
}


def run_check(name: str, jobs: int = 1) -> TheoremCheck:
    try:
        fn = CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown theorem {name!r}; choose from {', '.join(CHECKS)}") from None
    return fn(jobs)
