"""JSON reports for classification results."""

from __future__ import annotations

import json
import time

import jsonschema

from .. import __version__
from ..canon import DEFAULT_MAX_ORDER, canonical_form
from ..chirality import MirrorCertificate, MoebiusCertificate, Status, Verdict, classify, verify_verdict
from ..graph import MultiGraph

CONVENTION_NOTES = (
    "mirror certificates: reflection in a plane whose restriction to the graph is an automorphism of order <= 2",
    "moebius certificates: vertex-preserving symmetries; unconditional when every vertex has degree >= 3",
)

REPORT_SCHEMA = {
    "type": "object",
    "required": ["graph", "verdict", "certificate", "notes", "timing_s", "tool_version", "conventions"],
    "properties": {
        "graph": {
            "type": "object",
            "required": ["n", "edges", "canonical_form"],
            "properties": {
                "n": {"type": "integer", "minimum": 0},
                "edges": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3},
                },
                "labels": {"type": ["array", "null"], "items": {"type": "string"}},
                "canonical_form": {"type": "string"},
            },
        },
        "verdict": {"enum": [s.value for s in Status]},
        "certificate": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["kind", "sigma", "sides", "fixed_vertices", "fixed_edges", "fixed_embedding"],
                    "properties": {"kind": {"const": "mirror"}},
                },
                {
                    "type": "object",
                    "required": ["kind", "n", "loop", "ladder", "convention_flag"],
                    "properties": {"kind": {"const": "moebius"}, "n": {"type": "integer", "minimum": 3}},
                },
            ]
        },
        "notes": {"type": "array", "items": {"type": "string"}},
        "timing_s": {"type": "number", "minimum": 0},
        "tool_version": {"type": "string"},
        "conventions": {"type": "array", "items": {"type": "string"}},
    },
}


class ReportError(ValueError):
    pass


def graph_descriptor(g: MultiGraph) -> dict:
    return {
        "n": g.n,
        "edges": [[u, w, m] for u, w, m in g.edges],
        "labels": list(g.labels) if g.labels else None,
        "canonical_form": canonical_form(g).decode("ascii"),
    }


def make_report(g: MultiGraph, verdict: Verdict, elapsed: float) -> dict:
    cert = None
    if verdict.mirror is not None:
        cert = {"kind": "mirror", **verdict.mirror.to_json()}
    elif verdict.moebius is not None:
        cert = {"kind": "moebius", **verdict.moebius.to_json()}
    report = {
        "graph": graph_descriptor(g),
        "verdict": verdict.status.value,
        "certificate": cert,
        "notes": list(verdict.notes),
        "timing_s": round(elapsed, 6),
        "tool_version": __version__,
        "conventions": list(CONVENTION_NOTES),
    }
    jsonschema.validate(report, REPORT_SCHEMA)
    return report


def classify_report(g: MultiGraph, max_n: int = 3, max_order: int = DEFAULT_MAX_ORDER) -> dict:
    t0 = time.perf_counter()
    verdict = classify(g, max_n=max_n, max_order=max_order)
    return make_report(g, verdict, time.perf_counter() - t0)


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2)


def load_report(text: str) -> tuple[MultiGraph, Verdict]:
    """Parse a report, rebuild graph and verdict, and re-verify the certificate."""
    doc = json.loads(text)
    jsonschema.validate(doc, REPORT_SCHEMA)
    gd = doc["graph"]
    g = MultiGraph(gd["n"], tuple(tuple(e) for e in gd["edges"]), tuple(gd["labels"]) if gd.get("labels") else None)
    cert = doc["certificate"]
    status = Status(doc["verdict"])
    mirror = moebius = None
    if cert is not None:
        body = {k: v for k, v in cert.items() if k != "kind"}
        if cert["kind"] == "mirror":
            mirror = MirrorCertificate.from_json(body)
        else:
            moebius = MoebiusCertificate.from_json(body)
    verdict = Verdict(status, mirror, moebius, tuple(doc["notes"]))
    if not verify_verdict(g, verdict):
        raise ReportError("certificate in report does not verify")
    return g, verdict
