import json
import subprocess
import sys
from dataclasses import replace

import jsonschema
import pytest
from hypothesis import given, settings

from mmic.chirality import Status, classify, search_mirror_certificate
from mmic.graph import complete_graph, cycle_graph, from_edge_list, to_graph6, to_json, zoo
from mmic.workbench.cli import main
from mmic.workbench.report import REPORT_SCHEMA, ReportError, classify_report, dump_report, load_report
from mmic.workbench.scene import InvalidCertificate, emit_mirror_embedding, is_reflection_invariant
from mmic.workbench.theorems import CHECKS, classify_many, run_check

from .conftest import simple_graphs

# -- scenes ------------------------------------------------------------------------


def test_k5_scene():
    g = complete_graph(5)
    scene = emit_mirror_embedding(g, search_mirror_certificate(g))
    assert scene["n"] == 5
    on_plane = [v for v in scene["vertices"] if v["xyz"][2] == 0]
    assert len(on_plane) == 3
    assert is_reflection_invariant(scene)


def test_planar_scene_is_flat():
    g = cycle_graph(6)
    scene = emit_mirror_embedding(g, search_mirror_certificate(g))
    assert all(p[2] == 0 for e in scene["edges"] for p in e["points"])


def test_fig6d_scene():
    g = zoo("FIG6D")
    c = search_mirror_certificate(g)
    scene = emit_mirror_embedding(g, c)
    assert is_reflection_invariant(scene)
    assert {v["id"] for v in scene["vertices"] if v["xyz"][2] == 0} == set(c.fixed_vertices)


def test_swapped_edges_cross_plane_once():
    g = complete_graph(5)
    c = search_mirror_certificate(g)
    scene = emit_mirror_embedding(g, c)
    for e in scene["edges"]:
        if c.sigma[e["u"]] == e["w"]:
            zs = [p[2] for p in e["points"]]
            assert zs[0] == -zs[-1] != 0 and zs[1] == 0


def test_scene_rejects_bad_certificate():
    g = complete_graph(5)
    c = search_mirror_certificate(g)
    flipped = {v: -s for v, s in c.sides.items()}
    flipped[min(flipped)] *= -1
    with pytest.raises(InvalidCertificate):
        emit_mirror_embedding(g, replace(c, sides=flipped))


def test_broken_scene_detected():
    g = complete_graph(5)
    scene = emit_mirror_embedding(g, search_mirror_certificate(g))
    bent = json.loads(json.dumps(scene))
    bent["edges"][0]["points"][1][2] += 0.5
    assert not is_reflection_invariant(bent)
    shifted = json.loads(json.dumps(scene))
    next(v for v in shifted["vertices"] if v["xyz"][2] != 0)["xyz"][0] += 1.0
    assert not is_reflection_invariant(shifted)


@settings(max_examples=40)
@given(simple_graphs(max_n=8))
def test_scenes_invariant(g):
    c = search_mirror_certificate(g)
    if c is not None:
        assert is_reflection_invariant(emit_mirror_embedding(g, c))


def test_multigraph_scene():
    g = from_edge_list(5, [(0, 1), (0, 1)] + [(u, w) for u in range(5) for w in range(u + 1, 5)])
    c = search_mirror_certificate(g)
    assert c is not None
    assert is_reflection_invariant(emit_mirror_embedding(g, c))


# -- reports -----------------------------------------------------------------------


@pytest.mark.parametrize("name", ["K5", "GAMMA7", "GAMMA8", "K7", "FIG6A"])
def test_report_round_trip(name):
    g = zoo(name)
    report = classify_report(g)
    jsonschema.validate(report, REPORT_SCHEMA)
    g2, v = load_report(dump_report(report))
    assert g2 == g and v.status.value == report["verdict"]


def test_report_tampering_detected():
    report = classify_report(zoo("GAMMA7"))
    report["certificate"]["convention_flag"] = False
    with pytest.raises(ReportError):
        load_report(json.dumps(report))
    report = classify_report(zoo("K5"))
    report["certificate"]["sides"] = {k: -v for k, v in report["certificate"]["sides"].items()}
    report["certificate"]["sides"][min(report["certificate"]["sides"])] *= -1
    with pytest.raises(ReportError):
        load_report(json.dumps(report))


def test_report_schema_enforced():
    report = classify_report(zoo("K5"))
    del report["tool_version"]
    with pytest.raises(jsonschema.ValidationError):
        load_report(json.dumps(report))


# -- theorem checks ----------------------------------------------------------------


def test_classify_many_is_order_stable():
    graphs = [zoo(x) for x in ("K5", "GAMMA7", "K33", "GAMMA8")]
    serial = [v.status for v in classify_many(graphs, 1)]
    parallel = [v.status for v in classify_many(graphs, 2)]
    assert serial == parallel == [Status.ACHIRAL, Status.INTRINSICALLY_CHIRAL, Status.ACHIRAL, Status.INTRINSICALLY_CHIRAL]


@pytest.mark.parametrize("name", ["prop-gamma7", "lemma-10", "main2", "lemma-pla"])
def test_checks_pass(name):
    check = run_check(name)
    assert check.passed, "\n".join(check.lines())


@pytest.mark.slow
@pytest.mark.parametrize("name", ["prop-gamma8", "mmic", "lemma-6v", "main"])
def test_slower_checks_pass(name):
    check = run_check(name)
    assert check.passed, "\n".join(check.lines())


def test_unknown_check():
    with pytest.raises(ValueError):
        run_check("nope")
    assert set(CHECKS) == {"main", "main2", "mmic", "prop-gamma7", "prop-gamma8", "lemma-6v", "lemma-pla", "lemma-10"}


# -- cli ---------------------------------------------------------------------------


def test_cli_classify_zoo(capsys):
    assert main(["classify", "--zoo", "gamma7"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] == "intrinsically_chiral"
    assert out["certificate"]["convention_flag"] is True


def test_cli_classify_k7_unknown(capsys):
    assert main(["classify", "--zoo", "K7"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "unknown"


def test_cli_classify_files(tmp_path, capsys):
    p = tmp_path / "g.json"
    p.write_text(to_json(zoo("GAMMA8")))
    assert main(["classify", str(p)]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "intrinsically_chiral"
    q = tmp_path / "g.g6"
    q.write_text(to_graph6(complete_graph(5)) + "\n")
    assert main(["classify", str(q)]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "achiral"


def test_cli_input_errors(capsys):
    assert main(["classify", "--graph6", "D?"]) == 2
    assert "byte" in capsys.readouterr().err
    assert main(["classify", "--zoo", "nothing"]) == 2
    assert main(["classify"]) == 2
    assert main(["classify", "/nonexistent/file"]) == 2


def test_cli_caps(capsys):
    assert main(["classify", "--zoo", "K7", "--max-aut-order", "100"]) == 3
    assert main(["minors", "--zoo", "K7"]) == 3
    assert main(["enumerate", "--max-vertices", "11", "--max-edges", "12"]) == 3


def test_cli_max_ladder_must_be_odd():
    with pytest.raises(SystemExit):
        main(["classify", "--zoo", "K5", "--max-ladder", "4"])


def test_cli_enumerate(capsys):
    assert main(["enumerate", "--max-vertices", "6", "--max-edges", "15", "--min-vertices", "6", "--nonplanar", "--disconnected"]) == 0
    captured = capsys.readouterr()
    assert len(captured.out.split()) == 14
    assert "# 14 graphs" in captured.err


def test_cli_enumerate_multigraphs(capsys):
    assert main(["enumerate", "--max-vertices", "2", "--max-edges", "2", "--multigraphs", "--disconnected"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert all(line.startswith("{") for line in lines) and len(lines) == 4


def test_cli_zoo(capsys):
    assert main(["zoo"]) == 0
    assert "GAMMA7" in capsys.readouterr().out
    assert main(["zoo", "K33", "--format", "graph6"]) == 0
    assert capsys.readouterr().out.strip() == to_graph6(zoo("K33"))


def test_cli_minors(capsys):
    assert main(["minors", "--zoo", "GAMMA8", "--json", "--classify-all", "--jobs", "2"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 454 and all(r["verdict"] == "achiral" for r in rows)


def test_cli_emit(capsys):
    assert main(["emit", "--zoo", "K5"]) == 0
    assert is_reflection_invariant(json.loads(capsys.readouterr().out))
    assert main(["emit", "--zoo", "GAMMA7"]) == 1


def test_cli_verify(capsys):
    assert main(["verify", "prop-gamma7"]) == 0
    assert "prop-gamma7: PASS" in capsys.readouterr().out
    assert main(["verify", "lemma-10", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)[0]["passed"] is True


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "mmic.workbench.cli", "zoo"], capture_output=True, text=True, check=True)
    assert "FIG6D" in out.stdout


def test_byte_reproducible_minors_table(capsys):
    main(["minors", "--zoo", "GAMMA8", "--json", "--classify-all", "--jobs", "1"])
    a = capsys.readouterr().out
    main(["minors", "--zoo", "GAMMA8", "--json", "--classify-all", "--jobs", "3"])
    assert capsys.readouterr().out == a


def test_classify_matches_report():
    g = zoo("E")
    assert classify(g).status.value == classify_report(g)["verdict"] == "achiral"
