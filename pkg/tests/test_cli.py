import json

import pytest

from nongenerators import cli
from nongenerators.groups import catalog
from nongenerators.fileformats import dump_group
from nongenerators.nongen import LawReport

M2 = {"elements": ["0", "a", "b", "1"],
      "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]}
PQ = {"elements": ["1", "p", "q"], "covers": [["p", "1"], ["q", "1"]]}


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return _write


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_diamond(capsys, write):
    code, out, _ = run(capsys, "analyze", write("m2.json", M2))
    report = json.loads(out)
    assert code == 0
    assert report["nongenerators"] == ["0"]
    assert report["frattini"]["phi"] == "0"
    assert report["schema_version"] == 1
    assert report["certificates"] == []


def test_analyze_two_maximal(capsys, write):
    code, out, _ = run(capsys, "analyze", write("pq.json", PQ))
    fr = json.loads(out)["frattini"]
    assert code == 0
    assert fr["phi"] is None and fr["phi_reason"] == "NoMeet"
    assert json.loads(out)["nongenerators"] == []


def test_malformed_input_exit_2(capsys, write):
    path = write("bad.json", '{"elements": ["a", "1"],\n "covers": [["a", "x"]]}')
    code, out, err = run(capsys, "analyze", path)
    assert code == 2 and out == ""
    assert "line 2" in err and "unknown element" in err


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "nope.json"))
    assert code == 2 and "error" in err


def test_text_format_and_dot(capsys, write, tmp_path):
    dot = tmp_path / "m2.dot"
    code, out, _ = run(capsys, "analyze", write("m2.json", M2), "--format", "text", "--dot", str(dot))
    assert code == 0
    assert "frattini element: 0" in out and "FAIL" not in out
    text = dot.read_text()
    assert '"0" [label="0", style=filled, fillcolor="lightgray", color="red", penwidth=2];' in text
    assert '"a" [label="a", peripheries=2];' in text
    assert '"0" -> "a";' in text


def test_dot_command_is_deterministic(capsys, write):
    path = write("m2.json", M2)
    _, first, _ = run(capsys, "dot", path)
    _, second, _ = run(capsys, "dot", path)
    assert first == second and first.startswith("digraph")


def test_gadget_round_trip(capsys, write, tmp_path):
    out_path = tmp_path / "gadget.json"
    q = write("q.json", {"elements": ["x", "y", "z"], "covers": [["x", "y"]]})
    code, out, _ = run(capsys, "gadget", q, "-o", str(out_path))
    assert code == 0
    assert all(law["passed"] for law in json.loads(out)["laws"])
    code, out, _ = run(capsys, "analyze", str(out_path))
    report = json.loads(out)
    assert code == 0
    assert "a" not in report["nongenerators"]
    assert report["frattini"]["maximal"] == ["a", "y", "z"]


def test_gadget_name_clash(capsys, write):
    q = write("q.json", {"elements": ["a"], "covers": []})
    code, _, err = run(capsys, "gadget", q)
    assert code == 2 and "already names" in err


def test_group_builtin_and_file(capsys, write, tmp_path):
    code, out, _ = run(capsys, "group", "--builtin", "Q8", "--dot", str(tmp_path / "q8.dot"))
    report = json.loads(out)
    assert code == 0
    assert report["frattini_subgroup"] == "{1,-1}"
    assert len(report["subgroups"]) == 6
    assert (tmp_path / "q8.dot").read_text().count("->") == 7
    path = write("s3.json", dump_group(catalog()["S3"]))
    code, out, _ = run(capsys, "group", path)
    report = json.loads(out)
    assert code == 0 and report["frattini_subgroup"] == "{012}"
    assert all(row["nongenerator_by_subsets"] == row["in_frattini"] for row in report["elements"])


def test_group_unknown_builtin(capsys):
    code, _, err = run(capsys, "group", "--builtin", "A5")
    assert code == 2


def test_closure_command(capsys, write):
    doc = {"ground": ["x", "y", "z"], "closed_sets": [["x", "y"], ["y", "z"], ["x", "y", "z"]]}
    path = write("moore.json", doc)
    code, _, err = run(capsys, "closure", path)
    assert code == 2 and "intersect" in err
    code, out, _ = run(capsys, "closure", path, "--complete")
    report = json.loads(out)
    assert code == 0 and report["laws"][0]["passed"]
    assert "{y}" in report["closed"]


@pytest.mark.parametrize("generator", [
    "random_poset", "random_join_semilattice:n=4", "random_moore_family:ground=3",
    "zorn_gadget", "all_posets:n=3",
])
def test_sweep_generators(capsys, generator):
    code, out, _ = run(capsys, "sweep", generator, "--count", "15", "--seed", "7")
    report = json.loads(out)
    assert code == 0 and report["first_failure"] is None
    assert all(t["failed"] == 0 for t in report["laws"].values())


def test_sweep_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "sweep", "random_poset", "--count", "40", "--seed", "3")
    _, parallel, _ = run(capsys, "sweep", "random_poset", "--count", "40", "--seed", "3", "--jobs", "3")
    assert serial == parallel


def test_group_text_format(capsys):
    code, out, _ = run(capsys, "group", "--builtin", "Z8", "--format", "text")
    assert code == 0
    assert "frattini subgroup: {0,2,4,6}" in out
    assert "non-generators: 0, 2, 4, 6" in out


def test_group_order_cap(capsys):
    code, _, err = run(capsys, "group", "--builtin", "Q8", "--cap-order", "6")
    assert code == 2 and "cap-order" in err


def test_gadget_and_closure_text_format(capsys, tmp_path):
    q = tmp_path / "q.json"
    q.write_text('{"elements": ["x", "y"], "covers": [["x", "y"]]}')
    code, out, _ = run(capsys, "gadget", str(q), "--format", "text")
    assert code == 0 and out.startswith("gadget elements: 1, a, x, y")
    moore = tmp_path / "m.json"
    moore.write_text('{"ground": ["x", "y"], "closed_sets": [["x"], ["y"]]}')
    code, out, _ = run(capsys, "closure", str(moore), "--complete", "--format", "text")
    assert code == 0
    assert "closed sets: {x,y}, {x}, {y}, {}" in out
    assert out.rstrip().endswith("closure_reduction (4 checked)")


def test_sweep_text_format(capsys):
    code, out, _ = run(capsys, "sweep", "random_moore_family", "--count", "5", "--format", "text")
    assert code == 0
    assert out.splitlines()[0] == "random_moore_family: 5 instances, seed 0"
    assert "closure_reduction" in out and "first failure" not in out


def test_sweep_bad_generator(capsys):
    assert run(capsys, "sweep", "nope")[0] == 2
    assert run(capsys, "sweep", "random_poset:zz=1")[0] == 2


def test_sweep_reports_first_failure(capsys, monkeypatch):
    def failing(P, *args):
        return [LawReport("broken", False, 1, {"a": P.top})]
    monkeypatch.setattr(cli, "law_suite", failing)
    code, out, _ = run(capsys, "sweep", "random_poset", "--count", "3")
    report = json.loads(out)
    assert code == 1
    assert report["first_failure"]["instance"] == 0
    assert report["first_failure"]["law"] == "broken"
    assert "elements" in report["first_failure"]["input"]


def test_analyze_exit_1_on_law_failure(capsys, write, monkeypatch):
    import nongenerators.report as report_mod
    monkeypatch.setattr(report_mod, "law_suite",
                        lambda P, *a: [LawReport("broken", False, 1, {"a": "0"})])
    code, out, _ = run(capsys, "analyze", write("m2.json", M2))
    assert code == 1
    assert json.loads(out)["certificates"] == [{"law": "broken", "witness": {"a": "0"}}]
