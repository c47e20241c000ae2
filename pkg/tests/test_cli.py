from __future__ import annotations

import json

import pytest

from stablepoly.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_codegree_report(capsys):
    code, out, _ = call(capsys, "codegree", "join(cycle(5),line(complete(5)))")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema_version"] == "1.0" and doc["command"] == "codegree"
    assert doc["result"]["codeg"] == 8 and doc["result"]["triple_class"] == "iv"
    assert doc["input"]["n"] == 15


def test_codegree_certificates(capsys):
    code, out, _ = call(capsys, "codegree", "cycle(5)", "--method", "exact_lp")
    doc = json.loads(out)
    inner = doc["certificates"]["interior"]
    assert inner["interior"] and len(inner["steps"]) == 10
    assert all(s["member"] and s["eps"] != "0" for s in inner["steps"])
    assert doc["certificates"]["blocking"]["k"] == 2


def test_method_not_applicable(capsys):
    code, _, err = call(capsys, "codegree", "cycle(5)", "--method", "perfect_formula")
    assert code == 1 and "does not apply" in err


def test_ehrhart(capsys):
    code, out, _ = call(capsys, "ehrhart", "cycle(5)")
    res = json.loads(out)["result"]
    assert code == 0 and res["degree"] == 3 and res["vertex_count"] == 11


@pytest.mark.parametrize("argv", [("codegree", "join(cycle(5),cycle(5))"),
                                  ("verify", "--random", "3", "--max-n", "6", "--seed", "9")])
def test_json_is_stable_across_runs(capsys, argv):
    docs = []
    for _ in range(2):
        code, out, _ = call(capsys, *argv)
        doc = json.loads(out)
        doc.pop("timings")
        docs.append(json.dumps(doc, sort_keys=True))
    assert docs[0] == docs[1]


def test_table_format(capsys):
    code, out, _ = call(capsys, "invariants", "cycle(5)", "--format", "table")
    assert code == 0 and "clique_number: 2" in out and "perfect: False" in out


def test_file_input(capsys, tmp_path):
    f = tmp_path / "c5.txt"
    f.write_text("n 5\n1 2\n2 3\n3 4\n4 5\n1 5\n")
    code, out, _ = call(capsys, "hperfect", "--file", str(f))
    assert code == 0 and json.loads(out)["result"]["verdict"] == "h_perfect"


def test_exactly_one_input(capsys, tmp_path):
    assert call(capsys, "invariants")[0] == 1
    f = tmp_path / "g.txt"
    f.write_text("n 2\n1 2\n")
    assert call(capsys, "invariants", "cycle(5)", "--file", str(f))[0] == 1


def test_parse_error_exit_code(capsys):
    code, _, err = call(capsys, "codegree", "cycle(")
    assert code == 1 and "offset 6" in err


def test_guard_exit_code(capsys):
    code, _, err = call(capsys, "ehrhart", "cycle(9)")
    assert code == 1 and "exceeds limit 8" in err


def test_max_n_override(capsys):
    code, out, _ = call(capsys, "facets", "cycle(5)", "--facet-budget", "5")
    assert code == 0 and json.loads(out)["result"]["count"] == 11


def test_matching(capsys):
    code, out, _ = call(capsys, "matching", "union(complete(5),complete(4))")
    res = json.loads(out)["result"]
    assert code == 0 and res["formula"] == res["edmonds"] == res["exact_line_graph"] == 6 and res["agree"]


def test_regularity(capsys):
    code, out, _ = call(capsys, "regularity", "complete(3)")
    assert code == 0 and json.loads(out)["result"]["exact"] == 0


@pytest.mark.slow
def test_verify_all_labeled(capsys):
    code, out, _ = call(capsys, "verify", "--all-labeled", "--max-n", "5", "--random-points", "2")
    res = json.loads(out)["result"]
    assert code == 0 and res["violations"] == [] and res["graphs_checked"] == 1099


def test_verify_random(capsys):
    code, out, _ = call(capsys, "verify", "--random", "4", "--max-n", "6", "--seed", "5")
    assert code == 0 and json.loads(out)["result"]["graphs_checked"] == 4


def test_triples(capsys):
    code, out, _ = call(capsys, "triples", "--all-labeled", "--max-n", "4")
    res = json.loads(out)["result"]
    assert code == 0 and res["class_counts"]["i"] == res["graphs_examined"]


def test_reference_fixtures_subcommand(capsys):
    code, out, _ = call(capsys, "paper-examples")
    res = json.loads(out)["result"]
    assert code == 0 and res["all_ok"]
    bad = [c for c in res["checks"] if not c["ok"]]
    assert bad == []
