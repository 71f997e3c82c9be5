import json

import pytest

from pmcut import generators as gen
from pmcut.cli import main, pick_algorithm


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_cube_branch(tmp_path, capsys):
    path = write(tmp_path, "cube.graph", gen.cube().to_edge_list())
    code, out, _ = run(capsys, "solve", "--algo", "branch", "--json", path)
    doc = json.loads(out)
    assert code == 0 and doc["has_pmc"] is True
    assert doc["algorithm"] == "branch"
    assert set(doc["stats"]["rule_counts"]) >= {"R1", "R8", "B1", "B7"}


def test_check_roundtrip(tmp_path, capsys):
    graph = write(tmp_path, "cube.graph", gen.cube().to_edge_list())
    _, out, _ = run(capsys, "solve", "--json", graph)
    result = write(tmp_path, "r.json", out)
    code, out, _ = run(capsys, "check", graph, result)
    assert code == 0 and json.loads(out)["result"] == "PASS"
    bad = write(tmp_path, "bad.json", json.dumps({"X": [1], "Y": [2, 3, 4, 5, 6, 7, 8]}))
    code, out, _ = run(capsys, "check", graph, bad)
    assert code == 1 and json.loads(out)["classification"] == "CUT"


def test_c6_oracle_says_no(tmp_path, capsys):
    path = write(tmp_path, "c6.graph", gen.cycle(6).to_edge_list())
    code, out, _ = run(capsys, "solve", "--algo", "oracle", path)
    assert code == 1 and out.startswith("NO")


def test_deterministic_output_is_stable(tmp_path, capsys):
    code, text, _ = run(capsys, "generate", "random", "16", "26", "--seed", "7")
    path = write(tmp_path, "r.graph", text)
    outs = [run(capsys, "solve", "--algo", "branch", "--json", "--deterministic",
                "--threads", t, path)[1] for t in ("1", "2", "1")]
    assert outs[0] == outs[1] == outs[2]
    assert "wall_ms" not in json.loads(outs[0])


def test_cross_check(tmp_path, capsys):
    path = write(tmp_path, "t.graph", gen.caterpillar([1, 0, 0, 1]).to_edge_list())
    code, out, _ = run(capsys, "solve", "--cross-check", "--json", path)
    doc = json.loads(out)
    assert doc["cross_check"]["agree"]
    assert set(doc["cross_check"]["verdicts"]) >= {"oracle", "branch", "pseudochordal", "caterpillar"}


def test_tfree_on_t_reports_witness(tmp_path, capsys):
    path = write(tmp_path, "t.graph", gen.t_graph().to_edge_list())
    code, _, err = run(capsys, "solve", "--algo", "tfree", path)
    doc = json.loads(err)
    assert code == 2 and doc["error"] == "TPresentError"
    assert sorted(doc["witness"].values()) == [1, 2, 3, 4, 5, 6]


def test_bad_input_is_json_error(tmp_path, capsys):
    path = write(tmp_path, "bad.graph", "3 1\n1 1\n")
    code, _, err = run(capsys, "solve", path)
    assert code == 2 and json.loads(err)["line"] == 2
    code, _, err = run(capsys, "solve", str(tmp_path / "missing.graph"))
    assert code == 2 and json.loads(err)["error"] == "FileNotFoundError"


def test_oracle_limit(tmp_path, capsys):
    path = write(tmp_path, "p.graph", gen.path(10).to_edge_list())
    code, _, err = run(capsys, "solve", "--algo", "oracle", "--oracle-limit", "8", path)
    assert code == 2 and json.loads(err)["error"] == "InstanceTooLarge"


def test_auto_selection():
    assert pick_algorithm(gen.cycle(8)) == "deg2"
    assert pick_algorithm(gen.complete(4)) == "pseudochordal"
    assert pick_algorithm(gen.cube()) == "tfree"
    t_plus = gen.disjoint_union(gen.t_graph(), gen.cycle(5))
    assert pick_algorithm(t_plus) == "branch"


def test_generate_reduction_with_map(tmp_path, capsys):
    cnf = write(tmp_path, "f.cnf", "p cnf 3 3\n1 2 3 0\n1 2 3 0\n1 2 3 0\n")
    sidecar = tmp_path / "map.json"
    code, out, _ = run(capsys, "generate", "reduction", "--cnf", cnf, "--girth", "12",
                       "--map", str(sidecar))
    assert code == 0 and out.splitlines()[0].split()[0] == "204"
    assert json.loads(sidecar.read_text())["h"] == 0


def test_verify_reduction(tmp_path, capsys):
    cnf = write(tmp_path, "f.cnf", "p cnf 3 1\n1 2 3 0\n")
    code, out, _ = run(capsys, "verify-reduction", cnf)
    assert code == 0 and json.loads(out)["passed"]
    cnf = write(tmp_path, "neg.cnf", "p cnf 3 1\n1 -2 3 0\n")
    code, _, err = run(capsys, "verify-reduction", cnf)
    assert code == 2 and "negative literal" in json.loads(err)["message"]


def test_bench_csv(tmp_path, capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "12,14", "--count", "2", "--seed", "1")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "instance,n,m,algorithm,has_pmc,nodes,millis"
    assert len(lines) == 5


def test_generate_rejects_bad_params(capsys):
    code, _, err = run(capsys, "generate", "cycle")
    assert code == 2 and json.loads(err)["error"] == "UsageError"
    with pytest.raises(SystemExit):
        main(["solve", "--algo", "magic"])
