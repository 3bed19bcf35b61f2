import json

import pytest

from clifis.cli import main
from clifis.graphs import line_graph, read_graph, write_graph
from clifis.sweep import CSV_HEADER


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_opt_json(capsys, tmp_path):
    out = tmp_path / "kite.json"
    code, _, _ = run(capsys, "opt", "--graph", "kite6", "--g", "1.4", "--solver", "wolfe", "--out", str(out))
    assert code == 0
    d = json.loads(out.read_text())
    assert d["solution"]["vertex_set"] == [0, 1, 2, 3]
    assert d["solution"]["cost_exact"] == "-44/5"
    assert d["witness"]["energy_exact"] == "-44/5"


def test_opt_from_graph_file(capsys, tmp_path):
    path = tmp_path / "l3.txt"
    write_graph(line_graph(3), path)
    code, out, _ = run(capsys, "opt", "--graph", str(path), "--g", "2")
    assert code == 0 and json.loads(out)["solution"]["cost_exact"] == "-6"


def test_exact(capsys):
    code, out, _ = run(capsys, "exact", "--graph", "L2", "--g", "3/4", "--tol", "1e-10")
    assert code == 0 and abs(json.loads(out)["energy"] + 3.25**0.5) < 1e-10


def test_dsp_and_segments(capsys):
    code, out, _ = run(capsys, "dsp", "--graph", "kite6")
    assert code == 0 and json.loads(out)["density"] == "3/2"
    code, out, _ = run(capsys, "segments", "--graph", "L9")
    d = json.loads(out)
    assert d["two_segmented"] and d["transition_value"] == "8/9"


def test_gen(capsys, tmp_path):
    path = tmp_path / "r.json"
    assert main(["gen", "--random", "6", "0.5", "3", "--out", str(path)]) == 0
    assert read_graph(path).n == 6
    code, out, _ = run(capsys, "gen", "--family", "L", "--n", "3")
    assert code == 0 and out.splitlines()[0] == "3"


def test_sweep_flags_override_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "K", "n": 5, "g_stop": "4", "g_step": "1/2", "exact": False}))
    out = tmp_path / "s.csv"
    code, _, _ = run(capsys, "sweep", "--config", str(cfg), "--g-stop", "1", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 1 + 3 and lines[1].startswith("K5,5,0.0,")
    code, _, _ = run(capsys, "sweep", "--config", str(cfg), "--family", "L", "--n", "4", "--g-stop", "0", "--out", str(out))
    assert code == 0 and out.read_text().splitlines()[1].startswith("L4,")


def test_random_study(capsys):
    code, out, err = run(capsys, "random-study", "--n-min", "4", "--n-max", "4", "--count", "3", "--g-stop", "1", "--g-step", "1/2")
    assert code == 0
    assert out.splitlines()[0] == "n,g,mean_relative_error,count"
    assert err.startswith("n,argmax_g")


def test_verify_lowered_cap(capsys, monkeypatch):
    monkeypatch.setenv("CLIFIS_MAX_N", "5")
    code, out, _ = run(capsys, "verify")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_failure_exit_code(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("CLIFIS_MAX_N", "5")
    for gid in ("G1", "G2", "G3"):
        (tmp_path / f"{gid}.txt").write_text("3\n0 1\n")
    code, out, _ = run(capsys, "verify", "--data-dir", str(tmp_path))
    assert code == 3 and not json.loads(out)["passed"]


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["opt", "--solver", "simplex"])
    assert info.value.code == 1
    code, _, err = run(capsys, "opt", "--graph", "L3")
    assert code == 1 and "need" in err
    code, _, _ = run(capsys, "dsp", "--graph", "nonexistent-id")
    assert code == 1


def test_infeasible_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("CLIFIS_MAX_N", "6")
    code, _, err = run(capsys, "exact", "--graph", "K9", "--g", "1")
    assert code == 2 and "CLIFIS_MAX_N" in err


def test_instance_file(capsys, tmp_path):
    from clifis.ising import IsingInstance, instance_to_json

    path = tmp_path / "inst.json"
    path.write_text(instance_to_json(IsingInstance(line_graph(3), "1/2")))
    code, out, _ = run(capsys, "opt", "--instance", str(path), "--solver", "brute")
    assert code == 0 and json.loads(out)["solution"]["cost_exact"] == "-2"
