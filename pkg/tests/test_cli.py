import json

import pytest

from graphspark.cli import main
from graphspark.matio import format_matrix_text


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spark(capsys):
    code, out, _ = run(capsys, "spark", "path:5")
    assert code == 0
    assert json.loads(out) == {"input": "path:5", "spark": 3, "fort": [0, 2, 4], "method": "branch_and_bound"}
    code, out, _ = run(capsys, "spark", "D?{", "--method", "brute")
    assert json.loads(out)["spark"] == 2


def test_forts_sequence_and_list(capsys):
    code, out, _ = run(capsys, "forts", "friendship:3", "--sequence")
    assert json.loads(out)["sequence"] == [3, 0, 11, 12, 7, 1]
    code, out, _ = run(capsys, "forts", "path:3", "--list")
    assert json.loads(out)["forts"] == [[0, 2], [0, 1, 2]]
    code, out, _ = run(capsys, "forts", "path:4", "--sequence", "--csv")
    assert out.splitlines()[0].endswith("s2,s3,s4")


def test_zf_and_kappa(capsys):
    code, out, _ = run(capsys, "zf", "path:4", "--initial", "1")
    rec = json.loads(out)
    assert rec["closure"] == [1] and rec["fort"] == [0, 2, 3] and not rec["zero_forcing"]
    code, out, _ = run(capsys, "kappa", "hypercube3")
    assert json.loads(out)["kappa"] == 3
    code, out, _ = run(capsys, "kappa", "complete:4")
    assert json.loads(out)["cut"] is None


def test_mat_commands(capsys, tmp_path, k23_matrix):
    p = tmp_path / "k23.txt"
    p.write_text(format_matrix_text(k23_matrix))
    assert json.loads(run(capsys, "mat", "rank", str(p))[1])["rank"] == 3
    assert json.loads(run(capsys, "mat", "spark", str(p))[1])["spark"] == 4
    assert json.loads(run(capsys, "mat", "null", str(p))[1])["nullity"] == 2
    assert json.loads(run(capsys, "mat", "fullspark", str(p))[1])["full_spark"] is True
    classes = json.loads(run(capsys, "mat", "classify", str(p))[1])
    assert set(classes) == {"0", "1", "2", "3", "4"}
    assert json.loads(run(capsys, "mat", "classify", str(p), "-v", "0")[1])["0"]["nullity"] == 2
    assert json.loads(run(capsys, "mat", "graph", str(p))[1])["graph6"]
    assert json.loads(run(capsys, "mat", "generic", str(p))[1])["generic"] is False


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "from-fort", "path:3", "--fort", "0,2", "--values", "1,-1")
    assert code == 0 and len(out.splitlines()) == 3
    p = tmp_path / "z.txt"
    p.write_text("0 0 0\n0 0 0\n0 0 0\n")
    code, out, _ = run(capsys, "construct", "bump", str(p), "--json")
    assert json.loads(out)["index"] in (0, 1, 2)
    code, out, _ = run(capsys, "construct", "border", str(p), "--x", "1,2,3")
    assert len(out.splitlines()) == 4


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "5.1", "--corpus", "exhaustive:5")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "6.6" in out
    code, _, err = run(capsys, "verify", "nope", "--corpus", "exhaustive:3")
    assert code == 2 and "unknown suite" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "spark", "cycle:2")
    assert code == 0  # per-record error, run continues
    code, _, err = run(capsys, "zf", "D?{!")
    assert code == 2 and "byte offset 3" in err
    with pytest.raises(SystemExit) as info:
        main(["nosuch"])
    assert info.value.code == 2


def test_batch_isolates_errors(capsys, tmp_path):
    p = tmp_path / "in.txt"
    p.write_text("path:4\nnot-a-graph!!\ncycle:5\n")
    code, out, _ = run(capsys, "batch", "spark", str(p))
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["line"] for r in recs] == [1, 2, 3]
    assert "error" in recs[1] and recs[0]["spark"] == 3 and recs[2]["spark"] == 3
    code, out, _ = run(capsys, "batch", "forts", str(p), "--csv")
    assert out.splitlines()[0].startswith("line,input")


def test_config_and_env(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "gs.conf"
    cfg.write_text("spark_method = brute_force\nfort_limit = 4\n")
    p = tmp_path / "in.txt"
    p.write_text("path:6\n")
    code, out, _ = run(capsys, "--config", str(cfg), "batch", "spark", str(p))
    assert json.loads(out)["method"] == "brute_force"
    code, out, _ = run(capsys, "--config", str(cfg), "batch", "forts", str(p))
    assert "error" in json.loads(out)
    bad = tmp_path / "bad.conf"
    bad.write_text("colour = blue\n")
    assert run(capsys, "--config", str(bad), "spark", "path:3")[0] == 2
    monkeypatch.setenv("GRAPHSPARK_THREADS", "2")
    code, out, _ = run(capsys, "verify", "2.6", "--corpus", "exhaustive:5")
    assert code == 0
    monkeypatch.setenv("GRAPHSPARK_THREADS", "many")
    assert run(capsys, "spark", "path:3")[0] == 2
