import json

from halfcube import families as F
from halfcube.cli import main, run_sweep, sweep_chords
from halfcube.graph import Graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_desargues(tmp_path, capsys):
    path = tmp_path / "g.json"
    code, out, _ = run(capsys, "gen", "gp", "--n", "10", "--k", "3", "--out", str(path))
    assert code == 0
    obj = json.loads(path.read_text())
    assert obj["family"] == {"kind": "gp", "params": [10, 3]}
    g = Graph.from_json(path.read_text())
    assert g == F.gp(10, 3)


def test_gen_gcr_and_butterfly(capsys):
    code, out, _ = run(capsys, "gen", "gcr", "--n", "24", "--chords", "9,11")
    assert code == 0 and json.loads(out)["n"] == 24
    code, out, _ = run(capsys, "gen", "butterfly", "--n", "2")
    assert code == 0 and json.loads(out)["n"] == 12


def test_gen_invalid(capsys):
    code, _, err = run(capsys, "gen", "gcr", "--n", "7", "--chords", "3")
    assert code == 2 and "error" in err


def test_embed_petersen(tmp_path, capsys):
    csv_path, res = tmp_path / "a.csv", tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "embed", "gp:5,2", "--out", str(csv_path), "--results", str(res))
    assert code == 0 and "_6" in out
    rec = json.loads(res.read_text())
    assert (rec["status"], rec["scale"], rec["m"]) == ("Embeddable", 2, 6)
    assert {"graph", "s", "scale", "status", "m", "count", "elapsed_ms", "nodes"} <= set(rec)
    code, out, _ = run(capsys, "verify", "gp:5,2", str(csv_path), "--scale", "2")
    assert code == 0


def test_embed_from_file(tmp_path, capsys):
    path = tmp_path / "g.json"
    run(capsys, "gen", "cycle", "--n", "6", "--out", str(path))
    code, out, _ = run(capsys, "embed", str(path), "--scale1")
    assert code == 0 and "H_3" in out


def test_embed_k33_negative(capsys):
    code, out, _ = run(capsys, "embed", "complete_multipartite:3,3", "--s", "2")
    assert code == 1 and "NotEmbeddable" in out


def test_embed_butterfly_count(tmp_path, capsys):
    res = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "embed", "butterfly:2", "--s", "3", "--all", "--results", str(res))
    assert code == 0
    rec = json.loads(res.read_text())
    assert rec["count"] == 9 and rec["status"] == "TrEmbeddable"


def test_embed_rejects_small_s(capsys):
    code, _, err = run(capsys, "embed", "cycle:6", "--s", "1")
    assert code == 2


def test_embed_budget_unknown(tmp_path, capsys):
    res = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "embed", "butterfly:2", "--s", "3", "--all", "--node-budget", "5",
                       "--results", str(res))
    assert code == 2 and "Unknown" in out
    assert json.loads(res.read_text())["status"] == "Unknown"


def test_embed_jobs_identical(tmp_path, capsys):
    recs = []
    for jobs in ("1", "4"):
        res = tmp_path / f"r{jobs}.jsonl"
        code, _, _ = run(capsys, "embed", "butterfly:2", "--s", "3", "--all", "--jobs", jobs,
                         "--results", str(res))
        assert code == 0
        rec = json.loads(res.read_text())
        rec.pop("elapsed_ms")
        recs.append(rec)
    assert recs[0] == recs[1]


def test_results_append(tmp_path, capsys):
    res = tmp_path / "r.jsonl"
    for _ in range(2):
        run(capsys, "embed", "cycle:6", "--results", str(res))
    lines = res.read_text().splitlines()
    assert len(lines) == 2 and all(json.loads(x)["status"] == "Embeddable" for x in lines)


def test_verify_fixtures(capsys):
    code, out, _ = run(capsys, "verify", "dyck", "dyck_table5", "--scale", "1", "--s", "4")
    assert code == 0 and "16 shortfall pair(s)" in out
    code, out, _ = run(capsys, "-v", "verify", "dyck", "dyck_table5", "--scale", "1", "--s", "4")
    assert code == 0 and out.count("d=5, d'=3") == 16
    code, _, _ = run(capsys, "verify", "indel:2,3", "ind23_table1_corrected", "--scale", "1")
    assert code == 0


def test_verify_corrupted(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("vertex,address\n0,00\n1,10\n2,11\n3,11\n")
    code, out, _ = run(capsys, "verify", "cycle:4", str(path), "--scale", "1")
    assert code == 1 and "violation" in out


def test_verify_malformed(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("vertex,address\n0,00\n1,1\n")
    code, _, err = run(capsys, "verify", "path:2", str(path), "--scale", "1")
    assert code == 2 and err


def test_gonal(capsys):
    code, out, _ = run(capsys, "gonal", "k444")
    assert code == 1
    w = json.loads(out.splitlines()[-1])
    assert len(w["positive"]) == 3 and w["lhs"] > w["rhs"]
    assert run(capsys, "gonal", "gp:10,2")[0] == 0
    assert run(capsys, "gonal", "complete_multipartite:3,3")[0] == 1


def test_gonal_avis(capsys):
    code, out, _ = run(capsys, "gonal", "cycle:6", "--avis")
    assert code == 0 and "partial cube = True" in out


def test_info(capsys):
    code, out, _ = run(capsys, "info")
    assert code == 0 and "gcr" in out
    code, out, _ = run(capsys, "info", "--fixtures")
    assert code == 0 and "dyck_table5" in out
    code, out, _ = run(capsys, "info", "gp:5,2")
    info = json.loads(out)
    assert info["n"] == 10 and info["diameter"] == 2


def test_missing_graph(capsys):
    code, _, err = run(capsys, "embed", "no_such_file.json")
    assert code == 2 and "error" in err


def test_sweep_chords():
    assert sweep_chords(24, "conjecture") == [(9, 11), (13, 15)]
    adj = sweep_chords(12, "adjacent")
    assert adj == [(3, 5), (5, 7), (7, 9)]
    assert (11,) not in sweep_chords(12, "all-odd", 1)


def test_sweep_small(tmp_path, capsys):
    res = tmp_path / "s.jsonl"
    code, out, _ = run(capsys, "sweep-gcr", "--n", "24", "--results", str(res))
    assert code == 0
    recs = [json.loads(x) for x in res.read_text().splitlines()]
    assert [r["family"]["params"] for r in recs] == [[24, 9, 11], [24, 13, 15]]
    assert all((r["scale"], r["m"]) == (1, 5) for r in recs)


def test_sweep_order_independent_of_jobs():
    strip = lambda rs: [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in rs]
    a = run_sweep([12, 16], "adjacent", jobs=1)
    b = run_sweep([12, 16], "adjacent", jobs=3)
    assert strip(a) == strip(b)
