import io
import json


from colorlab.cli import main
from colorlab.graph import complete, construct_gn, cycle, to_graph6


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def records(out):
    return [json.loads(line) for line in out.splitlines()]


C4 = to_graph6(cycle(4))
G6 = to_graph6(construct_gn(6).graph)


def test_params_arguments(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["params", C4, G6])
    assert code == 0
    c4, g6 = records(out)
    assert (c4["at"]["value"], c4["dp"]["value"], c4["mad"]) == (2, 3, "2/1")
    assert (g6["at"]["value"], g6["dp"]["value"]) == (3, 4)
    assert c4["list_chromatic"] == {"status": "skipped"}


def test_params_stdin_and_choosability(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["params", "--choosability"], stdin=C4 + "\n")
    assert code == 0
    (rec,) = records(out)
    assert rec["list_chromatic"]["value"] == 2


def test_params_parse_error(monkeypatch, capsys):
    code, out, err = run(monkeypatch, capsys, ["params", "C~x"])
    assert code == 2 and out == "" and "offset" in err


def test_usage_error(monkeypatch, capsys):
    assert run(monkeypatch, capsys, ["no-such-command"])[0] == 2
    assert run(monkeypatch, capsys, ["verify-gn", "--from", "2"])[0] == 2


def test_verify_gn(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["verify-gn", "--from", "4", "--to", "6"])
    assert code == 0
    recs = records(out)
    assert [r["n"] for r in recs[:2]] == [4, 6] and all(r["ok"] for r in recs[:2])
    assert recs[-1] == {"summary": {"checked": [4, 6], "failed": []}}


def test_verify_gn_failure_exit(monkeypatch, capsys):
    def broken(n, budget):
        return {"n": n, "checks": {}, "ok": False, "failed": ["d_bad_cover"]}

    monkeypatch.setattr("colorlab.cli.verify_gn", broken)
    code, _, err = run(monkeypatch, capsys, ["verify-gn", "--from", "4", "--to", "4"])
    assert code == 1 and "d_bad_cover" in err


def test_verify_bounds(monkeypatch, capsys, connected_upto5):
    stdin = "\n".join(to_graph6(g) for g in connected_upto5[:12]) + "\n"
    code, out, _ = run(monkeypatch, capsys, ["verify-bounds"], stdin=stdin)
    assert code == 0
    summary = records(out)[-1]["summary"]
    assert summary["graphs"] == 12 and summary["violations"] == 0 and summary["offenders"] == []


def test_verify_bounds_skips(monkeypatch, capsys):
    stdin = to_graph6(complete(6)) + "\nA?\nbad!\n" + C4 + "\n"
    code, out, err = run(monkeypatch, capsys, ["verify-bounds"], stdin=stdin)
    recs = records(out)
    assert code == 0
    assert [r.get("status") for r in recs[:3]] == ["skipped", "skipped", "parse-error"]
    assert recs[-1]["summary"]["graphs"] == 1 and recs[-1]["summary"]["skipped"] == 3
    assert "line 3" in err


def test_search_gap_empty_stream(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["search-gap"])
    assert code == 0
    (rec,) = records(out)
    assert rec["summary"]["processed"] == 0 and rec["summary"]["dp_ge_at_plus_2"] == []


def test_search_gap_g6(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["search-gap"], stdin=f"{G6}\n{to_graph6(cycle(5))}\n")
    assert code == 0
    g6, c5, summary = records(out)
    assert g6["gap"] == 1 and c5["gap"] == 0
    assert summary["summary"]["dp_eq_at_plus_1"] == [G6]
    assert summary["summary"]["dp_ge_at_plus_2"] == []


def test_search_gap_deterministic_across_workers(monkeypatch, capsys, connected_upto5):
    stdin = "\n".join(to_graph6(g) for g in connected_upto5) + "\n"
    outs = [run(monkeypatch, capsys, ["search-gap", "--workers", w], stdin=stdin)[1] for w in ("1", "1", "2")]
    assert outs[0] == outs[1] == outs[2]
    monkeypatch.setenv("COLORLAB_WORKERS", "2")
    assert run(monkeypatch, capsys, ["search-gap"], stdin=stdin)[1] == outs[0]


def test_table_mode(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["params", "--table", C4])
    assert code == 0
    assert out.startswith(C4) and "at=2" in out and "dp=3" in out
    code, out, _ = run(monkeypatch, capsys, ["verify-gn", "--table", "--to", "4"])
    assert out.splitlines()[0].startswith("G_4") and out.splitlines()[-1].startswith("summary")
