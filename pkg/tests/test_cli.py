import json

import pytest

import app.config
from app.functions import crosscheck
from app.functions.crosscheck import run_verify
from app.ingest.models.VerifyReport import SuiteResult
from app.main import main


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == "cover-pairs/1"
    return code, payload


def test_invariants_json(capsys):
    code, payload = run_json(capsys, ["--quiet", "invariants", "--edges", "4:0-1,1-2,2-3"])
    assert code == 0
    assert payload["command"] == "invariants"
    r = payload["result"]
    assert r["bundle"]["M"] == 1
    assert r["pdim"] == 2 and r["reg_cover"] == 1
    assert r["h_cover"]["deg_h"] == 1
    assert r["graph6"] == "Ch"


def test_invariants_text(capsys):
    assert main(["--quiet", "invariants", "--g6", "C~"]) == 0
    out = capsys.readouterr().out
    assert "alpha=1 M=0" in out
    assert "pair (reg, deg h_J) = (2, 2)" in out


def test_invariants_csv(capsys):
    assert main(["--quiet", "invariants", "--g6", "Ch", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("graph6,n,alpha,M")
    assert lines[1].startswith("Ch,4,2,1,")


def test_invariants_from_file(tmp_path, capsys):
    source = tmp_path / "one.g6"
    source.write_text("\nCh\nC~\n")
    code, payload = run_json(capsys, ["--quiet", "invariants", "--g6", str(source)])
    assert code == 0
    assert payload["result"]["graph6"] == "Ch"


def test_invariants_trace(capsys):
    assert main(["--quiet", "invariants", "--edges", "5:0-1,1-2,2-3,3-4", "--trace"]) == 0
    out = capsys.readouterr().out
    assert "pdim recursion:" in out
    assert "block check:" in out


def test_usage_errors_exit_2(capsys):
    assert main(["--quiet", "invariants", "--edges", "4:0-1,x"]) == 2
    assert main(["--quiet", "invariants", "--g6", "C!"]) == 2
    assert main(["--quiet", "invariants", "--g6", "Ch", "--field", "p:4"]) == 2
    assert main(["--quiet", "family", "Gkr", "2", "1"]) == 2
    assert main(["--quiet", "family", "cone"]) == 2
    assert main(["--quiet", "pairs", "trees2", "3"]) == 2
    with pytest.raises(SystemExit) as err:
        main(["invariants", "--bogus"])
    assert err.value.code == 2


def test_family_text(capsys):
    assert main(["--quiet", "family", "Hnp", "9", "4"]) == 0
    out = capsys.readouterr().out
    assert "ALL MATCH" in out
    assert "pair (reg, deg h_J) = (4, 3)" in out


def test_family_radius2_flags(capsys):
    assert main(["--quiet", "family", "radius2", "--L1", "4"]) == 0
    assert "pair (reg, deg h_J) = (3, 3)" in capsys.readouterr().out

    code, payload = run_json(capsys, ["--quiet", "family", "radius2", "--L1", "3", "--ts", "2,1"])
    assert code == 0
    assert payload["result"]["all_match"]
    assert payload["result"]["n"] == 9


def test_family_with_base_graph(capsys):
    assert main(["--quiet", "family", "whisker", "2", "--edges", "2:0-1"]) == 0
    assert main(["--quiet", "family", "cone", "--edges", "4:0-1,2-3"]) == 0
    assert main(["--quiet", "family", "split", "--g6", "Ch"]) == 0
    capsys.readouterr()


def test_family_over_a_prime_field(capsys):
    code, payload = run_json(capsys, [
        "--quiet", "family", "cone", "--edges", "4:0-1,1-2,2-3,3-0", "--pdim-method", "hochster", "--field", "p:2",
    ])
    assert code == 0
    assert payload["result"]["all_match"]
    assert payload["result"]["measurement"]["pdim"] == 4
    assert payload["result"]["measurement"]["pdim_method"] == "hochster"

    assert main(["--quiet", "family", "cone", "--edges", "2:0-1", "--field", "p:4"]) == 2
    capsys.readouterr()


def test_pairs(capsys):
    code, payload = run_json(capsys, ["--quiet", "pairs", "trees2", "9"])
    assert code == 0
    rows = payload["result"]["rows"]
    assert len(rows) == 11
    assert {"reg": 4, "deg": 3} in [{"reg": r["reg"], "deg": r["deg"]} for r in rows]

    assert main(["--quiet", "pairs", "split", "2"]) == 0
    assert "(0, 0)" in capsys.readouterr().out

    assert main(["--quiet", "pairs", "gkr", "8", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "reg,deg,witness,graph6"
    assert [line.split(",")[:2] for line in lines[1:]] == [["6", "4"], ["6", "5"]]


def test_survey_scatter(capsys):
    assert main(["--quiet", "survey", "--n", "4", "--format", "scatter"]) == 0
    assert capsys.readouterr().out == "1\t1\t1\n2\t2\t5\n"


def test_survey_file_to_csv(tmp_path, capsys):
    source = tmp_path / "corpus.g6"
    source.write_text(">>graph6<<Ch\nC~\nA?\n")
    out = tmp_path / "records.csv"
    assert main(["--quiet", "survey", "--g6", str(source), "--format", "csv", "--output", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 3
    assert lines[1].startswith("Ch,")


def test_survey_json_reports_skips(tmp_path, capsys):
    source = tmp_path / "corpus.g6"
    source.write_text("Ch\nA?\n")
    code, payload = run_json(capsys, ["--quiet", "survey", "--g6", str(source)])
    assert code == 0
    assert payload["result"]["processed"] == 1
    assert payload["result"]["skipped"][0]["line"] == 2


def test_config_flag(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(app.config, "_CONFIG", None)
    cfg = tmp_path / "cfg.toml"
    cfg.write_text("[guards]\nhochster_max_n = 3\n")
    assert main(["--quiet", "--config", str(cfg), "invariants", "--g6", "C~"]) == 0
    out = capsys.readouterr().out
    # K_4 is over the Hochster guard now and falls back to n - i
    assert "[chordal]" in out
    monkeypatch.setattr(app.config, "_CONFIG", None)


@pytest.mark.slow
def test_verify_quick():
    report = run_verify("quick")
    assert report.ok, [s.failures for s in report.suites if not s.ok]
    assert {s.name for s in report.suites} >= {"oracles", "families", "recursions", "theorems"}


def passing_suite(name):
    return lambda *args: SuiteResult(name=name, checked=1)


def test_verify_exits_1_on_a_failed_suite(monkeypatch, capsys):
    monkeypatch.setattr(crosscheck, "oracle_suite", passing_suite("oracles"))
    monkeypatch.setattr(crosscheck, "recursion_suite", passing_suite("recursions"))
    monkeypatch.setattr(crosscheck, "theorem_suite", passing_suite("theorems"))
    monkeypatch.setattr(crosscheck, "family_suite", lambda level: SuiteResult(
        name="families", checked=3, failures=["G_1,1: pdim predicted 4 measured 3 (cone)"],
    ))
    assert main(["--quiet", "verify", "quick"]) == 1
    captured = capsys.readouterr()
    assert "❌ families: 1 of 3 checks failed" in captured.err
    assert "G_1,1: pdim predicted 4 measured 3" in captured.err
    assert "verify quick: FAILED" in captured.out


def test_verify_exits_0_when_every_suite_passes(monkeypatch, capsys):
    for attr, name in (("oracle_suite", "oracles"), ("family_suite", "families"),
                       ("recursion_suite", "recursions"), ("theorem_suite", "theorems")):
        monkeypatch.setattr(crosscheck, attr, passing_suite(name))
    code, payload = run_json(capsys, ["--quiet", "verify", "quick"])
    assert code == 0
    assert [s["name"] for s in payload["result"]["suites"]] == ["oracles", "families", "recursions", "theorems"]
