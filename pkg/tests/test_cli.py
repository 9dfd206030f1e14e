import json
import subprocess
import sys

import pytest

from lcgroups.harness.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lc_series_json(capsys):
    code, out, _ = run(capsys, "lc-series", "Alt(4)", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["terms"] == [1, 4, 12] and d["class"] == 2


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "json", "lc-series", "Alt(4)")
    assert code == 0 and json.loads(out)["class"] == 2


def test_cp2_sym3(capsys):
    code, out, _ = run(capsys, "cp2", "Sym(3)", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["cp2"] is False
    assert d["counterexample"]["orders"] == [2, 2, 3]
    assert all(len(c.strip("()").split()) == 2 for c in (d["counterexample"]["x"], d["counterexample"]["y"]))


def test_info(capsys):
    code, out, _ = run(capsys, "info", "Dih(8)")
    assert code == 0
    assert "order: 8" in out and "center_order: 2" in out and "nilpotency_class: 2" in out


def test_lcm_witnesses(capsys):
    code, out, _ = run(capsys, "lcm", "Dih(8)", "--witnesses", "--format", "json")
    d = json.loads(out)
    assert (d["lcm_size"], d["lc_order"], d["lcm_group"]) == (4, 4, False)
    assert len(d["witnesses"]) == 4 and all(w["orders"][2] == 4 for w in d["witnesses"])


def test_nlcm(capsys):
    code, out, _ = run(capsys, "nlcm", "Dic(2)", "--format", "json")
    assert code == 0 and json.loads(out)["is_nlcm"] is False


@pytest.mark.parametrize("argv", [
    ["info", "Bogus(2)"], ["info", "prod(Dih(8),"], ["verify", "nope"], ["--seedless", "info", "Cyc(2)"],
    ["info", "Cyc(2)", "--seedless"], ["--cap", "0", "info", "Cyc(2)"], [], ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_cap_exceeded(capsys):
    code, _, err = run(capsys, "--cap", "100", "info", "Sym(5)")
    assert code == 1 and "cap" in err


def test_verify_report_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "thm-222", "--filter", "p-group", "--report", str(path))
    assert code == 0
    d = json.loads(path.read_text())
    assert d["campaign"] == "thm-222" and d["summary"]["fail"] == 0
    assert "thm-222: " in out


def test_verify_failure_exit(capsys, monkeypatch):
    from lcgroups.harness.campaigns import CAMPAIGNS, Campaign, Outcome

    monkeypatch.setitem(CAMPAIGNS, "always-fails",
                        Campaign("always-fails", "demo", check=lambda e, G: Outcome(False, {"x": 1})))
    assert run(capsys, "verify", "always-fails", "--filter", "Cyc(2)")[0] == 1


def test_corpus_list(capsys):
    code, out, _ = run(capsys, "corpus", "list", "--format", "json")
    names = [e["name"] for e in json.loads(out)["entries"]]
    assert code == 0 and "prod(Dih(8),Dih(8))" in names


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "lcgroups.harness.cli", "info", "Cyc(3)"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "order: 3" in p.stdout


@pytest.mark.slow
def test_verify_all_subprocess(tmp_path):
    reports = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        p = subprocess.run([sys.executable, "-m", "lcgroups.harness.cli", "verify", "all", "--report", str(path)],
                           capture_output=True, text=True)
        assert p.returncode == 0, p.stdout[-2000:]
        d = json.loads(path.read_text())
        for row in d["groups"]:
            row.pop("wall_time")
        reports.append(json.dumps(d, sort_keys=True))
    assert reports[0] == reports[1]
