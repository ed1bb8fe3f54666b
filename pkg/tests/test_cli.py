import json
import os

import pytest

from liegrade.cli import main
from liegrade.fixedpoints import enumerate_components
from liegrade.gradings import classify
from liegrade.rootcore import build_root_datum, dynkin

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "goldens")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gradings_json_matches_module(capsys):
    code, out, _ = run(capsys, "gradings", "E", "6", "7", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == [g.to_payload() for g in classify("E", 6, 7)]
    shorts = {(r["rank"], r["node"]) for r in payload if r["short"]}
    assert shorts == {(6, 1), (6, 6), (7, 7)}
    assert not any(r["balanced"] for r in payload if r["rank"] == 6)


def test_gradings_table_view_renders_same_payload(capsys):
    code, table, _ = run(capsys, "gradings", "A", "3", "3")
    code2, out, _ = run(capsys, "gradings", "A", "3", "3", "--json")
    payload = json.loads(out)
    for row in payload:
        assert f"A{row['rank']}" in table
        assert str(row["node"]) in table


def test_gradings_g2_empty(capsys):
    code, out, _ = run(capsys, "gradings", "G", "2", "2", "--json")
    assert code == 0
    assert all(not r["short"] for r in json.loads(out))


def test_fixed_points_json_matches_module(capsys):
    code, out, _ = run(capsys, "fixed-points", "E", "7", "7", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    datum = build_root_datum(dynkin("E", 7))
    assert payload == enumerate_components(datum, 7, 2).to_payload()
    assert payload["components"][0]["type"] == "E6(2)"
    assert payload["components"][0]["dim"] == 21
    # JSON round-trips
    assert json.loads(json.dumps(payload)) == payload


def test_jordan_commands(capsys):
    elem = json.dumps({"kind": "full", "entries": [["1", "1"], ["0", "1"]]})
    code, out, _ = run(capsys, "jordan", "invert", "--element", elem)
    assert code == 0
    assert json.loads(out)["entries"] == [["1", "-1"], ["0", "1"]]
    code, out, _ = run(capsys, "jordan", "check", "--element", elem)
    assert code == 0
    checks = json.loads(out)["checks"]
    assert all(v for v in checks.values())


def test_flow_limit_command(capsys):
    matrix = json.dumps([["1", "0"], ["0", "1"], ["1", "0"], ["1", "1"]])
    code, out, _ = run(capsys, "flow", "limit", "--model", "A", "--n", "2", "--k", "2",
                       "--dir", "inf", "--matrix", matrix)
    assert code == 0
    payload = json.loads(out)
    assert payload["mu"] == 2
    assert payload["profile"] == {"0": 2, "1": 0}


def test_exit_codes(capsys):
    # mathematical precondition: non-short grading node
    code, _, err = run(capsys, "fixed-points", "E", "6", "2", "1")
    assert code == 3 and "short" in err
    # singular Jordan element
    elem = json.dumps({"kind": "full", "entries": [["1", "1"], ["1", "1"]]})
    code, _, _ = run(capsys, "jordan", "invert", "--element", elem)
    assert code == 3
    # argument error: malformed matrix JSON
    code, _, _ = run(capsys, "flow", "limit", "--model", "A", "--n", "2", "--k", "2",
                     "--dir", "0", "--matrix", "not json")
    assert code == 2
    # argparse errors exit 2
    with pytest.raises(SystemExit) as exc:
        main(["gradings", "Z", "1", "2"])
    assert exc.value.code == 2


def test_orbit_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("LIEGRADE_ORBIT_CAP", "10")
    code, _, err = run(capsys, "fixed-points", "E", "7", "7", "1")
    assert code == 4 and "cap" in err


def test_report_tables_match_goldens(tmp_path, capsys):
    code, _, _ = run(capsys, "report-tables", str(tmp_path))
    assert code == 0
    golden_files = sorted(os.listdir(GOLDEN_DIR))
    assert golden_files == sorted(os.listdir(tmp_path))
    for name in golden_files:
        with open(os.path.join(GOLDEN_DIR, name), "rb") as fh:
            want = fh.read()
        with open(tmp_path / name, "rb") as fh:
            got = fh.read()
        assert got == want, f"regenerated {name} differs from the golden file"
