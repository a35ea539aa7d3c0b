from __future__ import annotations

import json
import subprocess
import sys


from maxcon.cli import main
from maxcon.formats import parse_edge_list


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys):
    assert run(capsys, "check", "1,1,1,1", "-k", "1") == (0, "graphic: yes; k-edge-connected realization: no\n", "")
    code, out, _ = run(capsys, "check", "3,3,1,1")
    assert out == "graphic: no\n"


def test_check_file_with_several_sequences(capsys, tmp_path):
    path = tmp_path / "seqs.txt"
    path.write_text("2,2,2\n# comment\n1,1,1,1\n")
    code, out, _ = run(capsys, "check", str(path))
    assert out.splitlines() == ["graphic: yes; k-edge-connected realization: yes", "graphic: yes; k-edge-connected realization: no"]


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "check", "3,x")
    assert code == 1 and "column 3" in err


def test_realize_round_trip(capsys):
    code, out, _ = run(capsys, "realize", "3,2,2,1")
    assert code == 0
    g = parse_edge_list(out)
    assert sorted(g.degrees(), reverse=True) == [3, 2, 2, 1]


def test_rewire_two_triangles(capsys, tmp_path):
    src = tmp_path / "two_triangles.el"
    src.write_text("6 6\n1 2\n1 3\n2 3\n4 5\n4 6\n5 6\n")
    out_path = tmp_path / "out.el"
    code, out, _ = run(capsys, "rewire", "-g", str(src), "--mode", "full", "-o", str(out_path))
    assert code == 0
    payload = json.loads(out)
    cert = payload["certificate"]
    assert cert["mode_target_met"] and cert["final_lambda"] == cert["final_delta"] == 2
    assert payload["schema"] == 1 and payload["seed"] == 0
    assert parse_edge_list(out_path.read_text()).edges() == [tuple(e) for e in payload["graph"]["edges"]]
    # byte-identical on rerun
    assert run(capsys, "rewire", "-g", str(src), "--mode", "full")[1] == out


def test_rewire_hypothesis_failure(capsys, tmp_path):
    g = tmp_path / "p4.el"
    g.write_text("4 3\n1 2\n2 3\n3 4\n")
    z = tmp_path / "z.el"
    z.write_text("4 2\n1 2\n3 4\n")
    code, _, err = run(capsys, "rewire", "-g", str(g), "-z", str(z))
    assert code == 2 and "tree-size" in err


def test_peel(capsys):
    code, out, _ = run(capsys, "peel", "3,3,3,3", "-k", "3", "-r", "1")
    assert code == 0
    assert len(json.loads(out)["decomposition"]["one_factors"]) >= 2
    assert run(capsys, "peel", "3,3,3,3", "-k", "3", "-r", "2")[0] == 2


def test_factor_commands(capsys):
    code, out, _ = run(capsys, "kundu", "3,3,3,3,3,3", "2,2,2,2,2,2")
    assert code == 0 and json.loads(out)["audit"]["violations"] == []
    code, out, _ = run(capsys, "maxcon-factor", "2,2,2,2", "1,1,1,1")
    payload = json.loads(out)
    assert payload["audit"]["lambda"] == payload["audit"]["delta"] == 2
    assert run(capsys, "maxcon-factor", "2,2,1,1", "1,1,1,1")[0] == 2


def test_oracle_stream(capsys):
    code, out, _ = run(capsys, "oracle", "--theorem", "edmonds", "--max-n", "4")
    lines = out.splitlines()
    assert code == 0 and json.loads(lines[-1])["failures"] == []


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "maxcon.cli", "check", "2,2,2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("graphic: yes")
