import json

import pytest

from cambrianrep import checks
from cambrianrep.cli import main, parse_quiver, InputError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eta_text(capsys):
    code, out, _ = run(capsys, "eta", "--quiver", "RRRLRL", "--perm", "453126")
    assert code == 0
    assert out.splitlines()[0] == "diagonals: (0,6), (0,5), (5,6), (0,3), (1,3)"
    assert "λ6: (0,1,2,3,5,7)" in out
    assert "λ0^rep: [M(1,4), M(5,6), S(7)]" in out


def test_eta_json(capsys):
    code, out, _ = run(capsys, "eta", "--quiver", '{"n": 5, "directions": "RRRLRL"}',
                       "--perm", "4 5 3 1 2 6", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["permutation"] == [4, 5, 3, 1, 2, 6]
    assert data["diagonals"] == [[0, 6], [0, 5], [5, 6], [0, 3], [1, 3]]
    assert len(data["mar"]) == 13


def test_mar_count(capsys):
    assert run(capsys, "mar", "--quiver", "RRRLRL", "--count")[1] == "132\n"


def test_quiver_from_file(tmp_path, capsys):
    f = tmp_path / "q.json"
    f.write_text('{"n": 2, "directions": "RLR"}')
    assert run(capsys, "mar", "--quiver", str(f), "--count")[1] == "5\n"
    assert parse_quiver("rl").directions == "RL"


@pytest.mark.parametrize("argv", [
    ["mar", "--quiver", "RXL"],
    ["mar", "--quiver", '{"n": 3, "directions": "RL"}'],
    ["mar", "--quiver", "{not json"],
    ["eta", "--quiver", "RL", "--perm", "123"],
    ["eta", "--quiver", "RL"],
    ["lattice", "--quiver", "R" * 9],
    ["mar", "--quiver", "RL", "--format", "svg"],
    ["check", "--n-max", "9"],
    ["check", "--only", "13"],
    ["endo", "--quiver", "RL", "--mar-index", "7"],
    ["nonsense"],
    ["mar"],
])
def test_bad_input_exits_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == ""


def test_parse_quiver_rejects_garbage():
    with pytest.raises(InputError):
        parse_quiver("")


def test_check_small(capsys):
    code, out, _ = run(capsys, "check", "--n-max", "3", "--only", "3", "--only", "9")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and all(line.startswith("[PASS]") for line in lines)


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--n-max", "2", "--only", "1", "--format", "json")
    assert code == 0 and json.loads(out)[0]["ok"] is True


def test_check_violation_exits_2(capsys, monkeypatch):
    crit = list(checks.CRITERIA)
    num, title, _, bound = crit[0]
    crit[0] = (num, title, lambda **kw: (False, "planted violation"), bound)
    monkeypatch.setattr(checks, "CRITERIA", crit)
    code, out, _ = run(capsys, "check", "--only", "1")
    assert code == 2 and out.startswith("[FAIL]") and "planted violation" in out


def test_check_crash_is_a_failure(capsys, monkeypatch):
    def boom(**kw):
        raise RuntimeError("planted crash")
    crit = list(checks.CRITERIA)
    num, title, _, bound = crit[1]
    crit[1] = (num, title, boom, bound)
    monkeypatch.setattr(checks, "CRITERIA", crit)
    code, out, _ = run(capsys, "check", "--only", "2")
    assert code == 2 and "planted crash" in out


@pytest.mark.parametrize("cmd,fmt", [
    ("polygon", "text"), ("polygon", "json"), ("polygon", "svg"),
    ("ar", "dot"), ("ar", "json"), ("ar", "text"),
    ("fibers", "json"), ("mar", "text"), ("mar", "json"),
    ("lattice", "dot"), ("lattice", "json"),
    ("stability", "text"), ("stability", "json"), ("stability", "svg"),
    ("endo", "text"), ("endo", "json"), ("endo", "dot"),
])
def test_every_format_is_deterministic(capsys, cmd, fmt):
    argv = [cmd, "--quiver", "RRL", "--format", fmt]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == 0 and first[1] and first == second
    if fmt == "json":
        json.loads(first[1])
    if fmt == "svg":
        assert first[1].startswith("<svg")
    if fmt == "dot":
        assert first[1].startswith("digraph")


def test_polygon_with_triangulation(capsys):
    code, out, _ = run(capsys, "polygon", "--quiver", "RRL", "--format", "svg", "--mar-index", "3")
    assert code == 0 and "<line" in out


def test_eta_fibers(capsys):
    code, out, _ = run(capsys, "eta", "--quiver", "RL", "--fibers")
    data = json.loads(out)
    assert code == 0
    assert sorted(p for f in data["fibers"] for p in f["permutations"]) == ["12", "21"]


def test_lattice_summand_labels(capsys):
    code, out, _ = run(capsys, "lattice", "--quiver", "RL", "--labels", "summands")
    assert code == 0 and "M(2,2)" in out


def test_out_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CAMBRIAN_OUT_DIR", str(tmp_path))
    code, out, err = run(capsys, "ar", "--quiver", "RL", "--out", "sub/ar.dot")
    assert code == 0 and out == ""
    assert (tmp_path / "sub" / "ar.dot").read_text().startswith("digraph")
    absolute = tmp_path / "abs.json"
    run(capsys, "mar", "--quiver", "RL", "--format", "json", "--out", str(absolute))
    assert json.loads(absolute.read_text())["mars"]
