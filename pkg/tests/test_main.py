import json

import pytest

from functions import serialize_instance
from generators import gen_instance
from main import main, parse_args


@pytest.fixture
def instance_file(tmp_path):
    def write(n, r, position, seed=1, name="inst.json"):
        path = tmp_path / name
        path.write_text(serialize_instance(gen_instance(n, r, position, seed)))
        return str(path)
    return write


def test_global_flags_before_or_after_subcommand():
    before = parse_args(["--strict", "--diagnostics", "check", "x.json"])
    after = parse_args(["check", "x.json", "--strict", "--diagnostics"])
    assert before.strict and after.strict
    assert before.diagnostics and after.diagnostics
    plain = parse_args(["check", "x.json"])
    assert plain.diagnostics is None and plain.strict is False and plain.settings is None


def test_check_exit_codes(instance_file, capsys):
    assert main(["check", instance_file(0, 11, "general")]) == 0
    assert json.loads(capsys.readouterr().out)["kind"] == "IdentifiableTerracini"

    assert main(["--diagnostics", "check", instance_file(0, 8, "collinear(5)", name="c.json")]) == 2
    document = json.loads(capsys.readouterr().out)
    assert document["kind"] == "Inconclusive"
    assert document["obstruction"]["kind"] == "CollinearFamily"


def test_rank_deficient_exit_code(tmp_path, capsys):
    path = tmp_path / "line.json"
    path.write_text(json.dumps({"degree": 8, "points": [[t, 1, 0] for t in range(10)], "coefficients": [1] * 10}))
    assert main(["check", str(path)]) == 3
    assert json.loads(capsys.readouterr().out)["rank_of_Md"] == 9


def test_errors_exit_with_one(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"degree": 7, "points": [[1, 0, 0]], "coefficients": [1]}')
    assert main(["check", str(path)]) == 1
    assert capsys.readouterr().out == ""
    assert main(["check", str(tmp_path / "missing.json")]) == 1
    zero = tmp_path / "zero.json"
    zero.write_text('{"degree": 8, "points": [[1, 0, 0], [0, 1, 0]], "coefficients": [1, 0]}')
    assert main(["check", "--strict", str(zero)]) == 1
    assert main(["check", str(zero)]) == 1


def test_hilbert_command(tmp_path, capsys):
    path = tmp_path / "cubic.json"
    points = [[t * t, t ** 3, 1] for t in range(1, 13)]
    path.write_text(json.dumps({"degree": 8, "points": points, "coefficients": [1] * 12}))
    assert main(["hilbert", str(path)]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["Dh"] == [1, 2, 3, 3, 3]
    assert main(["hilbert", str(path), "--dmax", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["complete"] is False


def test_kruskal_and_terracini_commands(instance_file, capsys):
    path = instance_file(0, 6, "general")
    assert main(["kruskal", path, "--d", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["k"] == 6
    assert main(["kruskal", path]) == 0
    assert json.loads(capsys.readouterr().out)["identifiable"] is True
    assert main(["terracini", path]) == 0
    assert json.loads(capsys.readouterr().out)["matrix_rank"] == 18


def test_gen_command(tmp_path, capsys):
    output = tmp_path / "gen.json"
    assert main(["gen", "--n", "0", "--r", "8", "--position", "collinear(5)", "--seed", "3", "-o", str(output)]) == 0
    assert json.loads(output.read_text())["degree"] == 8
    assert main(["gen", "--n", "0", "--r", "12", "--position", "general"]) == 1
    assert main(["gen", "--n", "0", "--r", "12", "--position", "cubic", "--allow-out-of-range"]) == 0
    assert len(json.loads(capsys.readouterr().out)["points"]) == 12


def test_bench_command(tmp_path, capsys):
    csv = tmp_path / "bench.csv"
    assert main(["bench", "--n-list", "0", "--r-list", "5,6", "--trials", "1", "--seed", "0", "--csv", str(csv)]) == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "n,r,trial,method,mults,wall_ms,verdict"
    assert len(lines) == 5
    assert "kruskal" in capsys.readouterr().out
    assert main(["bench", "--r-list", "", "--trials", "1"]) == 0
    assert capsys.readouterr().out.strip() == "n,r,trial,method,mults,wall_ms,verdict"


def test_settings_flag(tmp_path, instance_file, capsys):
    settings = tmp_path / "settings.json"
    settings.write_text('{"pipeline": {"diagnostics": true}}')
    path = instance_file(0, 8, "collinear(5)")
    assert main(["check", path, "--settings", str(settings)]) == 2
    assert json.loads(capsys.readouterr().out)["obstruction"]["kind"] == "CollinearFamily"


@pytest.mark.parametrize("argv", [
    [],
    ["check"],
    ["gen", "--n", "zero", "--r", "5"],
    ["bench", "--r-list", "8,x"],
    ["check", "x.json", "--no-such-flag"],
])
def test_usage_errors_exit_with_one(argv, capsys):
    assert main(argv) == 1
    assert "error:" in capsys.readouterr().err


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0
    assert "check" in capsys.readouterr().out


def test_negative_hilbert_cap_is_an_error(instance_file, capsys):
    assert main(["hilbert", instance_file(0, 6, "general"), "--dmax", "-1"]) == 1
    assert capsys.readouterr().out == ""


def test_kruskal_workers_match_sequential(instance_file, capsys):
    path = instance_file(0, 9, "general")
    assert main(["kruskal", path, "--d", "2"]) == 0
    sequential = json.loads(capsys.readouterr().out)
    assert main(["kruskal", path, "--d", "2", "--workers", "3"]) == 0
    assert json.loads(capsys.readouterr().out) == sequential


def test_bench_position(capsys):
    assert main(["bench", "--r-list", "8", "--trials", "1", "--position", "collinear(5)"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[1].endswith(",Inconclusive")
    assert main(["bench", "--r-list", "8", "--trials", "1", "--position", "ellipse(3)"]) == 1
