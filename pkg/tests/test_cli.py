import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from vpgmis.cli import main
from vpgmis.geometry import read_instance
from vpgmis.oracle import brute_force_mis, build_conflict_graph


def parse_report(text):
    out = {}
    for line in text.splitlines():
        key, sep, value = line.partition(" = ")
        assert sep, line
        out[key] = value
    return out


@pytest.fixture
def inst_file(tmp_path):
    def make(text, name="inst.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_solve_check_roundtrip(tmp_path, capsys):
    inst = str(tmp_path / "g.txt")
    sol = str(tmp_path / "g.sol")
    assert run(["gen", "--n", "60", "--seed", "4", "--mode", "general", "--out", inst], capsys)[0] == 0
    assert len(read_instance(inst)) == 60
    code, out, _ = run(["solve", inst, "--out", sol, "--no-timing"], capsys)
    report = parse_report(out)
    assert code == 0 and report["variant"] == "GeneralTh3" and report["n"] == "60"
    lines = open(sol).read().split()
    assert lines == sorted(lines, key=int) and len(lines) == int(report["size"])
    code, out, _ = run(["check", inst, sol], capsys)
    assert code == 0 and "independent = true" in out


def test_solve_auto_equilateral(inst_file, capsys):
    path = inst_file("# two sizes\n0 0 1 1\n5 5 9 9\n3 0 2 -1\n")
    code, out, _ = run(["solve", path], capsys)
    report = parse_report(out)
    assert code == 0
    assert report["variant"] in ("UniformEqCor1", "EquilateralTh1")
    assert report["variant"] == "EquilateralTh1" and report["guaranteed_factor"] == "108"
    assert report["count_L1"] == "2" and report["count_L3"] == "1"
    assert "indices" in report and "wall_time_s" in report


def test_solve_reports_are_stable(inst_file, capsys):
    path = inst_file("0 0 2 2\n1 1 3 3\n4 0 6 2\n")
    first = run(["solve", path, "--no-timing"], capsys)[1]
    assert first == run(["solve", path, "--no-timing"], capsys)[1]


def test_solve_empty_file(inst_file, capsys):
    code, out, _ = run(["solve", inst_file("# nothing\n\n")], capsys)
    assert code == 0 and parse_report(out)["size"] == "0"


def test_malformed_line_7(inst_file, capsys):
    text = "# header\n0 0 1 1\n\n2 2 3 3\n# c\n4 4 5 5\n6 6 seven 7\n"
    code, _, err = run(["solve", inst_file(text)], capsys)
    assert code == 2 and "line 7" in err


def test_variant_precondition_failure(inst_file, capsys):
    code, _, err = run(["solve", inst_file("0 0 1 2\n"), "--variant", "equilateral"], capsys)
    assert code == 2 and "equilateral" in err


def test_check_outcomes(inst_file, capsys):
    path = inst_file("0 0 2 2\n0 0 2 2\n5 5 6 6\n")
    code, out, _ = run(["check", path, inst_file("0\n1\n", "dup.sol")], capsys)
    assert code == 1 and "violation = 0 1" in out
    assert run(["check", path, inst_file("0\n2\n", "ok.sol")], capsys)[0] == 0
    assert run(["check", path, inst_file("", "empty.sol")], capsys)[0] == 0
    code, _, err = run(["check", path, inst_file("7\n", "bad.sol")], capsys)
    assert code == 2 and "out of range" in err


def test_oracle_command(tmp_path, capsys):
    inst = str(tmp_path / "o.txt")
    run(["gen", "--n", "10", "--seed", "8", "--coords", "0:6", "--out", inst], capsys)
    code, out, _ = run(["oracle", inst], capsys)
    report = parse_report(out)
    assert code == 0
    assert int(report["alpha"]) == len(brute_force_mis(build_conflict_graph(read_instance(inst))))
    assert report["within_guarantee"] == "true"


def test_oracle_cap(tmp_path, capsys, monkeypatch):
    inst = str(tmp_path / "o.txt")
    run(["gen", "--n", "12", "--out", inst], capsys)
    code, _, err = run(["oracle", inst, "--oracle-cap", "5"], capsys)
    assert code == 2 and "cap 5" in err
    monkeypatch.setenv("VPGMIS_ORACLE_CAP", "4")
    assert run(["oracle", inst], capsys)[0] == 2


def test_render_svg(tmp_path, capsys):
    inst = str(tmp_path / "r.txt")
    sol = str(tmp_path / "r.sol")
    svg = str(tmp_path / "r.svg")
    run(["gen", "--n", "25", "--seed", "1", "--out", inst], capsys)
    run(["solve", inst, "--out", sol], capsys)
    assert run(["render", inst, sol, "--svg", svg], capsys)[0] == 0
    root = ET.parse(svg).getroot()
    lines = root.findall("{http://www.w3.org/2000/svg}polyline")
    assert len(lines) == 25
    red = {p.get("id") for p in lines if p.get("stroke") == "#d62728"}
    assert red == {f"l{k}" for k in open(sol).read().split()}
    code, out, _ = run(["render", inst_file_empty(tmp_path)], capsys)
    assert code == 0 and ET.fromstring(out.split("\n", 1)[1]).tag.endswith("svg")


def inst_file_empty(tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("")
    return str(p)


def test_gen_options(tmp_path, capsys):
    out_path = str(tmp_path / "u.txt")
    argv = ["gen", "--n", "20", "--mode", "uniform", "--lengths", "1:3", "--coords", "0:10",
            "--grain", "1/2", "--mix", "1,0,0,0", "--equal-arms", "--out", out_path]
    assert run(argv, capsys)[0] == 0
    shapes = read_instance(out_path)
    assert {(l.x_h - l.x_c) for l in shapes} == {(l.y_v - l.y_c) for l in shapes}
    assert len({(l.x_h - l.x_c) for l in shapes}) == 1
    code, _, err = run(["gen", "--n", "3", "--lengths", "4:1"], capsys)
    assert code == 2 and "length range" in err
    with pytest.raises(SystemExit):
        main(["gen", "--n", "3", "--coords", "oops"])


def test_unwritable_output(inst_file, capsys):
    code, _, err = run(["solve", inst_file("0 0 1 1\n"), "--out", "/nonexistent/dir/x.sol"], capsys)
    assert code == 2


def test_bench_small(capsys):
    code, out, _ = run(["bench", "--sizes", "200,400", "--repeat", "1", "--backend", "both"], capsys)
    assert code == 0
    assert "backend = pure" in out and "max_growth" in out


def test_global_backend_flag(inst_file, capsys):
    assert run(["--backend", "pure", "solve", inst_file("0 0 1 1\n")], capsys)[0] == 0


def test_module_entry_point(inst_file):
    proc = subprocess.run([sys.executable, "-m", "vpgmis.cli", "solve", inst_file("0 0 1 1\n")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "size = 1" in proc.stdout
