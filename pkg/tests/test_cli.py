import json
import subprocess
import sys

import pytest

from gofknots.cli import main
from gofknots.diagrams.fileio import fixture_dir


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_census_l41(capsys):
    code, out, _ = run(capsys, "census", "L(4,1)")
    assert code == 0
    assert "[[-2,3],[-3,4]]" in out.replace(" ", "")
    assert "total: 3" in out


def test_census_records(capsys):
    code, out, _ = run(capsys, "census", "L(4,1)", "--format", "records")
    records = [json.loads(line) for line in out.splitlines()]
    assert records[-1]["total"] == 3
    assert records[2]["matrix"] == [[-2, 3], [-3, 4]]


def test_census_empty_is_not_an_error(capsys):
    code, out, _ = run(capsys, "census", "L(9,2)", "--format", "records")
    assert code == 0
    assert json.loads(out.splitlines()[-1])["total"] == 0


def test_plumb(capsys):
    code, out, _ = run(capsys, "plumb", "3", "2")
    assert code == 0
    assert out == "L(3,1)#L(2,1)  [[1,3],[2,7]]  anosov\n"


def test_word(capsys):
    assert run(capsys, "word", "commutator", "xyXY")[1] == "true\n"
    assert run(capsys, "word", "commutator", "xX")[1] == "false\n"
    assert run(capsys, "word", "reduce", "Yxy")[1] == "x\n"
    assert run(capsys, "word", "reduce", "xX")[1] == "1\n"


def test_homeo(capsys):
    assert run(capsys, "homeo", "L(7,3)", "L(7,5)")[1] == "true\n"
    assert run(capsys, "homeo", "L(4,3)", "L(4,1)", "--oriented")[1] == "false\n"


def test_conjugate(capsys):
    code, out, _ = run(capsys, "conjugate", "[[1,1],[0,1]]", "[[1,-1],[0,1]]")
    assert code == 0 and out.startswith("conjugate")
    _, out, _ = run(capsys, "conjugate", "[[1,3],[2,7]]", "[[1,3],[-2,-5]]")
    assert "trace: 8 vs -4" in out


def test_gof_check_fixture(capsys):
    path = fixture_dir() / "fig16.json"
    code, out, _ = run(capsys, "gof-check", "--diagram", "L(3,1)#S2xS1", "--curve", str(path))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "gof: true"
    assert lines[1].startswith("V-word: ")
    assert lines[2].startswith("W-word: ") and "'" in lines[2]


def test_gof_check_reducing(capsys):
    path = fixture_dir() / "reducing-S3.json"
    _, out, _ = run(capsys, "gof-check", "--diagram", "S3", "--curve", str(path))
    assert out.splitlines()[0] == "gof: false"


def test_gof_check_wrong_diagram(capsys):
    path = fixture_dir() / "fig16.json"
    code, _, err = run(capsys, "gof-check", "--diagram", "S3", "--curve", str(path))
    assert code == 1 and "error" in err


def test_search(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--manifold", "S2xS1#S2xS1", "--max-crossings", "8", "--limit", "2",
                       "--save-dir", str(tmp_path))
    assert code == 0
    assert out.splitlines()[-1] == "found: 2"
    assert len(list(tmp_path.glob("*.json"))) == 2


def test_search_jobs_identical(capsys):
    args = ["search", "--manifold", "S2xS1#S2xS1", "--max-crossings", "6"]
    a = run(capsys, *args)[1]
    b = run(capsys, *args, "--jobs", "2")[1]
    assert a == b


def test_render_stdout_deterministic(capsys):
    path = fixture_dir() / "fig10.json"
    a = run(capsys, "render", "--diagram", "S2xS1#S2xS1", "--curve", str(path), "-o", "-")[1]
    b = run(capsys, "render", "--diagram", "S2xS1#S2xS1", "--curve", str(path), "-o", "-")[1]
    assert a == b and a.startswith("<svg")


def test_render_file(capsys, tmp_path):
    out = tmp_path / "d.svg"
    code, _, _ = run(capsys, "render", "--diagram", "L(5,2)", "-o", str(out))
    assert code == 0 and out.read_text().startswith("<svg")


@pytest.mark.parametrize(
    "argv",
    [[], ["census"], ["frobnicate"], ["census", "S3", "--bogus"], ["search", "--manifold", "S3", "--max-crossings", "-1"]],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [["census", "L(6,3)"], ["word", "reduce", "xq"], ["conjugate", "[[2,0],[0,1]]", "[[1,0],[0,1]]"]])
def test_domain_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("gofknots: error")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gofknots", "word", "commutator", "xYXy"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "true\n"


def test_fixture_env_override(monkeypatch, tmp_path):
    monkeypatch.setenv("GOFKNOTS_FIXTURES", str(tmp_path))
    assert fixture_dir() == tmp_path
