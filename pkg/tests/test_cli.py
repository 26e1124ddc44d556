import io
import subprocess
import sys

import pytest

from tridom.cli import run
from tridom.generators import gen_pentagons
from tridom.io import parse_ecg, parse_mpd, serialize_mpd


def records(text):
    out = []
    for line in text.splitlines():
        if line.startswith("#R "):
            out.append(dict(field.split("=", 1) for field in line[3:].split()))
    return out


def call(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out = capsys.readouterr().out
    return code, out, records(out)


@pytest.fixture
def pentagon_file(tmp_path):
    path = tmp_path / "pentagon.mpd"
    path.write_text(serialize_mpd(gen_pentagons(1)))
    return str(path)


@pytest.fixture
def rainbow_file(tmp_path):
    path = tmp_path / "rainbow.ecg"
    path.write_text("ecg 3\nedge 0 1 0\nedge 0 2 1\nedge 1 2 2\n")
    return str(path)


def test_pipeline_through_the_console_script():
    gen = subprocess.run([sys.executable, "-m", "tridom.cli", "gen", "dk", "--k", "2"], capture_output=True, text=True)
    assert gen.returncode == 0
    orc = subprocess.run(
        [sys.executable, "-m", "tridom.cli", "oracle", "gamma0", "-"], input=gen.stdout, capture_output=True, text=True
    )
    assert orc.returncode == 0
    (rec,) = records(orc.stdout)
    assert rec["gamma0"] == "3" and rec["certificate"] == "verified"


def test_solve_classes_on_pentagon(capsys, monkeypatch, pentagon_file):
    code, _, (rec,) = call(capsys, monkeypatch, ["solve", "classes", pentagon_file])
    assert code == 0
    assert int(rec["size"]) <= 4 and rec["certificate"] == "verified"
    code, _, (rec,) = call(capsys, monkeypatch, ["solve", "classes", "--mode", "strict", pentagon_file])
    assert code == 0 and int(rec["size"]) <= 11 and rec["bound"] == "11"


@pytest.mark.parametrize("kind", ["vertices", "alpha2", "clique-cover"])
def test_vertex_solvers(capsys, monkeypatch, pentagon_file, kind):
    code, _, (rec,) = call(capsys, monkeypatch, ["solve", kind, pentagon_file])
    assert code == 0 and rec["certificate"] == "verified"


def test_explicit_clique_cover(capsys, monkeypatch, pentagon_file):
    code, _, (rec,) = call(capsys, monkeypatch, ["solve", "clique-cover", pentagon_file, "--cover", "0 1;2 3;4"])
    assert code == 0 and rec["chosen"] == "0,2,4"


def test_acyclic_rejects_cycles(capsys, monkeypatch, pentagon_file):
    code, out, (rec,) = call(capsys, monkeypatch, ["solve", "acyclic", pentagon_file])
    assert code == 2 and rec["error"] == "NotAcyclic"


@pytest.mark.parametrize("kind, value", [("beta", "2"), ("alpha", "2"), ("k", "3"), ("gamma", "3")])
def test_oracles(capsys, monkeypatch, pentagon_file, kind, value):
    code, _, (rec,) = call(capsys, monkeypatch, ["oracle", kind, pentagon_file])
    assert code == 0 and rec[kind] == value and rec["certificate"] == "verified"


def test_check_gallai_rainbow(capsys, monkeypatch, rainbow_file):
    code, out, (rec,) = call(capsys, monkeypatch, ["check", "gallai", rainbow_file])
    assert code == 1
    assert "rainbow triangle [0, 1, 2]" in out


def test_check_domination(capsys, monkeypatch, pentagon_file):
    assert call(capsys, monkeypatch, ["check", "vertex-domination", pentagon_file, "--set", "0,2,3"])[0] == 0
    code, _, (rec,) = call(capsys, monkeypatch, ["check", "vertex-domination", pentagon_file, "--set", "0"])
    assert code == 1 and rec["undominated"] == "2"
    assert call(capsys, monkeypatch, ["check", "class-domination", pentagon_file, "--set", "0 2 3"])[0] == 0
    assert call(capsys, monkeypatch, ["check", "triangle", pentagon_file])[0] == 0


def test_check_triangle_finds_one(capsys, monkeypatch):
    text = "mpd 3 3\nclass 0 0\nclass 1 1\nclass 2 2\narc 0 1\narc 1 2\narc 2 0\n"
    code, _, (rec,) = call(capsys, monkeypatch, ["check", "triangle", "-"], stdin=text)
    assert code == 1 and rec["triangle"] == "0,1,2"


def test_gen_and_gallai_cover(capsys, monkeypatch, tmp_path):
    path = tmp_path / "g.ecg"
    assert call(capsys, monkeypatch, ["gen", "random-gallai", "--n", "25", "--alpha", "2", "--seed", "4", "-o", str(path)])[0] == 0
    G = parse_ecg(path.read_text())
    assert G.num_vertices == 25
    code, _, (rec,) = call(capsys, monkeypatch, ["gallai", "cover", str(path)])
    assert code == 0 and int(rec["parts"]) <= 5 and rec["certificate"] == "verified"
    code, _, (rec,) = call(capsys, monkeypatch, ["check", "largecomp", str(path)])
    assert code == 0 and rec["holds"] == "True"


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "pentagon", "--t", "2"],
        ["gen", "random-mpd", "--t", "4", "--class-size", "2", "--seed", "1"],
        ["gen", "random-bipartite", "--n", "4"],
        ["gen", "random-digraph", "--n", "6", "--p", "0.5"],
    ],
)
def test_gen_outputs_parse(capsys, monkeypatch, argv):
    code, out, _ = call(capsys, monkeypatch, argv)
    assert code == 0
    parse_mpd(out)


def test_invalid_input_exit_codes(capsys, monkeypatch, tmp_path):
    assert call(capsys, monkeypatch, ["oracle", "beta", str(tmp_path / "missing.mpd")])[0] == 2
    assert call(capsys, monkeypatch, ["oracle", "beta", "-"], stdin="mpd 2\n")[0] == 2
    assert call(capsys, monkeypatch, ["oracle", "beta", "-"], stdin="mpd 1 2\nclass 0 0 1\narc 0 1\n")[0] == 2
    assert call(capsys, monkeypatch, ["oracle", "gamma0", "-"], stdin="mpd 1 1\nclass 0 0\n")[0] == 2
    with pytest.raises(SystemExit) as err:
        run(["solve", "nonsense", "-"])
    assert err.value.code == 2


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("TRIDOM_BUDGET", "3")
    text = serialize_mpd(gen_pentagons(1))
    code, _, (rec,) = call(capsys, monkeypatch, ["oracle", "gamma", "-"], stdin=text)
    assert code == 2 and rec["error"] == "BudgetExceeded"


def test_threads_flag_is_accepted(capsys, monkeypatch, pentagon_file):
    assert call(capsys, monkeypatch, ["--threads", "4", "oracle", "alpha", pentagon_file])[0] == 0


def test_bench_suite(capsys, monkeypatch):
    code, _, recs = call(capsys, monkeypatch, ["bench", "suite", "--seeds", "2"])
    assert code == 0
    assert {r["command"] for r in recs} >= {"bench.pentagon", "bench.dk", "bench.beta2"}
    assert all(r["status"] == "ok" for r in recs)
