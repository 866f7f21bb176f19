import io
import subprocess
import sys

import pytest

from slchord.cli import run_cli

SINGLE = "strands 2\nstrand 1: a\nstrand 2: a\n"
CROSSING = "strands 2\nstrand 1: a b\nstrand 2: b a\n"
COLLISION_MATRIX = "10000\n11000\n11100\n01110\n01101\n"


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run_cli(argv, out)
    return code, out.getvalue()


@pytest.fixture
def sld(tmp_path):
    def make(text, name="d.sld"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make


def test_conway_from_stdin(monkeypatch):
    assert run(["conway", "-"], SINGLE, monkeypatch) == (0, "1\n")


def test_verify_conway2():
    code, out = run(["verify", "--suite", "conway2", "--strands", "2", "--max-chords", "4"])
    assert code == 0
    assert out.splitlines()[0] == "suite=conway2 k<=2 n<=4 cases=1068 failures=0"


def test_validate_bad_file(sld, capsys):
    code, _ = run(["validate", sld("strands 1\nstrand 1: a b a\n")])
    assert code == 2
    assert "chord b" in capsys.readouterr().err


def test_validate_ok(sld):
    code, out = run(["validate", sld(CROSSING)])
    assert code == 0 and out.startswith("ok strands=2 chords=2 components=1")


def test_graph_and_dot(sld):
    path = sld(CROSSING)
    assert run(["graph", path]) == (0, "vertex a {1,2}\nvertex b {1,2}\nedge a b both\n")
    code, out = run(["graph", "--dot", path])
    assert code == 0 and out.startswith("digraph") and "dir=none" in out


def test_adj(sld):
    assert run(["adj", sld(CROSSING)]) == (0, "11\n11\nrank=1 det=0\n")
    assert run(["adj", sld("strands 2\n")]) == (0, "rank=0 det=1\n")


def test_homfly(sld):
    code, out = run(["homfly", sld(CROSSING)])
    assert code == 0 and out.splitlines()[0] == "a^2 b^1"
    assert run(["homfly", sld(SINGLE)])[1].splitlines()[0] == "a^1"
    assert run(["homfly", sld("strands 1\n")])[1].splitlines()[0] == "1"


def test_normal_form_trace(sld):
    code, out = run(["normal-form", "--trace", sld(CROSSING)])
    lines = out.splitlines()
    assert code == 0
    assert "path=1,2 bridges=1 m1=1 m2=0" in lines
    assert lines[lines.index("moves=1") + 1].startswith("slide ")


def test_product_and_coproduct(sld):
    code, out = run(["product", sld(SINGLE, "a.sld"), sld(SINGLE, "b.sld")])
    assert (code, out) == (0, "strands 2\nstrand 1: c1 c2\nstrand 2: c1 c2\n")
    code, out = run(["coproduct", sld(SINGLE)])
    assert code == 0 and len(out.splitlines()) == 2 and all(l.startswith("+1·") for l in out.splitlines())


def test_enumerate():
    code, out = run(["enumerate", "--strands", "2", "--chords", "2"])
    assert code == 0 and len(out.splitlines()) == 15
    code, out = run(["enumerate", "--strands", "2", "--chords", "2", "--connected"])
    assert code == 0 and 0 < len(out.splitlines()) < 15


def test_collide(sld):
    code, out = run(["collide", "--strands", "4", "--chords", "5", "--matrix", sld(COLLISION_MATRIX, "m.txt")])
    assert code == 0 and "collision=yes" in out
    code, out = run(["collide", "--strands", "2", "--chords", "3"])
    assert code == 0 and "collision=no" in out
    code, _ = run(["collide", "--strands", "4", "--chords", "4", "--matrix", sld(COLLISION_MATRIX, "m.txt")])
    assert code == 2


def test_verify_failure_exit_status(monkeypatch):
    from slchord import harness
    from slchord.harness import SuiteReport

    def broken(k, n):
        rep = SuiteReport("conway2", k, n, cases=1)
        rep.fail("strands 1\nstrand 1:", "forced")
        return rep

    monkeypatch.setitem(harness.SUITES, "conway2", (broken, (2, 4)))
    code, out = run(["verify", "--suite", "conway2"])
    assert code == 1 and "failures=1" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["conway", "/no/such/file"],
        ["verify", "--suite", "nope"],
        ["enumerate", "--strands", "0", "--chords", "1"],
    ],
)
def test_input_errors(argv):
    assert run(argv)[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "slchord", "conway", "-"], input=SINGLE, capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "1\n"


def test_output_is_deterministic():
    a = run(["verify", "--suite", "slides", "--strands", "2", "--max-chords", "2"])
    b = run(["verify", "--suite", "slides", "--strands", "2", "--max-chords", "2"])
    assert a == b
