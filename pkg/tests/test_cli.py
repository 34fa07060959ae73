import io
import json

import pytest

from cubegrowth import __version__
from cubegrowth.cli import run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def _last_error(capsys):
    lines = capsys.readouterr().err.splitlines()
    return lines[-1] if lines else ""


def test_series_genus2():
    code, out = invoke("series", "--input", "genus2.json", "--from", "x", "--to", "x", "--vars", "single")
    assert code == 0
    assert out == "(1-2t^2+t^4)/(1-14t^2+t^4)\n"


def test_series_json_is_deterministic():
    argv = ("series", "--input", "fig1.json", "--from", "x", "--to", "y", "--format", "json")
    first, second = invoke(*argv), invoke(*argv)
    assert first == second
    payload = json.loads(first[1])
    assert payload["series"] == "(t+t^2)/(1-t)"
    assert payload["rational"]["vars"] == ["t"]


def test_reciprocity_verdict_genus2():
    code, out = invoke("reciprocity", "--input", "genus2.json", "--from", "x", "--to", "y", "--vars", "single")
    assert code == 0
    assert out.splitlines()[-1] == "Eulerian, n=2; reciprocity HOLDS (sign +1)"
    assert out.startswith("G(t)   = (3t+3t^3)/(1-14t^2+t^4)\n")


def test_reciprocity_negative_control_exits_zero():
    code, out = invoke("reciprocity", "--input", "fig1.json", "--from", "x", "--to", "x")
    assert code == 0
    assert out.splitlines()[-1] == "not Eulerian, n=1; reciprocity does not hold (sign -1)"


def test_validate_broken_file(capsys):
    code, out = invoke("validate", "--input", "broken.json")
    assert code == 1
    assert out == ""
    assert _last_error(capsys).startswith("CubicalIdentityViolation:")


def test_validate_reports(capsys):
    code, out = invoke("validate", "--input", "fig1.json")
    assert code == 0
    assert out.splitlines()[0] == "complex 'fig1': NPC validation PASSED"
    code, out = invoke("validate", "--input", "bundled:flagfail")
    assert code == 1
    assert "NPC validation FAILED" in out
    assert "e1.0, e2.0, e3.0" in out


@pytest.mark.parametrize("argv", [
    ("series", "--input", "fig1.json", "--from", "x"),
    ("enumerate", "--input", "fig1.json", "--to", "x"),
    ("series", "--input", "fig1.json", "--from", "x", "--to", "x", "--format", "dot"),
    ("reciprocity", "--input", "fig1.json", "--from", "x", "--to", "x", "--vars", "per-diagonal"),
    ("expand", "--input", "fig1.json", "--from", "x", "--to", "x", "--max-degree", "-1"),
    ("series", "--input", "fig1.json", "--from", "x", "--to", "x", "--colour", "red"),
    ("series", "--input", "fig1.json", "--from", "x", "--to", "x", "--vars", "per-cube"),
    ("transmogrify", "--input", "fig1.json"),
    (),
])
def test_usage_errors(argv, capsys):
    code, out = invoke(*argv)
    assert code == 2
    assert out == ""
    assert "error" in capsys.readouterr().err


def test_version(capsys):
    assert run(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_automaton_text_and_dot():
    code, out = invoke("automaton", "--input", "fig1.json")
    assert code == 0
    assert out.splitlines()[0] == "automaton 'fig1' (forward): 6 states, 10 transitions"
    assert out.splitlines()[1] == "Q+:"
    code, out = invoke("automaton", "--input", "fig1.json", "--convention", "reverse")
    assert out.splitlines()[1] == "Q-:"
    code, dot = invoke("automaton", "--input", "fig1.json", "--format", "dot")
    assert code == 0
    assert dot.count("->") == 10
    assert dot.count("doublecircle") == 2


def test_automaton_json():
    code, out = invoke("automaton", "--input", "fig1.json", "--format", "json")
    payload = json.loads(out)
    assert payload["states"] == ["x", "y", "a", "a*", "b", "b*"]
    assert ["b", "b", "b"] in payload["transitions"]
    assert len(payload["transitions"]) == 10


def test_expand():
    code, out = invoke("expand", "--input", "genus2.json", "--from", "x", "--to", "x", "--max-degree", "6")
    assert code == 0
    assert out == "[1, 0, 12, 0, 168, 0, 2340]\n"
    code, out = invoke("expand", "--input", "fig1.json", "--from", "y", "--to", "y",
                       "--vars", "per-hyperplane", "--max-degree", "2")
    assert out == "1+2*h2+2*h2^2\n"


def test_enumerate():
    code, out = invoke("enumerate", "--input", "fig1.json", "--from", "x", "--to", "x", "--max-len", "3")
    assert code == 0
    assert out == "ε\na b a*\na b* a*\n"
    code, out = invoke("enumerate", "--input", "bundled:square", "--from", "00", "--to", "11",
                       "--format", "json")
    assert json.loads(out) == [["xx"]]


def test_info_json():
    code, out = invoke("info", "--input", "genus2.json", "--format", "json")
    assert code == 0
    info = json.loads(out)
    assert info["cubes"] == {"0": 4, "1": 12, "2": 6}
    assert info["diagonals"] == 52
    assert info["trivial_diagonals"] == 4
    assert len(info["hyperplane_classes"]) == 6
    assert info["euler_characteristic"] == -2
    assert info["eulerian"] is True
    assert info["notes"] == [
        "hyperplane classes: union-find finds 6, the reference construction "
        "of 'genus2' lists 12 (the number of edges, 2 per class)"
    ]


def test_info_text():
    code, out = invoke("info", "--input", "fig1.json")
    assert code == 0
    assert "  diagonals: 6 (2 trivial)" in out.splitlines()
    assert not any(line.startswith("  note:") for line in out.splitlines())
    assert out.splitlines()[-1] == "  Eulerian: no"


def test_verify_flag_failure():
    code, out = invoke("verify", "--input", "bundled:flagfail")
    assert code == 1
    assert "[FAIL] NPC validation" in out
    assert out.splitlines()[-1] == "verify: FAILED (remaining checks skipped)"


def test_verify_fig1():
    code, out = invoke("verify", "--input", "fig1.json", "--max-degree", "5")
    assert code == 0
    lines = out.splitlines()
    assert "[INFO] Eulerian: no (n=1)" in lines
    assert "[N/A] J·[*]·J·[*] = I" in lines
    assert "[PASS] Q = D0·J0" in lines
    assert lines[-1] == "verify: PASSED"


def test_verify_genus2():
    code, out = invoke("verify", "--input", "genus2.json", "--max-degree", "4")
    assert code == 0
    lines = out.splitlines()
    assert "[PASS] Eulerian: yes (n=2)" in lines
    assert any(line.startswith("[NOTE] hyperplane classes: union-find finds 6") for line in lines)
    assert not any(line.startswith(("[FAIL]", "[N/A]")) for line in lines)
    assert lines[-1] == "verify: PASSED"


def test_library_errors_exit_one(tmp_path, capsys):
    code, _ = invoke("info", "--input", str(tmp_path / "missing.json"))
    assert code == 1
    assert _last_error(capsys).startswith("MalformedDocument:")
    (tmp_path / "binary.json").write_bytes(b"\x80\x81\x82")
    code, _ = invoke("info", "--input", str(tmp_path / "binary.json"))
    assert code == 1
    assert _last_error(capsys).startswith("MalformedDocument:")
    code, _ = invoke("info", "--input", "bundled:torus")
    assert code == 1
    assert _last_error(capsys).startswith("KeyError:")
    code, _ = invoke("series", "--input", "fig1.json", "--from", "x", "--to", "q")
    assert code == 1
    assert _last_error(capsys).startswith("UnknownVertex:")
