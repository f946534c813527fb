import json

import pytest

from casoratian.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sets(capsys):
    code, out, _ = run(capsys, "sets", "--F", "{1,2,3}")
    assert code == 0
    assert out.split() == ["F={1,2,3}", "I={3}", "w=3", "s=4", "down={}", "V=2"]


def test_sets_json(capsys):
    code, out, _ = run(capsys, "sets", "--F", "{2,5}", "--json")
    data = json.loads(out)
    assert data["I"] == "{1,2,4,5}" and data["w"] == 6


def test_poly_hermite(capsys):
    code, out, _ = run(capsys, "poly", "hermite", "--n", "2")
    assert code == 0 and out.strip() == "4x^2-2"


def test_poly_charlier_complex(capsys):
    code, out, _ = run(capsys, "poly", "charlier", "--n", "1", "--a", "1+i")
    assert out.strip() == "x+(-1-i)"


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "charlier", "--F", "{1,2}", "--a", "2")
    assert code == 0 and "pass" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "hahn", "--F", "{1}", "--F2", "{2}", "--F3", "{1}",
                       "--alpha", "1/3", "--beta", "1/5", "--N", "17/2", "--json")
    data = json.loads(out)
    assert code == 0
    assert set(data) >= {"theorem", "inputs", "status", "lhs", "rhs", "notes", "version"}


def test_verify_skipped_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "meixner", "--F", "{1}", "--a", "3/7", "--c", "5/3")
    assert code == 0 and "skipped-degenerate" in out


def test_caso(capsys):
    code, out, _ = run(capsys, "caso", "charlier", "--F", "{1,2}", "--a", "2")
    assert out.splitlines()[:2] == ["1/2*x^2-3/2*x+2", "degree: 2"]


def test_caso_hahn_json(capsys):
    code, out, _ = run(capsys, "caso", "hahn", "--F", "{1}", "--F2", "{1}", "--F3", "{1}",
                       "--alpha", "1/3", "--beta", "1/5", "--N", "17/2", "--json")
    data = json.loads(out)
    assert data["degree"] == 3 and data["degenerate"] is False


def test_sweep_with_grid(tmp_path, capsys):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps([{"a": "2"}, {"a": "-3/2"}]))
    code, out, _ = run(capsys, "sweep", "charlier", "--max-elem", "3", "--max-size", "2", "--grid", str(grid))
    assert code == 0 and "pass=20" in out


def test_christoffel(capsys):
    code, out, _ = run(capsys, "christoffel", "charlier", "--F", "{1,2}", "--a", "2", "--n-max", "4")
    assert code == 0 and "christoffel:ratio: pass" in out


def test_limits(capsys):
    code, out, _ = run(capsys, "limits", "charlier-hermite", "--scales", "10,100,1000,10000")
    assert code == 0


def test_identities(capsys):
    code, out, _ = run(capsys, "identities", "meixner", "--a", "3/7", "--c", "5/3", "--n-max", "4")
    assert code == 0


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "hermite", "--F", "{1,2}", "--json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["status"] == "pass"


@pytest.mark.parametrize("argv", [
    ["verify", "nosuch", "--F", "{1}"],
    ["sets", "--F", "{1,x}"],
    ["poly", "charlier", "--n", "2", "--a", "abc"],
    ["frobnicate"],
    ["verify", "charlier", "--F", "{1}"],
    ["verify", "charlier", "--F", "{1}", "--F2", "{2}", "--a", "2"],
    ["sweep", "charlier", "--max-elem", "2", "--max-size", "1", "--grid", "/nonexistent.json"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_verification_failure_exits_1(monkeypatch, capsys):
    import casoratian.verify as V
    from casoratian.exact_core import Polynomial

    real = V.build_sides
    monkeypatch.setattr(V, "build_sides", lambda t, s, p: V.Sides(real(t, s, p).lhs, Polynomial([7])))
    code, out, _ = run(capsys, "verify", "charlier", "--F", "{1,2}", "--a", "2")
    assert code == 1 and "fail" in out


def test_internal_inconsistency_exits_3(monkeypatch, capsys):
    import casoratian.cli as cli
    from casoratian.errors import InternalInconsistency

    def boom(*a, **k):
        raise InternalInconsistency("two routes disagree")

    monkeypatch.setattr(cli, "verify_invariance", boom)
    code, _, err = run(capsys, "verify", "charlier", "--F", "{1,2}", "--a", "2")
    assert code == 3 and "inconsistency" in err
