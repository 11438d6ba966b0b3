import subprocess
import sys
from pathlib import Path

import pytest

from cartier.cli import main
from cartier.gf import format_element
from cartier.report import emit, parse

CURVES = Path(__file__).resolve().parent.parent / "curves"
F125_SPEC = CURVES / "f125_prologue.curve"
F27_SPEC = CURVES / "f27_pitfall.curve"
F3_SPEC = CURVES / "f3_supersingular_elliptic.curve"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, text):
    path = tmp_path / "c.curve"
    path.write_text(text)
    return path


def test_matrix_report(capsys, F125):
    code, out, _ = run(capsys, "matrix", F125_SPEC)
    assert code == 0
    assert "Cartier-Manin, tau-linear, left action" in out
    assert "Hasse-Witt, sigma-linear, left action" in out
    code, out, _ = run(capsys, "matrix", F125_SPEC, "--format", "machine")
    report = parse(out)
    a = F125.gen
    fmt = format_element
    assert report.matrices.Y == [[fmt(a**41), fmt(a**105)], [fmt(F125(2)), fmt(a**95)]]
    assert report.invariants is None and report.oracle is None


def test_missing_key_is_parse_error(capsys, tmp_path):
    path = write(tmp_path, "p = 5\ne = 1\nf = [0,1,0,1]\n")
    code, _, err = run(capsys, "matrix", path)
    assert code == 2
    assert "genus" in err


def test_unreadable_file_is_parse_error(capsys, tmp_path):
    code, _, err = run(capsys, "matrix", tmp_path / "nope.curve")
    assert code == 2


def test_even_characteristic_is_validation_error(capsys, tmp_path):
    path = write(tmp_path, "p = 2\ne = 1\ngenus = 1\nf = [0,1,0,1]\n")
    code, _, err = run(capsys, "matrix", path)
    assert code == 3
    assert "odd prime" in err and "line 1" in err


def test_line_anchored_validation(capsys, tmp_path):
    path = write(tmp_path, "p = 5\ne = 1\ngenus = 1\nf = [0,0,1,1]\n")
    code, _, err = run(capsys, "invariants", path)
    assert code == 3
    assert "line 4" in err and "squarefree" in err


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", F125_SPEC, "--format", "machine")
    inv = parse(out).invariants
    assert code == 0
    assert inv.p_rank == 0 and inv.is_superspecial is False and inv.l_mod_p == [1]
    code, out, _ = run(capsys, "invariants", F125_SPEC)
    assert "l_mod_p: 1\n" in out
    code, out, _ = run(capsys, "invariants", F27_SPEC)
    assert "l_mod_p: 1 + T^2\n" in out
    code, out, _ = run(capsys, "invariants", F3_SPEC, "--format", "machine")
    inv = parse(out).invariants
    assert inv.a_number == 1 and inv.is_superspecial is True


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", F125_SPEC, "--format", "machine")
    assert code == 0
    o = parse(out).oracle
    assert o.exact_l == [1, 0, 250, 0, 15625]
    assert o.l_mod_p_agrees and o.p_rank_agrees
    code, out, _ = run(capsys, "verify", F27_SPEC, "--format", "machine")
    assert code == 0
    o = parse(out).oracle
    assert o.exact_l == [1, 6, 52, 162, 729]
    assert o.functional_equation is True


def test_verify_bound(capsys):
    code, _, err = run(capsys, "verify", F125_SPEC, "--bound", "100")
    assert code == 4
    assert "bound" in err


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    import cartier.cli as cli
    import cartier.oracle as oracle

    class Wrong:
        coeffs = (1, 1, 52, 162, 729)

        def mod_p(self, p):
            from cartier.gf import FieldContext
            from cartier.poly import Polynomial
            return Polynomial(FieldContext(p), list(self.coeffs))

    monkeypatch.setattr(cli.oracle, "l_polynomial_exact", lambda X, bound: Wrong())
    code, _, err = run(capsys, "verify", F27_SPEC)
    assert code == 5
    assert "FAILED" in err


def test_pitfall(capsys):
    code, out, _ = run(capsys, "pitfall", F27_SPEC)
    assert code == 0
    assert "kappa(t) = charpoly(naive H_pi) = 1 + t + t^2" in out
    assert "= t^2 + t^4" in out
    assert out.rstrip().endswith("verdict: DIFFER")
    code, out, _ = run(capsys, "pitfall", F3_SPEC)
    assert out.rstrip().endswith("verdict: AGREE")
    # the F_125 curve shows the pitfall as well: naive kappa = t^2 + 2t predicts 5-rank 1
    code, out, _ = run(capsys, "pitfall", F125_SPEC)
    assert "2*t + t^2" in out and out.rstrip().endswith("verdict: DIFFER")


def test_invariants_never_emits_naive_product(capsys):
    _, out, _ = run(capsys, "invariants", F27_SPEC)
    assert "naive" not in out.lower()


@pytest.mark.parametrize("spec", [F125_SPEC, F27_SPEC, F3_SPEC], ids=lambda p: p.stem)
def test_machine_round_trip(capsys, spec):
    _, out, _ = run(capsys, "verify", spec, "--format", "machine", "--seed", "7")
    report = parse(out)
    assert emit(report) == out
    assert parse(emit(report)) == report


def test_seed_is_recorded(capsys):
    _, out, _ = run(capsys, "verify", F3_SPEC, "--format", "machine", "--seed", "123")
    assert parse(out).oracle.seed == 123


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cartier", "invariants", str(F3_SPEC)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "is_superspecial: true" in proc.stdout
