import subprocess
import sys

import pytest

from thom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_homology_point_over_commuting_pair(capsys):
    code, out, _ = run(capsys, "homology", "--alphabet", "A1", "--chain", "-1")
    assert code == 0
    assert out.splitlines() == ["H_0 = Z", "H_1 = Z^2", "H_2 = Z"]


def test_homology_machine_format(capsys):
    code, out, _ = run(capsys, "homology", "--alphabet", "A2", "--chain", "0", "--format", "machine")
    assert out.splitlines() == ["deg=0 group=Z", "deg=1 group=Z^3"]


def test_homology_rp2_torsion(capsys):
    _, out, _ = run(capsys, "homology", "--alphabet", "RP2", "--chain", "0")
    assert "Z/2" in out.splitlines()[2]


def test_homology_from_files(tmp_path, capsys):
    alpha = tmp_path / "a1.txt"
    alpha.write_text("generators: a b\ncommute: a b\n")
    action = tmp_path / "x.txt"
    action.write_text("elements: x0 *\nbase: *\nact x0 a *\nact x0 b *\n")
    code, out, _ = run(capsys, "homology", "--alphabet", str(alpha), "--action", str(action),
                       "--variant", "reduced")
    assert code == 0
    assert out.splitlines() == ["H_0 = 0", "H_1 = 0", "H_2 = 0"]


def test_clique_homology(capsys):
    _, out, _ = run(capsys, "clique-homology", "--alphabet", "A1")
    assert all(line.endswith("= 0") for line in out.splitlines())
    _, out, _ = run(capsys, "clique-homology", "--alphabet", "A2")
    assert out.splitlines() == ["H~_0 = Z"]
    _, out, _ = run(capsys, "clique-homology", "--alphabet", "C4")
    assert "H~_1 = Z" in out.splitlines()


def test_verify_thm1_battery_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "thm1", "--battery", "--format", "machine")
    assert code == 0
    assert out.count("pass=1") == 6 * 4 * 3 and "pass=0" not in out


def test_verify_thm3_reports_mismatch_but_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "thm3", "--alphabet", "A2", "--format", "machine")
    assert code == 0
    assert "THM3 alpha=A2 n=0 k=1 lhs=Z^3 rhs=Z^2 pass=0" in out.splitlines()


def test_verify_thm3_components(tmp_path, capsys):
    a = tmp_path / "ea.txt"
    a.write_text("generators: a\n")
    b = tmp_path / "eb.txt"
    b.write_text("generators: b\n")
    code, out, _ = run(capsys, "verify", "thm3", "--component", str(a), "--component", str(b),
                       "--format", "machine")
    assert code == 0 and "lhs=Z^3 rhs=Z^2 pass=0" in out


def test_verify_failing_assertion_exits_one(monkeypatch, capsys):
    from thom import verify

    real = verify.check_thm1

    def fake(alpha, m, kmax, name=None):
        rep = real(alpha, m, kmax, name)
        rep.records[0] = verify.DegreeRecord(1, rep.records[0].lhs, verify.ZERO, False)
        return rep

    monkeypatch.setattr(verify, "check_thm1", fake)
    code, _, _ = run(capsys, "verify", "thm1", "--alphabet", "A1", "--m", "0")
    assert code == 1


def test_corrupt_alphabet_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("generators: a b\ncommute: a a\n")
    code, _, err = run(capsys, "verify", "thm1", "--alphabet", str(bad))
    assert code == 2 and "SelfPair" in err
    code, _, err = run(capsys, "homology", "--alphabet", "no/such/file", "--chain", "0")
    assert code == 2


def test_example_and_subdivide(tmp_path, capsys):
    rp2 = tmp_path / "rp2.txt"
    assert main(["example", "rp2_min", "--out", str(rp2)]) == 0
    sd = tmp_path / "sd.txt"
    assert main(["subdivide", str(rp2), "--out", str(sd)]) == 0
    first = sd.read_text().splitlines()[0]
    assert len(first.split()) - 1 == 31
    alpha = tmp_path / "sd_alpha.txt"
    assert main(["subdivide", str(rp2), "--as-alphabet", "--out", str(alpha)]) == 0
    _, out, _ = run(capsys, "homology", "--alphabet", str(alpha), "--chain", "0")
    assert "Z/2" in out


def test_example_two_points(capsys):
    _, out, _ = run(capsys, "example", "two_points")
    assert out.splitlines() == ["vertices: 1 2"]


def test_subdivide_empty_file_exits_two(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    code, _, _ = run(capsys, "subdivide", str(empty))
    assert code == 2
    empty.write_text("vertices:\n")
    code, _, err = run(capsys, "subdivide", str(empty))
    assert code == 2 and "EmptyComplex" in err


def test_dd_check(capsys, tmp_path):
    code, out, _ = run(capsys, "dd-check", "--alphabet", "K4", "--chain", "2")
    assert code == 0 and "pass" in out
    action = tmp_path / "bad.txt"
    action.write_text("elements: x0 x1 *\nbase: *\nact x0 a x1\nact x0 b x1\nact x1 a x1\nact x1 b *\n")
    code, _, err = run(capsys, "dd-check", "--alphabet", "A1", "--action", str(action))
    assert code == 2 and "CommutationViolation" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "thom", "homology", "--alphabet", "A2", "--chain", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[1] == "H_1 = Z^3"
