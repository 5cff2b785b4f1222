import json

import numpy as np

from threshq.cli import main
from threshq.gram import construct_library, gram
from threshq.spectra import save_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bounds_exact4(capsys):
    code, out, _ = run(capsys, "bounds", "0001001")
    assert code == 0
    assert "q = 4 (exact)" in out


def test_bounds_k2(capsys):
    code, out, _ = run(capsys, "bounds", "01")
    assert code == 0 and "q = 2 (exact)" in out


def test_bounds_interval(capsys):
    code, out, _ = run(capsys, "bounds", "01001001")
    assert code == 0 and "q in [3, 4]" in out


def test_bounds_parse_error(capsys):
    code, _, err = run(capsys, "bounds", "10")
    assert code == 2 and "parse error" in err


def test_bounds_disconnected(capsys):
    code, _, err = run(capsys, "bounds", "010")
    assert code == 2 and "not connected" in err


def test_bounds_json_round_trip(capsys):
    code, out, _ = run(capsys, "bounds", "0101011", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["exact"] is True and d["lower"] == 2
    assert json.loads(json.dumps(d)) == d


def test_table7(capsys):
    code, out, _ = run(capsys, "table", "7")
    assert code == 0 and "31/31 match" in out


def test_table8_json(capsys):
    code, out, _ = run(capsys, "table", "8", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["matched"] == 64 and d["total"] == 64
    assert json.loads(json.dumps(d)) == d


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "7", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "index,sequence,lower,upper,exact,cert-kinds"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "4")
    assert code == 0
    assert "4 sequences" in out
    assert out.splitlines()[:4] == ["0001", "0011", "0101", "0111"]


def test_certify_pass_and_fail(tmp_path, capsys):
    A = gram(construct_library("prop37"))
    p = tmp_path / "prop37.mat"
    save_matrix(p, A)
    code, out, _ = run(capsys, "certify", "00101011", "2", str(p))
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "certify", "00101011", "3", str(p))
    assert code == 1 and "FAIL" in out
    # wrong pattern
    code, out, _ = run(capsys, "certify", "00110011", "2", str(p))
    assert code == 1


def test_certify_factor_file(tmp_path, capsys):
    from threshq.spectra import save_factor

    f = construct_library("prop37")
    p = tmp_path / "prop37_factor.mat"
    save_factor(p, f.M, "prop37")
    code, out, _ = run(capsys, "certify", "00101011", "2", str(p))
    assert code == 0 and "PASS" in out


def test_ssp_command(tmp_path, capsys):
    p = tmp_path / "eye.mat"
    save_matrix(p, np.eye(3))
    code, out, _ = run(capsys, "ssp", str(p))
    assert code == 0 and "SSP: False" in out and "nullity 3" in out


def test_missing_file(capsys):
    code, _, err = run(capsys, "ssp", "/nonexistent/path.mat")
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert main(["bogus-command"]) == 2
    assert main(["table", "9"]) == 2


def test_console_script_entry_point():
    import subprocess
    import sys

    out = subprocess.run([sys.executable, "-m", "threshq.cli", "bounds", "0101011"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "q = 2 (exact)" in out.stdout
