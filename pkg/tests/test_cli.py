import json
import subprocess
import sys

import pytest

from boolfn.cli import main
from boolfn.commlb import BitMatrix


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_measures_parity_json(capsys):
    code, out, err = run_cli(capsys, "measures", "fam:parity:n=4")
    assert code == 0 and err == ""
    data = json.loads(out)
    assert data["measures"]["s"] == 4
    assert data["measures"]["deg_2"] == 1
    assert data["function"] == "tt:4:6996"


def test_measures_tt_source(capsys):
    code, out, _ = run_cli(capsys, "measures", "tt:2:8")
    assert code == 0
    data = json.loads(out)
    assert data["measures"] == {
        "s": 2, "bs": 2, "C": 2, "alt": 1, "salt": 1,
        "deg": 2, "deg_2": 2, "deg_3": 2, "sparsity": 4, "DT": 2,
    }


def test_measures_csv_row(capsys):
    code, out, _ = run_cli(capsys, "measures", "fam:maj:n=5", "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.startswith("function,arity,s,bs,")
    cells = row.split(",")
    assert cells[1] == "5" and cells[2] == "3"  # arity, sensitivity


def test_measures_pointwise_flag(capsys):
    code, out, _ = run_cli(capsys, "measures", "fam:or:n=3", "--at", "000")
    data = json.loads(out)
    assert code == 0
    assert data["measures"]["s_at"] == 3
    assert data["measures"]["bs_at"] == 3
    assert data["measures"]["C_at"] == 3


def test_measures_from_file(tmp_path, capsys):
    src = tmp_path / "fn.txt"
    src.write_text("anf:2:x1+x2\n")
    code, out, _ = run_cli(capsys, "measures", str(src))
    assert code == 0
    assert json.loads(out)["function"] == "tt:2:6"


def test_transform_bs2s(capsys):
    code, out, _ = run_cli(capsys, "transform", "bs2s", "fam:or:n=3", "--at", "000")
    assert code == 0
    data = json.loads(out)
    assert data["map"]["columns"] == ["100", "010", "001"]
    assert data["certificate"]["s_g_at_zero"] == 3
    assert data["certificate"]["equality_holds"] is True


def test_transform_bs2s_needs_point(capsys):
    code, _, err = run_cli(capsys, "transform", "bs2s", "fam:or:n=3")
    assert code == 2 and "needs --at" in err


def test_transform_alt2s_text(capsys):
    code, out, _ = run_cli(capsys, "transform", "alt2s", "fam:tree:k=3", "--format", "text")
    assert code == 0
    assert "alt <= 2*s(g,0)+1: 7 <=" in out
    assert "invertible: True" in out


def test_transform_sherstov(capsys):
    code, out, _ = run_cli(capsys, "transform", "sherstov", "fam:and:n=2")
    data = json.loads(out)
    assert code == 0
    assert data["certificate"]["z"] == "11"
    assert data["certificate"]["factor4_holds"] is True


def test_check_exhaustive(capsys):
    code, out, _ = run_cli(capsys, "check", "exhaustive:2", "--format", "text")
    assert code == 0
    assert "ok=True" in out


def test_check_function(capsys):
    code, out, _ = run_cli(capsys, "check", "function", "fam:rubinstein:m=3,n=3")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_check_family(capsys):
    code, out, _ = run_cli(capsys, "check", "family", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "name,kind,verdict,left,right,statement"
    assert "fails" not in {line.split(",")[2] for line in out.splitlines()[1:]}


def test_check_search_suite(capsys):
    code, out, _ = run_cli(capsys, "check", "search", "--n", "2",
                           "--statistic", "s_over_sqrt_sparsity")
    assert code == 0
    data = json.loads(out)
    assert data[0]["value"] == 2.0


def test_comm_and2(capsys):
    code, out, _ = run_cli(capsys, "comm", "fam:and:n=2")
    data = json.loads(out)
    assert code == 0
    assert data["certificate"]["k"] == 1
    assert data["certificate"]["w"] == ["00", "11"]
    assert data["det_upper_bound"] == 4


def test_comm_gip_bound_summary(capsys):
    code, out, _ = run_cli(capsys, "comm", "fam:gip:n=2,k=2", "--primes", "2")
    data = json.loads(out)
    assert code == 0
    summary = data["bound_summary"]
    assert summary["per_prime"]["2"]["deg_p"] == 2
    assert summary["per_prime"]["2"]["dt_le_bs0_degp_sq"]["holds"] is True


def test_comm_export_matrix(tmp_path, capsys):
    pbm = tmp_path / "m.pbm"
    code, out, _ = run_cli(capsys, "comm", "fam:and:n=1", "--export-matrix", str(pbm))
    assert code == 0
    assert pbm.read_text() == "P1\n2 2\n0 0\n0 1\n"
    raw = tmp_path / "m.bin"
    code, out, _ = run_cli(capsys, "comm", "fam:and:n=1", "--export-matrix", str(raw))
    assert code == 0
    mat = BitMatrix.from_raw(raw.read_bytes())
    assert mat.n == 1 and mat.entry(1, 1) == 1


def test_search_deterministic(capsys):
    args = ("search", "--n", "8", "--statistic", "s_over_sqrt_sparsity",
            "--budget", "200", "--seed", "1")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_measures_over_ceiling_skips_but_succeeds(capsys):
    code, out, _ = run_cli(capsys, "measures", "fam:rubinstein:m=4,n=4")
    assert code == 0
    data = json.loads(out)
    skipped = {s["measure"] for s in data["skipped"]}
    assert skipped == {"bs", "C", "salt", "DT"}
    assert data["measures"]["alt"] == 8


def test_usage_errors(capsys):
    assert run_cli(capsys, "measures", "garbage")[0] == 2
    assert run_cli(capsys, "measures", "tt:2:99")[0] == 2
    assert run_cli(capsys, "measures", "fam:nope:n=2")[0] == 2
    assert run_cli(capsys, "check", "mystery")[0] == 2
    assert run_cli(capsys, "measures", "fam:parity:n=4", "--primes", "x")[0] == 2


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_stdout_is_pure_payload(capsys):
    code, out, err = run_cli(capsys, "measures", "fam:parity:n=3")
    assert code == 0 and err == ""
    json.loads(out)  # parses as-is


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "boolfn.cli", "measures", "fam:maj:n=3", "--format", "csv"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1].startswith("tt:3:e8,3,2,2,2,1,")
