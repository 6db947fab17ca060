import json
import subprocess
import sys

import pytest

from lucasatoms import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_atom_golden(capsys):
    code, out, err = run_cli(capsys, "atom", "6")
    assert (code, out, err) == (0, "s^2 + 3*t\n", "")


def test_atom_unit_golden(capsys):
    code, out, _ = run_cli(capsys, "atom", "1")
    assert code == 0 and out == "1\n"


def test_atom_route_and_eval(capsys):
    code, out, _ = run_cli(capsys, "atom", "8", "--route", "sym", "--eval", "2", "2")
    assert code == 0
    assert out == "s^4 + 4*s^2*t + 2*t^2\nat s=2, t=2: 56\n"


def test_lucas_and_companion_golden(capsys):
    code, out, _ = run_cli(capsys, "lucas", "6")
    assert code == 0 and out == "s^5 + 4*s^3*t + 3*s*t^2\n"
    code, out, _ = run_cli(capsys, "companion", "4", "--eval", "1", "1")
    assert code == 0 and out == "s^4 + 4*s^2*t + 2*t^2\nat s=1, t=1: 7\n"


def test_cyclotomic_golden(capsys):
    code, out, _ = run_cli(capsys, "cyclotomic", "12")
    assert code == 0 and out == "q^4 - q^2 + 1\n"


def test_val_method_all_golden(capsys):
    code, out, _ = run_cli(
        capsys, "val", "--p", "2", "--s", "1", "--t", "1", "--n", "6", "--method", "all"
    )
    assert code == 0
    assert out == "closed=2 mobius=2 oracle=2\n"


def test_val_single_method(capsys):
    code, out, _ = run_cli(
        capsys, "val", "--p", "5", "--s", "1", "--t", "1", "--n", "25",
        "--method", "oracle",
    )
    assert code == 0 and out == "oracle=1\n"


def test_val_disagreement_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "vp_atom_mobius", lambda p, params, n: 99)
    code, out, err = run_cli(
        capsys, "val", "--p", "2", "--s", "1", "--t", "1", "--n", "6"
    )
    assert code == 3
    assert out == ""
    assert "disagree" in err


def test_domain_error_exits_1(capsys):
    code, out, err = run_cli(capsys, "atom", "0")
    assert code == 1
    assert out == ""
    assert err.startswith("error:") and err.count("\n") == 1


def test_usage_error_exits_2(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2
    assert run_cli(capsys, "atom")[0] == 2
    assert run_cli(capsys, "atom", "6", "--route", "bogus")[0] == 2


def test_json_envelope_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "--json", "atom", "6", "--eval", "1", "1")
    assert code == 0
    assert out.count("\n") == 1  # exactly one object on stdout
    envelope = json.loads(out)
    assert list(envelope) == ["command", "inputs", "result", "warnings"]
    assert envelope["command"] == "atom"
    assert envelope["result"]["polynomial"] == "s^2 + 3*t"
    assert envelope["result"]["eval"] == {"s": 1, "t": 1, "value": 4}
    assert envelope["warnings"] == []
    assert json.dumps(envelope) + "\n" == out  # byte-identical re-render


def test_json_val_payload(capsys):
    code, out, _ = run_cli(
        capsys, "--json", "val", "--p", "2", "--s", "2", "--t", "2", "--n", "4"
    )
    assert code == 0
    envelope = json.loads(out)
    assert envelope["result"]["values"] == {"closed": 3, "mobius": 3, "oracle": 3}
    assert json.dumps(envelope) + "\n" == out


def test_decompose_output(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--num", "6", "--den", "2,3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "polynomial: true"
    assert "d=6: a=1 b=0" in lines
    assert lines[-1] == "quotient: 6^1"

    code, out, _ = run_cli(capsys, "--json", "decompose", "--num", "4", "--den", "3")
    envelope = json.loads(out)
    assert envelope["result"]["is_polynomial"] is False
    assert envelope["result"]["quotient_exponents"] is None


def test_lucanomial_output(capsys):
    code, out, _ = run_cli(capsys, "lucanomial", "6", "3", "--eval", "1", "1")
    assert code == 0
    assert out.splitlines()[-1] == "at s=1, t=1: 60"


def test_rank_and_classify_output(capsys):
    code, out, _ = run_cli(capsys, "rank", "--p", "7", "--s", "1", "--t", "1")
    assert code == 0 and out == "rho=8 divides_bound=8\n"
    code, out, _ = run_cli(capsys, "rank", "--p", "3", "--s", "1", "--t", "3")
    assert code == 0 and out == "rho=undefined divides_bound=-\n"
    code, out, _ = run_cli(capsys, "--json", "classify", "--p", "3", "--s", "3", "--t", "3")
    envelope = json.loads(out)
    assert envelope["result"]["regime"] == "b-eq-2a-minus-1-p3"
    assert envelope["result"]["lambda"] == 0  # v_3(s'^2 + t') = v_3(2)


def test_scan_output(capsys):
    code, out, _ = run_cli(
        capsys, "scan", "--p", "2", "--s", "1", "--t", "1", "--limit", "200"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "hits: 3 6 12 24 48 96 192"
    assert lines[1] == "matches_closed_form: true"
    assert lines[2] == "ap_expressible: false"


def test_fit_output(capsys):
    code, out, _ = run_cli(
        capsys, "--json", "fit", "--s", "1", "--t", "1", "--order", "2", "--degree", "2",
        "--from", "10", "--to", "60",
    )
    assert code == 0
    envelope = json.loads(out)
    assert envelope["result"]["status"] == "refuted"
    assert envelope["result"]["witness_end"] is not None

    code, out, _ = run_cli(capsys, "fit", "--s", "1", "--t", "0", "--order", "1", "--degree", "1")
    assert code == 0
    assert out.splitlines()[0].startswith("fit: dimension=")


def test_tzero_output(capsys):
    code, out, _ = run_cli(capsys, "tzero", "--s", "2", "--limit", "8")
    assert code == 0
    assert out.splitlines() == ["1 1", "2 2", "3 4", "4 4", "5 16", "6 4", "7 64", "8 16"]


def test_primesearch_output(capsys):
    code, out, _ = run_cli(capsys, "--json", "primesearch", "6", "--bound", "2")
    assert code == 0
    envelope = json.loads(out)
    assert [1, 2, 7] in envelope["result"]["hits"]
    assert envelope["warnings"] == []


def test_primesearch_probabilistic_warning(capsys, monkeypatch):
    # force the deterministic threshold below the found values
    monkeypatch.setattr(cli, "DETERMINISTIC_PRIMALITY_BOUND", 5)
    code, out, _ = run_cli(capsys, "--json", "primesearch", "6", "--bound", "2")
    assert code == 0
    envelope = json.loads(out)
    assert any("probabilistic" in w for w in envelope["warnings"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lucasatoms", "atom", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "s^2 + 2*t\n"
