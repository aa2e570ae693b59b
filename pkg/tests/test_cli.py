import json

import pytest

from quadprime import cli
from quadprime.records import ClaimVerdict, FALSIFIED
from quadprime import ledger as ledger_mod


def test_sieve_summary(capsys):
    assert cli.main(["sieve", "--limit", "1000"]) == 0
    out = capsys.readouterr().out
    assert "primes 168" in out
    assert "largest_prime 997" in out
    assert "mertens 2" in out


def test_capacity_exit_code(capsys):
    assert cli.main(["sieve", "--limit", str(10**12)]) == 3
    assert "capacity error" in capsys.readouterr().err


def test_usage_exit_codes(capsys):
    assert cli.main(["export", "mertens", "--grid", ""]) == 2
    assert cli.main(["export", "mertens", "--grid", "100,50"]) == 2
    assert cli.main(["count", "--polynomial", "1,2"]) == 2
    assert cli.main(["count", "--polynomial", "0,1,1"]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        cli.main([])


def test_workers_validation():
    with pytest.raises(SystemExit) as exc:
        cli.main(["--workers", "0", "sieve", "--limit", "100"])
    assert exc.value.code == 2
    assert cli.main(["--workers", "2", "sieve", "--limit", "100"]) == 0


def test_verify_decomposition(tmp_path, capsys):
    out = tmp_path / "ledger.json"
    assert cli.main(["verify", "decomposition", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "decomposition-repartitions-10000" in text
    assert "(documented)" in text
    data = json.loads(out.read_text())
    assert data["ledger_version"] == 1
    assert all("claim_id" in e for e in data["entries"])


def test_verify_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    cli.main(["verify", "decomposition", "--out", str(a)])
    cli.main(["verify", "decomposition", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_verify_unexpected_failure_exits_4(monkeypatch, tmp_path):
    led = ledger_mod.ClaimsLedger()
    led.add(ClaimVerdict("boom", "always fails", {}, {}, "pass", FALSIFIED))
    monkeypatch.setattr(cli.ledger_mod, "run_claim_set",
                        lambda *a, **k: led)
    out = tmp_path / "ledger.json"
    assert cli.main(["verify", "identities", "--out", str(out)]) == 4


def test_constants_csv(tmp_path):
    out = tmp_path / "constants.csv"
    assert cli.main(["constants", "--prime-bound", "1000",
                     "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("name,value")
    assert len(lines) == 5


def test_count_command(capsys):
    assert cli.main(["count", "--polynomial", "1,0,1", "--limit", "10"]) == 0
    out = capsys.readouterr().out
    assert "count 5" in out
    assert "admissible True" in out


def test_progressions_csv(tmp_path):
    out = tmp_path / "prog.csv"
    assert cli.main(["progressions", "--limit", "1000", "--q-max", "3",
                     "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "q,a,psi,pi,psi_phi_over_x"
    assert len(lines) == 5  # (1,1) (2,1) (3,1) (3,2)


def test_decompose_json(tmp_path):
    out = tmp_path / "decomp.json"
    assert cli.main(["decompose", "--limit", "10000", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["x"] == 10000
    assert data["residual_MS"] <= 1e-12


def test_export_curve(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert cli.main(["export", "mertens", "--grid", "100,1000",
                     "--format", "csv", "--out", "m.csv"]) == 0
    csv_text = (tmp_path / "m.csv").read_text()
    assert csv_text.splitlines() == ["x,mertens", "100,1", "1000,2"]
    gp = (tmp_path / "m.gp").read_text()
    assert "plot 'm.csv'" in gp
    # repeat run is byte-identical
    first = (tmp_path / "m.csv").read_bytes()
    cli.main(["export", "mertens", "--grid", "100,1000",
              "--format", "csv", "--out", "m.csv"])
    assert (tmp_path / "m.csv").read_bytes() == first


def test_export_json(capsys):
    assert cli.main(["export", "lambda_psi_quadratic", "--grid", "10,100",
                     "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["quantity"] == "lambda_psi_quadratic"
    assert len(data["points"]) == 2
