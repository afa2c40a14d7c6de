import json
import math

import numpy as np
import pytest

from cvwerner import acceptance, cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_discord0(capsys):
    code, out, _ = run_cli(capsys, "compute", "discord0", "--p", "0.5", "--lambda", "0.5")
    assert code == 0
    doc = json.loads(out)
    assert doc["measure"] == "discord0"
    assert doc["units"] == "nats"
    assert doc["results"]["discord"] == pytest.approx(0.224717318691, abs=1e-10)
    assert "error_budget" in doc and "wall_time_s" in doc


def test_compute_ppt_bounds(capsys):
    code, out, _ = run_cli(capsys, "compute", "ppt-bounds", "--lambda", "0.5")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["upper"] == pytest.approx(0.5 * math.log(2), abs=1e-10)


def test_compute_region(capsys):
    code, out, _ = run_cli(capsys, "compute", "region", "--mu", "0.8", "--p", "0.05")
    assert code == 0
    assert json.loads(out)["results"]["region"] == "separable"


def test_unknown_measure_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["compute", "no-such-measure", "--p", "0.5"])
    assert err.value.code == 2
    assert "usage" in capsys.readouterr().err.lower()


def test_domain_error_exits_3(capsys):
    code, _, err = run_cli(capsys, "compute", "discord0", "--p", "1.5", "--lambda", "0.5")
    assert code == 3
    assert "error" in err.lower()


def test_missing_parameter_exits_3(capsys):
    code, _, err = run_cli(capsys, "compute", "discord0", "--p", "0.5")
    assert code == 3
    assert "--lam" in err


def test_sweep_monotone_and_deterministic(capsys, tmp_path):
    out_file = tmp_path / "sweep.csv"
    code, _, _ = run_cli(
        capsys,
        "sweep",
        "discord0",
        "--p",
        "0:1:0.01",
        "--lambda",
        "0.5",
        "--out",
        str(out_file),
    )
    assert code == 0
    lines = out_file.read_text().splitlines()
    header = lines[0].split(",")
    assert lines[0].startswith("p,lam,")
    assert "discord_nats" in header
    assert len(lines) == 102  # header + 101 rows
    col = header.index("discord_nats")
    values = [float(line.split(",")[col]) for line in lines[1:]]
    assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))
    # deterministic: rerun gives identical bytes
    out2 = tmp_path / "sweep2.csv"
    run_cli(capsys, "sweep", "discord0", "--p", "0:1:0.01", "--lambda", "0.5", "--out", str(out2))
    assert out2.read_text() == out_file.read_text()


def test_sweep_csv_round_trip(capsys, tmp_path):
    out_file = tmp_path / "sweep.csv"
    run_cli(capsys, "sweep", "discord0", "--p", "0:1:0.2", "--lambda", "0.3", "--out", str(out_file))
    text = out_file.read_text()
    lines = text.splitlines()
    rebuilt = [lines[0]]
    for line in lines[1:]:
        cells = []
        for cell in line.split(","):
            cells.append(cli.NUM_FMT % float(cell))
        rebuilt.append(",".join(cells))
    assert "\n".join(rebuilt) + "\n" == text


def test_sweep_row_errors_exit_4(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "bounds", "--p", "0.5", "--lambda", "0.5", "--mu", "0.5:1.0:0.25"
    )
    assert code == 4
    lines = out.splitlines()
    assert lines[0].endswith(",error")
    assert any("mu=1" in line for line in lines[1:])


def test_sweep_json_format(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "discord0", "--p", "0:1:0.5", "--lambda", "0.5", "--format", "json"
    )
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 3
    assert docs[1]["inputs"]["p"] == 0.5


def test_sweep_thread_cap(capsys, monkeypatch):
    monkeypatch.setenv("CVW_THREADS", "1")
    code, out, _ = run_cli(capsys, "sweep", "discord0", "--p", "0:1:0.5", "--lambda", "0.5")
    assert code == 0
    assert len(out.splitlines()) == 4


def test_figure_ppt(capsys, tmp_path):
    code, _, _ = run_cli(capsys, "figure", "fig-ppt", "--outdir", str(tmp_path))
    assert code == 0
    csv_path = tmp_path / "fig-ppt.csv"
    stub = tmp_path / "plot_fig_ppt.py"
    assert csv_path.exists() and stub.exists()
    lines = csv_path.read_text().splitlines()
    assert len(lines) == 101  # header + lam in 0:0.99:0.01
    header = lines[0].split(",")
    lam_col, u_col = header.index("lam"), header.index("upper")
    for line in lines[1:]:
        cells = line.split(",")
        assert float(cells[u_col]) == pytest.approx(float(cells[lam_col]) * math.log(2), abs=1e-10)


def test_figure_bounds_mu4_boundaries(capsys, tmp_path):
    code, _, _ = run_cli(capsys, "figure", "fig-bounds-mu4", "--outdir", str(tmp_path))
    assert code == 0
    stub = (tmp_path / "plot_fig-bounds-mu4.py".replace("-", "_")).read_text()
    assert "axvline" in stub  # region boundaries included


def test_figure_io_error_exits_5(capsys, tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    code, _, err = run_cli(capsys, "figure", "fig-ppt", "--outdir", str(blocker / "sub"))
    assert code == 5
    assert "figure output failed" in err


def test_config_file_presets_and_flag_override(capsys, tmp_path):
    cfg = tmp_path / "config.txt"
    cfg.write_text("p = 0.5\nlambda = 0.5  # squeezing\n")
    code, out, _ = run_cli(capsys, "compute", "discord0", "--config", str(cfg))
    assert code == 0
    assert json.loads(out)["results"]["discord"] == pytest.approx(0.224717318691, abs=1e-10)
    code, out, _ = run_cli(
        capsys, "compute", "discord0", "--config", str(cfg), "--p", "1.0"
    )
    assert json.loads(out)["results"]["discord"] == pytest.approx(0.749780192825, abs=1e-10)


def test_verify_wiring(capsys, monkeypatch):
    stub_results = [
        acceptance.CheckResult("alpha", True, "fine", 0.1),
        acceptance.CheckResult("beta", False, "broken", 0.2),
    ]
    monkeypatch.setattr(acceptance, "run_all", lambda **kw: stub_results)
    code, out, _ = run_cli(capsys, "verify")
    assert code == 1
    assert "[PASS] alpha" in out and "[FAIL] beta" in out
    assert "1/2 checks passed" in out

    monkeypatch.setattr(acceptance, "run_all", lambda **kw: stub_results[:1])
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0
    assert "1/1 checks passed" in out


def test_verify_forced_small_cutoff_fails_truncation_checks():
    result = acceptance.check_mid_identity(cutoff=4)
    assert not result.passed
    assert "TruncationError" in result.detail or "1e-8" in result.detail
