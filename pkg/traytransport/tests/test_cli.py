"""
End-to-end tests of the traytransport command line.
"""

import csv
import json
import math

import pytest

from traytransport.main import main


def _write_config(path, distance=0.5, theta=math.pi / 8, **extra):
    config = {
        "object": {"mass_kg": 1.0, "radius_m": 0.004, "height_m": 0.2},
        "target": {"distance_m": distance, "theta_rad": theta},
        "sample_dt_s": 0.001,
    }
    config.update(extra)
    path.write_text(json.dumps(config), encoding="utf-8")
    return str(path)


@pytest.fixture
def config_path(tmp_path):
    return _write_config(tmp_path / "run.json")


@pytest.fixture
def planned_csv(tmp_path, config_path):
    out = tmp_path / "plan.csv"
    assert main(["plan", "--config", config_path, "--out", str(out)]) == 0
    return out


def test_plan_then_validate_passes(planned_csv, config_path, capsys):
    assert planned_csv.with_suffix(".summary.json").exists()
    capsys.readouterr()

    assert main(["validate", "--config", config_path, "--trajectory", str(planned_csv)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("stability: PASS")
    assert "FAIL" not in out


def test_plan_output_is_deterministic(tmp_path, config_path, planned_csv):
    again = tmp_path / "again.csv"
    assert main(["plan", "--config", config_path, "--out", str(again)]) == 0
    assert again.read_bytes() == planned_csv.read_bytes()


def test_summary_json_describes_the_plan(planned_csv):
    summary = json.loads(planned_csv.with_suffix(".summary.json").read_text(encoding="utf-8"))
    assert summary["t_total"] > 0
    assert summary["phi_rm_acc"] > 0


def test_zero_distance_is_a_config_error(tmp_path):
    path = _write_config(tmp_path / "zero.json", distance=0.0)
    assert main(["plan", "--config", path, "--out", str(tmp_path / "p.csv")]) == 1


def test_missing_config_file_is_a_config_error(tmp_path):
    assert main(["plan", "--config", str(tmp_path / "absent.json"), "--out", str(tmp_path / "p.csv")]) == 1


def test_unknown_config_key_is_a_config_error(tmp_path):
    path = _write_config(tmp_path / "typo.json", sample_dt=0.001)
    assert main(["plan", "--config", path, "--out", str(tmp_path / "p.csv")]) == 1


def test_infeasible_distance_exits_with_two(tmp_path):
    path = _write_config(tmp_path / "tiny.json", distance=1e-12)
    assert main(["plan", "--config", path, "--out", str(tmp_path / "p.csv")]) == 2


def test_tampered_acceleration_fails_stability(tmp_path, planned_csv, config_path, capsys):
    with open(planned_csv, encoding="utf-8", newline="") as f:
        rows = list(csv.reader(f))
    column = rows[0].index("a")
    peak_row = max(range(1, len(rows)), key=lambda i: float(rows[i][column]))
    rows[peak_row][column] = repr(2.0 * float(rows[peak_row][column]))

    tampered = tmp_path / "tampered.csv"
    with open(tampered, "w", encoding="utf-8", newline="") as f:
        csv.writer(f, lineterminator="\n").writerows(rows)
    capsys.readouterr()

    assert main(["validate", "--config", config_path, "--trajectory", str(tampered)]) == 3
    assert "stability: FAIL" in capsys.readouterr().out


def test_truncated_trajectory_fails_validation(tmp_path, planned_csv, config_path):
    lines = planned_csv.read_text(encoding="utf-8").splitlines(keepends=True)
    truncated = tmp_path / "truncated.csv"
    truncated.write_text("".join(lines[:-1]), encoding="utf-8")
    assert main(["validate", "--config", config_path, "--trajectory", str(truncated)]) == 3


def test_malformed_trajectory_is_a_config_error(tmp_path, config_path):
    broken = tmp_path / "broken.csv"
    broken.write_text("t,phi\n0,0\n", encoding="utf-8")
    assert main(["validate", "--config", config_path, "--trajectory", str(broken)]) == 1


def test_baseline_writes_a_level_tray_trajectory(tmp_path, config_path):
    out = tmp_path / "baseline.csv"
    assert main(["baseline", "--config", config_path, "--out", str(out)]) == 0
    with open(out, encoding="utf-8", newline="") as f:
        rows = list(csv.DictReader(f))
    assert all(float(row["phi"]) == 0.0 for row in rows)
    assert main(["validate", "--config", config_path, "--trajectory", str(out)]) == 0


def test_compare_report(tmp_path, config_path):
    out = tmp_path / "compare.json"
    assert main(["compare", "--config", config_path, "--out", str(out)]) == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["t_with_rotation"] > 0
    assert report["t_without_rotation"] > report["t_with_rotation"]
    assert report["improvement"] == pytest.approx(
        1 - report["t_with_rotation"] / report["t_without_rotation"]
    )


def test_compare_prints_without_output_path(config_path, capsys):
    assert main(["compare", "--config", config_path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report) >= {"t_with_rotation", "t_without_rotation", "improvement"}


def test_sweep_grid_rows(tmp_path, config_path):
    out = tmp_path / "sweep.csv"
    code = main([
        "sweep", "--config", config_path, "--grid", "0.1:0.6:2,0.1:0.6:2",
        "--workers", "1", "--out", str(out),
    ])
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("x,y,t_rot,t_norot,improvement")
    assert len(lines) == 5


def test_bad_grid_is_a_config_error(config_path):
    assert main(["sweep", "--config", config_path, "--grid", "0.1:0.6"]) == 1


def test_missing_subcommand_is_rejected():
    with pytest.raises(SystemExit):
        main([])


def test_sweep_output_does_not_depend_on_worker_count(tmp_path, config_path, monkeypatch):
    from traytransport.core.config import settings

    serial = tmp_path / "serial.csv"
    assert main(["sweep", "--config", config_path, "--grid", "0.5:1.0:2,0.5:1.0:2",
                 "--workers", "1", "--out", str(serial)]) == 0

    monkeypatch.setattr(settings, "SWEEP_WORKERS", 2)
    pooled = tmp_path / "pooled.csv"
    assert main(["sweep", "--config", config_path, "--grid", "0.5:1.0:2,0.5:1.0:2",
                 "--out", str(pooled)]) == 0
    assert pooled.read_bytes() == serial.read_bytes()
