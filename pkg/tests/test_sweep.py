import json
import math

import numpy as np
import pytest

import magnomech as mm
from magnomech.errors import UsageError
from magnomech.sweep import NUMERIC_KEYS, SweepAxis, SweepConfig

TWO_PI = 2.0 * math.pi


class TestPresetFidelity:
    def test_magnon_figure_base_parameters(self):
        cfg = mm.figure_preset("fig2a")
        b = cfg.base
        assert b["system.kappa_a_over_2pi_hz"] == 5.0e6
        assert b["system.kappa_m_over_2pi_hz"] == 1.0e6
        assert b["system.g_ma_over_2pi_hz"] == 2.0e7      # 4 * kappa_a
        assert b["system.cavity_freq_over_2pi_hz"] == 1.0e10
        assert b["system.temperature_k"] == 0.020
        assert b["squeeze.r"] == 2.0
        assert b["squeeze.theta_rad"] == 0.0
        assert [ax.name for ax in cfg.axes] == [
            "point.detuning_m_over_2pi_hz", "point.detuning_a_over_2pi_hz"]
        assert all(len(ax.values) == 41 for ax in cfg.axes)
        assert cfg.target == "magnon_variances"

    def test_fig2b_sweeps_squeeze_parameters_at_resonance(self):
        cfg = mm.figure_preset("fig2b")
        assert cfg.base["point.detuning_a_over_2pi_hz"] == 0.0
        assert cfg.base["point.detuning_m_over_2pi_hz"] == 0.0
        names = [ax.name for ax in cfg.axes]
        assert names == ["squeeze.r", "squeeze.theta_rad"]
        assert cfg.axes[0].values[0] == 0.0 and cfg.axes[0].values[-1] == 2.0
        assert cfg.axes[1].values[-1] == pytest.approx(TWO_PI)

    def test_fig3d_temperature_range(self):
        cfg = mm.figure_preset("fig3d")
        ax_r, ax_t = cfg.axes
        assert ax_r.name == "squeeze.r"
        assert ax_t.name == "system.temperature_k"
        assert ax_t.values[0] == pytest.approx(0.010)
        assert ax_t.values[-1] == pytest.approx(0.500)

    def test_phonon_figure_base_parameters(self):
        cfg = mm.figure_preset("fig4c")
        b = cfg.base
        assert b["system.kappa_a_over_2pi_hz"] == 3.0e6
        assert b["system.kappa_m_over_2pi_hz"] == 6.0e5
        assert b["system.gamma_b_over_2pi_hz"] == 100.0
        assert b["system.g_ma_over_2pi_hz"] == 4.2e6
        assert b["drive.target_g_mb_over_2pi_hz"] == 1.5e6
        assert b["point.eff_detuning_m_over_2pi_hz"] == 1.0e7
        assert b["point.detuning_a_over_2pi_hz"] == 1.1e7
        assert b["squeeze.detuning_s_over_2pi_hz"] == 1.0e7
        assert b["squeeze.theta_rad"] == 0.0
        ax_r, ax_t = cfg.axes
        assert ax_r.linspace == (0.0, 1.5, 61)
        assert ax_t.values == (0.010, 0.100, 0.200)
        assert cfg.target == "mechanical_variance"

    def test_fig4a_grid_size(self):
        cfg = mm.figure_preset("fig4a")
        assert len(cfg.axes[0].values) * len(cfg.axes[1].values) == 10201

    def test_output_spectrum_preset(self):
        cfg = mm.figure_preset("figS1")
        assert cfg.target == "output_spectrum"
        assert cfg.base["squeeze.r"] == 1.0
        assert cfg.base["output.phase_phi_rad"] == pytest.approx(math.pi / 2)
        assert cfg.axes[0].values == (0.0, 1.0e7, 2.0e7)  # 0, 2k_a, 4k_a

    def test_unknown_preset(self):
        with pytest.raises(UsageError, match="fig2a"):
            mm.figure_preset("fig9z")


class TestConfigText:
    def test_round_trip(self):
        cfg = mm.figure_preset("fig4c")
        text = cfg.to_text()
        again = SweepConfig.from_text(text)
        assert again.to_text() == text
        assert again.base == cfg.base
        assert [ax.values for ax in again.axes] == [ax.values for ax in cfg.axes]

    def test_unknown_key_rejected(self):
        with pytest.raises(UsageError, match="unknown configuration key"):
            SweepConfig.from_text(
                "target = magnon_variances\n"
                "system.kappa_a_over_2pi_hz = 5e6\n"
                "system.kappa_m_over_2pi_hz = 1e6\n"
                "system.typo = 1.0\n")

    def test_single_step_axis_rejected(self):
        with pytest.raises(UsageError, match="steps"):
            SweepAxis.from_range("squeeze.r", 0.0, 1.0, 1)

    def test_negative_rate_rejected(self):
        with pytest.raises(UsageError, match="lower bound"):
            SweepConfig.from_text(
                "target = magnon_variances\n"
                "system.kappa_a_over_2pi_hz = -5e6\n"
                "system.kappa_m_over_2pi_hz = 1e6\n")

    def test_axis_bounds_checked(self):
        cfg = SweepConfig(
            base={"system.kappa_a_over_2pi_hz": 5e6,
                  "system.kappa_m_over_2pi_hz": 1e6},
            axes=[SweepAxis("squeeze.r", (-0.5, 1.0))])
        with pytest.raises(UsageError, match="lower bound"):
            cfg.validate()

    def test_every_numeric_key_has_schema_entry(self):
        cfg = mm.figure_preset("fig4b")
        for key in cfg.base:
            if key not in ("target", "output.path", "output.format"):
                assert key in NUMERIC_KEYS


def _small_magnon_config(**overrides):
    base = {
        "system.kappa_a_over_2pi_hz": 5.0e6,
        "system.kappa_m_over_2pi_hz": 1.0e6,
        "system.g_ma_over_2pi_hz": 2.0e7,
        "system.temperature_k": 0.020,
        "squeeze.r": 2.0,
        "point.detuning_m_over_2pi_hz": 0.0,
        "point.detuning_a_over_2pi_hz": 0.0,
    }
    base.update(overrides)
    return SweepConfig(base=base, axes=[
        SweepAxis.from_range("point.detuning_m_over_2pi_hz", -1.0e7, 1.0e7, 5),
        SweepAxis.from_range("point.detuning_a_over_2pi_hz", -1.0e7, 1.0e7, 5),
    ], target="magnon_variances")


class TestRunSweep:
    def test_grid_minimum_at_resonance(self):
        table = mm.run_sweep(_small_magnon_config())
        rows = table.rows
        assert len(rows) == 25
        best = min(rows, key=lambda row: row["var_x"])
        assert best["detuning_m_over_2pi_hz"] == 0.0
        assert best["detuning_a_over_2pi_hz"] == 0.0

    def test_reference_row_in_coupling_sweep(self):
        cfg = mm.figure_preset("fig3b")
        table = mm.run_sweep(cfg)
        match = [row for row in table.rows
                 if row["r"] == 1.0 and row["g_ma_over_2pi_hz"] == 2.0e7]
        assert len(match) == 1
        assert match[0]["var_x_dB"] == pytest.approx(5.40, abs=0.005)

    def test_single_point_thermal_limit(self):
        cfg = SweepConfig(base={
            "system.kappa_a_over_2pi_hz": 3.0e6,
            "system.kappa_m_over_2pi_hz": 6.0e5,
            "system.gamma_b_over_2pi_hz": 100.0,
            "system.g_ma_over_2pi_hz": 4.2e6,
            "system.g_mb_over_2pi_hz": 0.1,
            "system.temperature_k": 0.010,
            "drive.target_g_mb_over_2pi_hz": 0.0,
            "squeeze.r": 1.0,
            "squeeze.detuning_s_over_2pi_hz": 1.0e7,
            "point.detuning_a_over_2pi_hz": 1.1e7,
            "point.eff_detuning_m_over_2pi_hz": 1.0e7,
        }, axes=[], target="mechanical_variance")
        table = mm.run_sweep(cfg)
        assert len(table.rows) == 1
        n_b = mm.thermal_occupation(TWO_PI * 1e7, 0.010)
        assert table.rows[0]["var_q_tilde"] == pytest.approx(n_b + 0.5, rel=0.01)

    def test_unstable_point_is_flagged_not_dropped(self):
        cfg = SweepConfig(base={
            "system.kappa_a_over_2pi_hz": 3.0e6,
            "system.kappa_m_over_2pi_hz": 6.0e5,
            "system.gamma_b_over_2pi_hz": 100.0,
            "system.g_ma_over_2pi_hz": 4.2e6,
            "system.g_mb_over_2pi_hz": 0.1,
            "system.temperature_k": 0.010,
            "drive.target_g_mb_over_2pi_hz": 1.5e6,
            "squeeze.r": 1.0,
            "squeeze.detuning_s_over_2pi_hz": 1.0e7,
            "point.detuning_a_over_2pi_hz": -1.1e7,
            "point.eff_detuning_m_over_2pi_hz": -1.0e7,
        }, axes=[], target="mechanical_variance")
        table = mm.run_sweep(cfg)
        row = table.rows[0]
        assert row["status"] == "unstable"
        assert row["stable"] is False
        assert row["var_q_tilde"] is None

    def test_parallel_matches_serial(self):
        cfg = _small_magnon_config()
        serial = mm.run_sweep(cfg, jobs=1)
        parallel = mm.run_sweep(cfg, jobs=2)
        assert serial.rows == parallel.rows

    def test_validity_target(self):
        cfg = SweepConfig(base={
            "system.kappa_a_over_2pi_hz": 3.0e6,
            "system.kappa_m_over_2pi_hz": 6.0e5,
            "system.gamma_b_over_2pi_hz": 100.0,
            "system.g_ma_over_2pi_hz": 4.2e6,
            "system.g_mb_over_2pi_hz": 0.1,
            "system.temperature_k": 0.010,
            "drive.target_g_mb_over_2pi_hz": 1.5e6,
            "squeeze.r": 1.0,
            "squeeze.detuning_s_over_2pi_hz": 1.0e7,
            "point.detuning_a_over_2pi_hz": 1.1e7,
            "point.eff_detuning_m_over_2pi_hz": 1.0e7,
        }, axes=[], target="validity")
        row = mm.run_sweep(cfg).rows[0]
        assert row["mean_magnon_abs"] == pytest.approx(1.06e7, rel=0.01)
        assert row["low_lying_ok_strict"] is True
        assert row["kerr_ok_strict"] is False
        assert row["kerr_ok_relaxed"] is True


class TestEmit:
    def test_empty_table_writes_header_only(self, tmp_path):
        table = mm.ResultTable(columns=["a", "b"], rows=[], metadata={})
        path = tmp_path / "empty.csv"
        mm.emit(table, "csv", str(path))
        assert path.read_text() == "a,b\n"

    def test_row_count_matches_grid(self, tmp_path):
        cfg = _small_magnon_config()
        table = mm.run_sweep(cfg)
        path = tmp_path / "grid.csv"
        mm.emit(table, "csv", str(path))
        lines = path.read_text().strip().splitlines()
        assert len(lines) == 1 + 25

    def test_json_round_trip_is_exact(self, tmp_path):
        table = mm.run_sweep(_small_magnon_config())
        path = tmp_path / "grid.json"
        mm.emit(table, "json", str(path))
        doc = json.loads(path.read_text())
        assert doc["columns"] == table.columns
        for loaded, original in zip(doc["rows"], table.rows):
            for key, value in original.items():
                assert loaded[key] == value  # bit-exact for floats
        assert doc["metadata"]["config_sha256"] == table.metadata["config_sha256"]

    def test_csv_deterministic_across_runs(self, tmp_path):
        cfg = _small_magnon_config()
        paths = []
        for tag in ("one", "two"):
            table = mm.run_sweep(cfg)
            path = tmp_path / f"{tag}.csv"
            mm.emit(table, "csv", str(path))
            paths.append(path.read_bytes())
        assert paths[0] == paths[1]

    def test_io_error_carries_path(self, tmp_path):
        table = mm.ResultTable(columns=["a"], rows=[], metadata={})
        bad = tmp_path / "nодir" / "x.csv"
        with pytest.raises(OSError, match="x.csv"):
            mm.emit(table, "csv", str(bad))
