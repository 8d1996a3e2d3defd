"""Configuration files, figure presets, parameter sweeps, CSV/JSON output.

Configuration is a flat ``key = value`` text format with dotted section
keys. Frequencies are entered as ordinary frequencies nu = omega/2pi in
Hz (keys carry the ``_over_2pi_hz`` suffix), temperatures in K, fields in
T, lengths in m. Everything is converted to angular units at this
boundary and nowhere else.
"""

from __future__ import annotations

import hashlib
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import outputfield, threemode, twomode
from .errors import MagnomechError, StabilityError, UsageError
from .params import (SqueezedDrive, SystemParams, rabi_frequency, spin_count,
                     validity_report, working_point, working_point_for_coupling)

TWO_PI = 2.0 * math.pi

TARGETS = ("magnon_variances", "mechanical_variance", "output_spectrum", "validity")

# numeric configuration keys: name -> (default, lower bound or None)
NUMERIC_KEYS = {
    "system.cavity_freq_over_2pi_hz": (1.0e10, 0.0),
    "system.magnon_freq_over_2pi_hz": (1.0e10, 0.0),
    "system.mech_freq_over_2pi_hz": (1.0e7, 0.0),
    "system.kappa_a_over_2pi_hz": (None, 0.0),
    "system.kappa_m_over_2pi_hz": (None, 0.0),
    "system.gamma_b_over_2pi_hz": (0.0, 0.0),
    "system.g_ma_over_2pi_hz": (0.0, 0.0),
    "system.g_mb_over_2pi_hz": (0.0, 0.0),
    "system.temperature_k": (0.0, 0.0),
    "system.sphere_diameter_m": (2.5e-4, 0.0),
    "drive.rabi_over_2pi_hz": (None, 0.0),
    "drive.field_b0_t": (None, 0.0),
    "drive.target_g_mb_over_2pi_hz": (None, 0.0),
    "squeeze.r": (0.0, 0.0),
    "squeeze.theta_rad": (0.0, None),
    "squeeze.detuning_s_over_2pi_hz": (0.0, None),
    "point.detuning_a_over_2pi_hz": (0.0, None),
    "point.detuning_m_over_2pi_hz": (None, None),
    "point.eff_detuning_m_over_2pi_hz": (None, None),
    "output.phase_phi_rad": (math.pi / 2, None),
    "spectrum.omega_min_over_2pi_hz": (-4.0e7, None),
    "spectrum.omega_max_over_2pi_hz": (4.0e7, None),
    "spectrum.steps": (641, 2),
}

STRING_KEYS = ("target", "output.path", "output.format")


@dataclass(frozen=True)
class SweepAxis:
    """One swept parameter: a numeric config key and its grid values."""

    name: str
    values: tuple
    linspace: tuple | None = None  # (min, max, steps) provenance, if regular

    @staticmethod
    def from_range(name: str, lo: float, hi: float, steps: int) -> "SweepAxis":
        if steps < 2:
            raise UsageError(f"axis {name}: steps must be >= 2, got {steps}")
        vals = tuple(float(v) for v in np.linspace(lo, hi, steps))
        return SweepAxis(name, vals, (float(lo), float(hi), int(steps)))


@dataclass
class SweepConfig:
    """Base parameter point, swept axes, computation target, output sink."""

    base: dict = field(default_factory=dict)
    axes: list = field(default_factory=list)
    target: str = "magnon_variances"
    output_path: str = "sweep.csv"
    output_format: str = "csv"

    def validate(self) -> "SweepConfig":
        if self.target not in TARGETS:
            raise UsageError(
                f"unknown target {self.target!r}; choose from {', '.join(TARGETS)}")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"unknown output format {self.output_format!r}")
        if len(self.axes) > 2:
            raise UsageError("at most two swept axes are supported")
        seen = set()
        for ax in self.axes:
            if ax.name not in NUMERIC_KEYS:
                raise UsageError(f"axis {ax.name!r} is not a numeric parameter key")
            if ax.name in seen:
                raise UsageError(f"axis {ax.name!r} swept twice")
            seen.add(ax.name)
            if len(ax.values) < 2:
                raise UsageError(f"axis {ax.name}: needs at least 2 values")
            bound = NUMERIC_KEYS[ax.name][1]
            if bound is not None and min(ax.values) < bound:
                raise UsageError(
                    f"axis {ax.name}: values below lower bound {bound}")
        for key, value in self.base.items():
            if key in STRING_KEYS:
                continue
            if key not in NUMERIC_KEYS:
                raise UsageError(f"unknown configuration key {key!r}")
            bound = NUMERIC_KEYS[key][1]
            if bound is not None and value < bound:
                raise UsageError(f"{key} = {value} below lower bound {bound}")
        for key in ("system.kappa_a_over_2pi_hz", "system.kappa_m_over_2pi_hz"):
            if self._num(key) is None or self._num(key) <= 0:
                raise UsageError(f"{key} must be given and positive")
        return self

    def _num(self, key):
        v = self.base.get(key)
        if v is None:
            v = NUMERIC_KEYS[key][0]
        return v

    # -- text form -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"target = {self.target}"]
        for key in sorted(self.base):
            if key == "target":
                continue
            lines.append(f"{key} = {_fmt_value(self.base[key])}")
        for i, ax in enumerate(self.axes, start=1):
            lines.append(f"sweep.axis{i}.name = {ax.name}")
            if ax.linspace is not None:
                lo, hi, steps = ax.linspace
                lines.append(f"sweep.axis{i}.min = {_fmt_value(lo)}")
                lines.append(f"sweep.axis{i}.max = {_fmt_value(hi)}")
                lines.append(f"sweep.axis{i}.steps = {steps}")
            else:
                joined = ", ".join(_fmt_value(v) for v in ax.values)
                lines.append(f"sweep.axis{i}.values = {joined}")
        lines.append(f"output.path = {self.output_path}")
        lines.append(f"output.format = {self.output_format}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "SweepConfig":
        raw = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            if "=" not in stripped:
                raise UsageError(f"line {lineno}: expected 'key = value'")
            key, value = (part.strip() for part in stripped.split("=", 1))
            if key in raw:
                raise UsageError(f"line {lineno}: duplicate key {key!r}")
            raw[key] = value
        cfg = SweepConfig()
        cfg.target = raw.pop("target", cfg.target)
        cfg.output_path = raw.pop("output.path", cfg.output_path)
        cfg.output_format = raw.pop("output.format", cfg.output_format)
        axes = {}
        for key in [k for k in raw if k.startswith("sweep.axis")]:
            value = raw.pop(key)
            try:
                _, axis_id, attr = key.split(".", 2)
            except ValueError:
                raise UsageError(f"malformed sweep key {key!r}")
            axes.setdefault(axis_id, {})[attr] = value
        for key, value in raw.items():
            if key not in NUMERIC_KEYS:
                raise UsageError(f"unknown configuration key {key!r}")
            cfg.base[key] = _parse_number(key, value)
        for axis_id in sorted(axes):
            spec = axes[axis_id]
            try:
                name = spec["name"]
            except KeyError:
                raise UsageError(f"sweep.{axis_id} is missing a name")
            if "values" in spec:
                vals = tuple(_parse_number(name, v)
                             for v in spec["values"].split(","))
                cfg.axes.append(SweepAxis(name, vals))
            else:
                try:
                    lo = _parse_number(name, spec["min"])
                    hi = _parse_number(name, spec["max"])
                    steps = int(float(spec["steps"]))
                except KeyError as missing:
                    raise UsageError(
                        f"sweep.{axis_id} needs min/max/steps or values "
                        f"(missing {missing})")
                cfg.axes.append(SweepAxis.from_range(name, lo, hi, steps))
        return cfg.validate()


def _parse_number(key, text):
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"{key}: expected a number, got {text!r}")


def _fmt_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


# -- resolution of one grid point ----------------------------------------


def _params_from(base) -> SystemParams:
    def num(key):
        v = base.get(key)
        return NUMERIC_KEYS[key][0] if v is None else v

    return SystemParams.from_hz(
        cavity_freq_hz=num("system.cavity_freq_over_2pi_hz"),
        magnon_freq_hz=num("system.magnon_freq_over_2pi_hz"),
        mech_freq_hz=num("system.mech_freq_over_2pi_hz"),
        kappa_a_hz=num("system.kappa_a_over_2pi_hz"),
        kappa_m_hz=num("system.kappa_m_over_2pi_hz"),
        gamma_b_hz=num("system.gamma_b_over_2pi_hz"),
        g_ma_hz=num("system.g_ma_over_2pi_hz"),
        g_mb_hz=num("system.g_mb_over_2pi_hz"),
        temperature_k=num("system.temperature_k"),
        sphere_diameter_m=num("system.sphere_diameter_m"),
    )


def _drive_from(base) -> SqueezedDrive:
    return SqueezedDrive(
        squeeze_r=base.get("squeeze.r", 0.0),
        squeeze_theta=base.get("squeeze.theta_rad", 0.0),
        detuning_s=TWO_PI * base.get("squeeze.detuning_s_over_2pi_hz", 0.0),
    )


def _working_point_from(base, params):
    detuning_a = TWO_PI * base.get("point.detuning_a_over_2pi_hz", 0.0)
    eff = base.get("point.eff_detuning_m_over_2pi_hz")
    bare = base.get("point.detuning_m_over_2pi_hz")
    if eff is not None and bare is not None:
        raise UsageError("give point.detuning_m_over_2pi_hz or "
                         "point.eff_detuning_m_over_2pi_hz, not both")
    if eff is None and bare is None:
        raise UsageError("three-mode targets need point.detuning_m_over_2pi_hz "
                         "or point.eff_detuning_m_over_2pi_hz")
    drive_keys = [k for k in ("drive.rabi_over_2pi_hz", "drive.field_b0_t",
                              "drive.target_g_mb_over_2pi_hz")
                  if base.get(k) is not None]
    if len(drive_keys) != 1:
        raise UsageError("give exactly one of drive.rabi_over_2pi_hz, "
                         "drive.field_b0_t, drive.target_g_mb_over_2pi_hz")
    key = drive_keys[0]
    if key == "drive.target_g_mb_over_2pi_hz":
        if eff is None:
            raise UsageError("targeting G_mb requires "
                             "point.eff_detuning_m_over_2pi_hz")
        return working_point_for_coupling(
            params, TWO_PI * base[key],
            detuning_a=detuning_a, eff_detuning_m=TWO_PI * eff)
    if key == "drive.rabi_over_2pi_hz":
        rabi = TWO_PI * base[key]
    else:
        rabi = rabi_frequency(base[key], spin_count(params.sphere_diameter))
    if eff is not None:
        return working_point(params, rabi, detuning_a=detuning_a,
                             eff_detuning_m=TWO_PI * eff)
    return working_point(params, rabi, detuning_a=detuning_a,
                         detuning_m=TWO_PI * bare)


RESULT_COLUMNS = {
    "magnon_variances": ["var_X", "var_X_dB", "var_Y", "var_Y_dB",
                         "var_x", "var_x_dB", "var_y", "var_y_dB",
                         "stable", "status"],
    "mechanical_variance": ["var_q_tilde", "var_q_tilde_dB",
                            "var_p_tilde", "var_p_tilde_dB",
                            "stable", "status"],
    "output_spectrum": ["omega_over_2pi_hz", "spectrum", "stable", "status"],
    "validity": ["rabi_rad_s", "mean_magnon_abs", "magnon_number",
                 "spin_bound", "low_lying_ratio", "low_lying_ok_strict",
                 "low_lying_ok_relaxed", "kerr_coeff_rad_s", "kerr_drive_rad_s",
                 "kerr_ratio", "kerr_ok_strict", "kerr_ok_relaxed",
                 "stable", "status"],
}


def _eval_point(target, base):
    """All result rows for one fully-substituted parameter point."""
    try:
        if target == "magnon_variances":
            params = _params_from(base)
            drive = _drive_from(base)
            da = TWO_PI * base.get("point.detuning_a_over_2pi_hz", 0.0)
            dm = TWO_PI * base.get("point.detuning_m_over_2pi_hz", 0.0)
            v = twomode.detuned_variances(params, drive, da, dm)
            row = {}
            for name, value in zip(("var_X", "var_Y", "var_x", "var_y"), v):
                row[name] = value
                row[name + "_dB"] = twomode.squeezing_db(value)
            row["stable"] = True
            row["status"] = "ok"
            return [row]
        if target == "mechanical_variance":
            params = _params_from(base)
            drive = _drive_from(base)
            wp = _working_point_from(base, params)
            mv = threemode.interaction_picture_variance(params, drive, wp)
            return [{
                "var_q_tilde": mv.var_q_tilde,
                "var_q_tilde_dB": twomode.squeezing_db(mv.var_q_tilde),
                "var_p_tilde": mv.var_p_tilde,
                "var_p_tilde_dB": twomode.squeezing_db(mv.var_p_tilde),
                "stable": True,
                "status": "ok",
            }]
        if target == "validity":
            params = _params_from(base)
            wp = _working_point_from(base, params)
            rep = validity_report(params, wp)
            return [{
                "rabi_rad_s": wp.rabi,
                "mean_magnon_abs": abs(wp.mean_magnon),
                "magnon_number": rep.magnon_number,
                "spin_bound": rep.spin_bound,
                "low_lying_ratio": rep.low_lying_ratio,
                "low_lying_ok_strict": rep.low_lying_ok,
                "low_lying_ok_relaxed": rep.low_lying_ok_relaxed,
                "kerr_coeff_rad_s": rep.kerr_coeff,
                "kerr_drive_rad_s": rep.kerr_drive,
                "kerr_ratio": rep.kerr_ratio,
                "kerr_ok_strict": rep.kerr_ok,
                "kerr_ok_relaxed": rep.kerr_ok_relaxed,
                "stable": True,
                "status": "ok",
            }]
        if target == "output_spectrum":
            params = _params_from(base)
            drive = _drive_from(base)
            da = TWO_PI * base.get("point.detuning_a_over_2pi_hz", 0.0)
            dm = TWO_PI * base.get("point.detuning_m_over_2pi_hz", 0.0)
            phi = base.get("output.phase_phi_rad", math.pi / 2)
            lo = base.get("spectrum.omega_min_over_2pi_hz", -4.0e7)
            hi = base.get("spectrum.omega_max_over_2pi_hz", 4.0e7)
            steps = int(base.get("spectrum.steps", 641))
            grid = TWO_PI * np.linspace(lo, hi, steps)
            trace = outputfield.output_spectrum(params, drive, da, dm, grid, phi)
            return [{
                "omega_over_2pi_hz": float(w / TWO_PI),
                "spectrum": float(s),
                "stable": True,
                "status": "ok",
            } for w, s in zip(trace.omega, trace.values)]
        raise UsageError(f"unknown target {target!r}")
    except StabilityError:
        return [_failed_row(target, "unstable")]
    except (MagnomechError, np.linalg.LinAlgError) as exc:
        return [_failed_row(target, f"error:{type(exc).__name__}")]


def _failed_row(target, status):
    row = {name: None for name in RESULT_COLUMNS[target]}
    row["stable"] = False if status == "unstable" else None
    row["status"] = status
    return row


def _eval_task(args):
    return _eval_point(*args)


@dataclass
class ResultTable:
    columns: list
    rows: list
    metadata: dict


def run_sweep(config: SweepConfig, jobs: int = 1) -> ResultTable:
    """Evaluate the configured target over the sweep grid.

    Grid points are independent and may be computed in parallel; rows are
    assembled in row-major axis order regardless of completion order.
    Points whose model is unstable or fails numerically are emitted with a
    status flag rather than dropped.
    """
    config.validate()
    axes = config.axes
    axis_cols = [_column_name(ax.name, [a.name for a in axes]) for ax in axes]
    grids = [ax.values for ax in axes]
    combos = [()]
    for vals in grids:
        combos = [prior + (v,) for prior in combos for v in vals]
    tasks = []
    for combo in combos:
        base = dict(config.base)
        for ax, value in zip(axes, combo):
            base[ax.name] = value
        tasks.append((config.target, base))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_eval_task, tasks, chunksize=8))
    else:
        results = [_eval_point(*task) for task in tasks]
    columns = axis_cols + RESULT_COLUMNS[config.target]
    rows = []
    for combo, point_rows in zip(combos, results):
        for row in point_rows:
            out = dict(zip(axis_cols, (float(v) for v in combo)))
            out.update(row)
            rows.append(out)
    text = config.to_text()
    metadata = {
        "target": config.target,
        "axes": [ax.name for ax in axes],
        "config": {line.split(" = ")[0]: line.split(" = ", 1)[1]
                   for line in text.strip().splitlines()},
        "config_sha256": hashlib.sha256(text.encode()).hexdigest(),
    }
    return ResultTable(columns, rows, metadata)


def _column_name(key, all_keys):
    leaf = key.rsplit(".", 1)[-1]
    clashes = [k for k in all_keys if k.rsplit(".", 1)[-1] == leaf]
    return key.replace(".", "_") if len(clashes) > 1 else leaf


def emit(table: ResultTable, fmt: str, path: str) -> None:
    """Write a result table as CSV (header + rows) or JSON (rows + metadata).

    Output is deterministic: no timestamps, shortest round-trip float
    text, metadata carries a hash of the resolved configuration.
    """
    if fmt == "csv":
        lines = [",".join(table.columns)]
        for row in table.rows:
            lines.append(",".join(_fmt_value(row.get(c)) for c in table.columns))
        payload = "\n".join(lines) + "\n"
        _write_text(path, payload)
    elif fmt == "json":
        doc = {"metadata": table.metadata, "columns": table.columns,
               "rows": table.rows}
        _write_text(path, json.dumps(doc, sort_keys=True, indent=1) + "\n")
    else:
        raise UsageError(f"unknown output format {fmt!r}")


def _write_text(path, payload):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(payload)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


# -- figure presets -------------------------------------------------------

_MAGNON_SYSTEM = {
    "system.cavity_freq_over_2pi_hz": 1.0e10,
    "system.magnon_freq_over_2pi_hz": 1.0e10,
    "system.mech_freq_over_2pi_hz": 1.0e7,
    "system.kappa_a_over_2pi_hz": 5.0e6,
    "system.kappa_m_over_2pi_hz": 1.0e6,
    "system.gamma_b_over_2pi_hz": 100.0,
    "system.g_ma_over_2pi_hz": 2.0e7,
    "system.g_mb_over_2pi_hz": 0.1,
    "system.temperature_k": 0.020,
    "system.sphere_diameter_m": 2.5e-4,
    "point.detuning_a_over_2pi_hz": 0.0,
    "point.detuning_m_over_2pi_hz": 0.0,
    "squeeze.theta_rad": 0.0,
    "squeeze.detuning_s_over_2pi_hz": 0.0,
}

_MECH_SYSTEM = {
    "system.cavity_freq_over_2pi_hz": 1.0e10,
    "system.magnon_freq_over_2pi_hz": 1.0e10,
    "system.mech_freq_over_2pi_hz": 1.0e7,
    "system.kappa_a_over_2pi_hz": 3.0e6,
    "system.kappa_m_over_2pi_hz": 6.0e5,
    "system.gamma_b_over_2pi_hz": 100.0,
    "system.g_ma_over_2pi_hz": 4.2e6,
    "system.g_mb_over_2pi_hz": 0.1,
    "system.temperature_k": 0.010,
    "system.sphere_diameter_m": 2.5e-4,
    "drive.target_g_mb_over_2pi_hz": 1.5e6,
    "squeeze.r": 1.0,
    "squeeze.theta_rad": 0.0,
    "squeeze.detuning_s_over_2pi_hz": 1.0e7,
    "point.detuning_a_over_2pi_hz": 1.1e7,
    "point.eff_detuning_m_over_2pi_hz": 1.0e7,
}


def _preset_fig2a():
    base = dict(_MAGNON_SYSTEM)
    base["squeeze.r"] = 2.0
    del base["point.detuning_m_over_2pi_hz"], base["point.detuning_a_over_2pi_hz"]
    return SweepConfig(
        base=base,
        axes=[SweepAxis.from_range("point.detuning_m_over_2pi_hz", -2.0e7, 2.0e7, 41),
              SweepAxis.from_range("point.detuning_a_over_2pi_hz", -2.0e7, 2.0e7, 41)],
        target="magnon_variances", output_path="fig2a.csv")


def _preset_fig2b():
    base = dict(_MAGNON_SYSTEM)
    del base["squeeze.theta_rad"]
    return SweepConfig(
        base=base,
        axes=[SweepAxis.from_range("squeeze.r", 0.0, 2.0, 41),
              SweepAxis.from_range("squeeze.theta_rad", 0.0, TWO_PI, 41)],
        target="magnon_variances", output_path="fig2b.csv")


def _preset_fig3ab(name):
    base = dict(_MAGNON_SYSTEM)
    del base["system.g_ma_over_2pi_hz"]
    return SweepConfig(
        base=base,
        axes=[SweepAxis.from_range("squeeze.r", 0.0, 2.0, 41),
              SweepAxis.from_range("system.g_ma_over_2pi_hz", 0.0, 2.5e7, 51)],
        target="magnon_variances", output_path=f"{name}.csv")


def _preset_fig3cd(name):
    base = dict(_MAGNON_SYSTEM)
    del base["system.temperature_k"]
    return SweepConfig(
        base=base,
        axes=[SweepAxis.from_range("squeeze.r", 0.0, 2.0, 41),
              SweepAxis.from_range("system.temperature_k", 0.010, 0.500, 41)],
        target="magnon_variances", output_path=f"{name}.csv")


def _preset_fig4a():
    base = dict(_MECH_SYSTEM)
    del base["point.eff_detuning_m_over_2pi_hz"], base["point.detuning_a_over_2pi_hz"]
    return SweepConfig(
        base=base,
        axes=[SweepAxis.from_range("point.eff_detuning_m_over_2pi_hz", 0.0, 2.0e7, 101),
              SweepAxis.from_range("point.detuning_a_over_2pi_hz", 0.0, 2.0e7, 101)],
        target="mechanical_variance", output_path="fig4a.csv")


def _preset_fig4b():
    base = dict(_MECH_SYSTEM)
    del base["system.g_ma_over_2pi_hz"], base["drive.target_g_mb_over_2pi_hz"]
    return SweepConfig(
        base=base,
        axes=[SweepAxis.from_range("system.g_ma_over_2pi_hz", 5.0e5, 8.0e6, 41),
              SweepAxis.from_range("drive.target_g_mb_over_2pi_hz", 1.0e5, 3.0e6, 41)],
        target="mechanical_variance", output_path="fig4b.csv")


def _preset_fig4c():
    base = dict(_MECH_SYSTEM)
    del base["squeeze.r"], base["system.temperature_k"]
    return SweepConfig(
        base=base,
        axes=[SweepAxis.from_range("squeeze.r", 0.0, 1.5, 61),
              SweepAxis("system.temperature_k", (0.010, 0.100, 0.200))],
        target="mechanical_variance", output_path="fig4c.csv")


def _preset_figs1():
    base = dict(_MAGNON_SYSTEM)
    base["squeeze.r"] = 1.0
    base["output.phase_phi_rad"] = math.pi / 2
    base["spectrum.omega_min_over_2pi_hz"] = -4.0e7
    base["spectrum.omega_max_over_2pi_hz"] = 4.0e7
    base["spectrum.steps"] = 641
    del base["system.g_ma_over_2pi_hz"]
    return SweepConfig(
        base=base,
        axes=[SweepAxis("system.g_ma_over_2pi_hz", (0.0, 1.0e7, 2.0e7))],
        target="output_spectrum", output_path="figS1.csv")


_PRESETS = {
    "fig2a": _preset_fig2a,
    "fig2b": _preset_fig2b,
    "fig3a": lambda: _preset_fig3ab("fig3a"),
    "fig3b": lambda: _preset_fig3ab("fig3b"),
    "fig3c": lambda: _preset_fig3cd("fig3c"),
    "fig3d": lambda: _preset_fig3cd("fig3d"),
    "fig4a": _preset_fig4a,
    "fig4b": _preset_fig4b,
    "fig4c": _preset_fig4c,
    "figS1": _preset_figs1,
}


def preset_names() -> tuple:
    return tuple(sorted(_PRESETS))


def figure_preset(name: str) -> SweepConfig:
    """Sweep configuration reproducing one of the reference figures."""
    try:
        builder = _PRESETS[name]
    except KeyError:
        raise UsageError(
            f"unknown preset {name!r}; available: {', '.join(preset_names())}")
    return builder().validate()
