"""Command-line interface: presets, sweeps, validation, spectra.

Exit codes: 0 success, 1 usage/configuration error, 2 numerical failure
of the whole run.
"""

from __future__ import annotations

import argparse
import sys

from . import sweep as sweep_mod
from .errors import MagnomechError, UsageError
from .params import validity_report
from .sweep import SweepConfig, figure_preset, preset_names


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="magnomech",
        description="Steady-state squeezing of a driven cavity magnomechanical system")
    sub = parser.add_subparsers(dest="command", required=True)

    p_preset = sub.add_parser("preset", help="print a figure-preset configuration")
    p_preset.add_argument("name", help=f"one of: {', '.join(preset_names())}")
    p_preset.add_argument("--out", help="write the configuration here instead of stdout")

    for verb, help_text in (("sweep", "run a parameter sweep from a config file"),
                            ("spectrum", "run an output-spectrum config file")):
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("config", help="configuration file")
        p.add_argument("--out", help="output path (default: from the config)")
        p.add_argument("--format", choices=("csv", "json"),
                       help="output format (default: from the config)")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallel workers for grid points")
        p.add_argument("--quiet", action="store_true")

    p_val = sub.add_parser("validate", help="check a config file and report the base point")
    p_val.add_argument("config", help="configuration file")
    p_val.add_argument("--quiet", action="store_true")
    return parser


def _load_config(path) -> SweepConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}")
    return SweepConfig.from_text(text)


def _run_and_emit(args) -> int:
    config = _load_config(args.config)
    if args.command == "spectrum" and config.target != "output_spectrum":
        raise UsageError("the spectrum verb needs target = output_spectrum")
    if args.out:
        config.output_path = args.out
    if args.format:
        config.output_format = args.format
    table = sweep_mod.run_sweep(config, jobs=max(1, args.jobs))
    sweep_mod.emit(table, config.output_format, config.output_path)
    if not args.quiet:
        n_bad = sum(1 for row in table.rows if row.get("status") != "ok")
        print(f"wrote {len(table.rows)} rows to {config.output_path}"
              + (f" ({n_bad} flagged)" if n_bad else ""))
    return 0


def _validate(args) -> int:
    config = _load_config(args.config)
    config.validate()
    params = sweep_mod._params_from(config.base)
    lines = [f"target: {config.target}",
             f"axes: {', '.join(ax.name for ax in config.axes) or '(none)'}",
             f"magnon thermal occupation: {params.magnon_thermal:.4g}",
             f"phonon thermal occupation: {params.phonon_thermal:.4g}"]
    if config.target in ("mechanical_variance", "validity"):
        wp = sweep_mod._working_point_from(config.base, params)
        rep = validity_report(params, wp)
        lines += [
            f"steady magnon amplitude |<m>|: {abs(wp.mean_magnon):.4g}",
            f"effective coupling |G_mb|/2pi: {wp.eff_coupling_mag / sweep_mod.TWO_PI:.4g} Hz",
            f"drive strength Omega: {wp.rabi:.4g} rad/s",
            f"excitation bound: |<m>|^2 = {rep.magnon_number:.3g} vs 5N = {rep.spin_bound:.3g}"
            f" (ratio {rep.low_lying_ratio:.3g};"
            f" strict {'ok' if rep.low_lying_ok else 'FAIL'},"
            f" relaxed {'ok' if rep.low_lying_ok_relaxed else 'FAIL'})",
            f"Kerr bound: K|<m>|^3 = {rep.kerr_drive:.3g} vs Omega = {rep.rabi:.3g} rad/s"
            f" (ratio {rep.kerr_ratio:.3g};"
            f" strict {'ok' if rep.kerr_ok else 'FAIL'},"
            f" relaxed {'ok' if rep.kerr_ok_relaxed else 'FAIL'})",
        ]
    if not args.quiet:
        print("\n".join(lines))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "preset":
            config = figure_preset(args.name)
            text = config.to_text()
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        if args.command in ("sweep", "spectrum"):
            return _run_and_emit(args)
        if args.command == "validate":
            return _validate(args)
        parser.error(f"unknown command {args.command}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MagnomechError, ArithmeticError, OSError) as exc:
        print(f"numerical/runtime failure: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
