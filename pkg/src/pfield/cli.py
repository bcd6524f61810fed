"""Command line front end.

Subcommands generate the figure data sets and run the verification
suite.  All outputs are deterministic: a rerun with the same inputs
produces byte-identical files.  Exit codes: 0 success, 1 verification
failure, 2 usage or configuration error, 3 domain or numeric error
raised by the physics layer.

Output location: --out flag, else the OUTPUT_DIR environment variable,
else the working directory.  CSV files carry `# key=value` caption
lines followed by a single `name:unit` header row; JSON files carry the
same content as {"meta": ..., "columns": ..., "rows": ...}.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys as _sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Mapping, Sequence

from . import boxmode, hydrogen, nonlinear, oracle, oscillator, timedep, verification
from .core import ELECTRON_MASS, HBAR

_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class RunConfig:
    """Common run options after merging flags, config file and defaults."""

    grid_points: int = 1000
    fmt: str = "csv"
    out_dir: str = "."

    def __post_init__(self) -> None:
        if self.grid_points < 2:
            raise ValueError("grid_points must be at least 2")
        if self.fmt not in _FORMATS:
            raise ValueError(f"format must be one of {_FORMATS}")


def _parse_config_file(path: str) -> dict[str, str]:
    """Flat key=value lines; # starts a comment, blanks ignored."""
    values: dict[str, str] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def _merge_options(args: argparse.Namespace,
                   table: Mapping[str, tuple[Callable[[str], object], object]],
                   parser: argparse.ArgumentParser) -> dict[str, object]:
    """Resolve each option: flag beats config file beats default."""
    config: dict[str, str] = {}
    if args.config:
        try:
            config = _parse_config_file(args.config)
        except (OSError, ValueError) as exc:
            parser.error(str(exc))
    unknown = sorted(set(config) - set(table))
    if unknown:
        parser.error(f"unknown config keys: {', '.join(unknown)}")
    merged: dict[str, object] = {}
    for key, (conv, default) in table.items():
        flag_value = getattr(args, key.replace("-", "_"), None)
        if flag_value is not None:
            merged[key] = flag_value
        elif key in config:
            try:
                merged[key] = conv(config[key])
            except ValueError as exc:
                parser.error(f"config key {key}: {exc}")
        else:
            merged[key] = default
    return merged


def _run_config(merged: Mapping[str, object],
                parser: argparse.ArgumentParser) -> RunConfig:
    out = merged["out"]
    if out is None:
        out = os.environ.get("OUTPUT_DIR", ".")
    try:
        return RunConfig(grid_points=int(merged["grid"]),
                         fmt=str(merged["format"]), out_dir=str(out))
    except ValueError as exc:
        parser.error(str(exc))
    raise AssertionError("unreachable")


def _fmt(value: object) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_table(cfg: RunConfig, stem: str, meta: Mapping[str, object],
                 columns: Sequence[str], rows: Sequence[Sequence[object]]) -> Path:
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{stem}.{cfg.fmt}"
    if cfg.fmt == "csv":
        lines = [f"# {key}={_fmt(value)}" for key, value in meta.items()]
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(_fmt(v) for v in row))
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    else:
        payload = {"meta": dict(meta), "columns": list(columns),
                   "rows": [list(row) for row in rows]}
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")
    return path


def _grid(lo: float, hi: float, n: int) -> list[float]:
    step = (hi - lo) / (n - 1)
    return [lo + step * i for i in range(n)]


# ---------------------------------------------------------------- box-figure

def _cmd_box_figure(merged: Mapping[str, object], cfg: RunConfig) -> int:
    a = float(merged["a"])
    mass = float(merged["mass"])
    ratios = [float(tok) for tok in str(merged["ratios"]).split(",") if tok]
    paths = []
    for n, ratio in enumerate(ratios, start=1):
        if not 1.0 <= ratio < 2.0:
            raise ValueError(
                f"ratio for n={n} must lie in [1, 2), got {ratio}")
        p_n = HBAR * n * math.pi / a
        sys = boxmode.BoxSystem(m=mass, a=a, p_particle=p_n / math.sqrt(ratio))
        mode = boxmode.make_mode(sys, n)
        slope0 = 1.0 + mode.b_sq / (mode.b_sq + 4.0)
        rows = []
        for x in _grid(0.0, a, cfg.grid_points):
            q = boxmode.trajectory_series(mode, x,
                                          boxmode.TrajectoryVariant.QUADRATIC)
            q_over_x = q / x if x > 0.0 else slope0
            rows.append((x, q, q_over_x, boxmode.field_value(mode, x),
                         boxmode.wavefunction(mode, sys, x) ** 2, x))
        inflections = [j * a / (2 * n) for j in range(1, 2 * n)]
        meta = {
            "a": a, "mass": mass, "n": n, "ratio": ratio,
            "b_sq": mode.b_sq, "g": mode.g_npf, "a_n": mode.a_n,
            "inflection_points_m": "[" + ", ".join(repr(v) for v in inflections) + "]",
        }
        columns = ("x:m", "q:m", "q_over_x:1", "chi:m", "psi_density:1/m",
                   "x_ref:m")
        paths.append(_write_table(cfg, f"box_figure_n{n}", meta, columns, rows))
    for path in paths:
        print(path)
    return 0


# ------------------------------------------------------------ osc-trajectory

def _cmd_osc_trajectory(merged: Mapping[str, object], cfg: RunConfig) -> int:
    alpha = float(merged["alpha"])
    n = int(merged["n"])
    mu = float(merged["mu"])
    if alpha <= 0.0:
        raise ValueError("alpha must be positive")
    omega0 = alpha * HBAR / mu
    cap_l = math.sqrt(101.0 / alpha)
    sys = oscillator.OscSystem(mu=mu, omega0=omega0, cap_l=cap_l)
    amplitude = merged["amplitude"]
    amp = float(amplitude) if amplitude is not None \
        else oscillator.amplitude_estimate(sys, n)
    mode = oscillator.make_mode(sys, n, amplitude=amp)
    r_max = min(cap_l, 5.0 / math.sqrt(alpha))
    xs = _grid(-r_max, r_max, cfg.grid_points)

    def integrand(s: float) -> float:
        return math.sqrt(1.0 + oscillator.trajectory_slope_sq(mode, sys, s)
                         / (4.0 * math.pi))

    rows = []
    acc = oracle.integrate(integrand, 0.0, xs[0])
    prev = xs[0]
    for r_bar in xs:
        acc += oracle.integrate(integrand, prev, r_bar)
        prev = r_bar
        rows.append((r_bar,
                     oscillator.trajectory(mode, sys, r_bar,
                                           oscillator.TrajectoryOrder.TWO_TERM),
                     oscillator.trajectory(mode, sys, r_bar,
                                           oscillator.TrajectoryOrder.THREE_TERM),
                     acc,
                     oscillator.radial_field(mode, sys, r_bar)))
    meta = {"alpha": alpha, "mu": mu, "omega0": omega0, "n": n,
            "amplitude": amp, "cap_l": cap_l}
    columns = ("r_bar:m", "q_two:m", "q_three:m", "q_oracle:m", "chi:m")
    path = _write_table(cfg, "osc_trajectory", meta, columns, rows)
    print(path)
    return 0


# ----------------------------------------------------------- hydrogen-figure

def _cmd_hydrogen_figure(merged: Mapping[str, object], cfg: RunConfig) -> int:
    z = float(merged["z"])
    mu = float(merged["mu"])
    a_ha = float(merged["a_ha"])
    sys = hydrogen.HydrogenSystem(z=z, mu=mu)
    r = float(merged["r"]) if merged["r"] is not None else sys.a0
    rows = []
    for theta in _grid(0.0, 2.0 * math.pi, cfg.grid_points):
        rows.append((theta,
                     hydrogen.orbit_2p(sys, a_ha, r, theta, "p0") / r,
                     hydrogen.orbit_2p(sys, a_ha, r, theta, "pPlusMinus1") / r))
    meta = {
        "z": z, "mu": mu, "r": r, "a_ha": a_ha,
        "p0_polar_diameter": hydrogen.orbit_2p(sys, a_ha, r, 0.0, "p0") / r,
        "p0_equatorial_diameter":
            hydrogen.orbit_2p(sys, a_ha, r, 0.5 * math.pi, "p0") / r,
        "pPlusMinus1_polar_diameter":
            hydrogen.orbit_2p(sys, a_ha, r, 0.0, "pPlusMinus1") / r,
        "pPlusMinus1_equatorial_diameter":
            hydrogen.orbit_2p(sys, a_ha, r, 0.5 * math.pi, "pPlusMinus1") / r,
    }
    columns = ("theta:rad", "q_over_r_p0:1", "q_over_r_pm1:1")
    path = _write_table(cfg, "hydrogen_figure", meta, columns, rows)
    print(path)
    return 0


# ------------------------------------------------------------------ spectrum

def _cmd_spectrum(merged: Mapping[str, object], cfg: RunConfig) -> int:
    a = float(merged["a"])
    mass = float(merged["mass"])
    eps = float(merged["eps"])
    ratio = float(merged["ratio"])
    levels = int(merged["levels"])
    if levels < 1:
        raise ValueError("levels must be at least 1")
    rows = []
    for n in range(1, levels + 1):
        p_n = HBAR * n * math.pi / a
        sys = boxmode.BoxSystem(m=mass, a=a, p_particle=p_n / math.sqrt(ratio))
        mode = boxmode.make_mode(sys, n)
        params = nonlinear.NonlinearParams(eps=eps, a_tilde=mode.a_n)
        e_nl = nonlinear.energy_levels(params, sys, n)
        rows.append((n, mode.e_n, e_nl, e_nl - mode.e_n))
    meta = {"a": a, "mass": mass, "eps": eps, "ratio": ratio,
            "levels": levels}
    columns = ("n:1", "e_linear:J", "e_nonlinear:J", "shift:J")
    path = _write_table(cfg, "spectrum", meta, columns, rows)
    print(path)
    return 0


# ---------------------------------------------------------------- flux-check

def _cmd_flux_check(merged: Mapping[str, object], cfg: RunConfig) -> int:
    a = float(merged["a"])
    mass = float(merged["mass"])
    sys = boxmode.BoxSystem(m=mass, a=a, p_particle=HBAR * math.pi / a)
    mode1 = timedep.bare_eigenmode(mass, a, 1)
    mode2 = timedep.bare_eigenmode(mass, a, 2)
    beat = timedep.Superposition.from_modes(
        sys, [(mode1, 1.0 + 0j), (mode2, 1.0 + 0j)])
    t0 = 0.1 * 2.0 * math.pi * HBAR / (mode2.e_n - mode1.e_n)
    h_x = a / 1e4
    h_t = h_x * mass / (HBAR * mode2.k_n)
    rows = []
    max_residual = 0.0
    for x in _grid(h_x, a - h_x, cfg.grid_points):
        j = timedep.flux(beat, x, t0)
        res = timedep.continuity_residual(beat, x, t0, h_x, h_t)
        max_residual = max(max_residual, abs(res))
        rows.append((x, j, res))
    meta = {
        "a": a, "mass": mass, "t": t0, "h_x": h_x, "h_t": h_t,
        "max_abs_residual": max_residual,
        "p_mean": timedep.expectation_p(beat, t0),
        "p_sq_mean": timedep.expectation_p2(beat, t0),
        "norm": timedep.norm(beat, t0),
    }
    columns = ("x:m", "flux:1/s", "continuity_residual:1/(m*s)")
    path = _write_table(cfg, "flux_check", meta, columns, rows)
    print(path)
    return 0


# -------------------------------------------------------------------- verify

def _cmd_verify(merged: Mapping[str, object], cfg: RunConfig) -> int:
    perturb = 0.01 if merged["inject_error"] else 0.0
    results = verification.run_acceptance_suite(perturb=perturb)
    payload = []
    for result in results:
        payload.append({
            "ident": result.ident,
            "description": result.description,
            "passed": result.passed,
            "checks": [{
                "label": rep.label,
                "value": rep.series_value,
                "reference": rep.oracle_value,
                "abs_dev": rep.abs_dev,
                "rel_dev": rep.rel_dev,
                "tolerance": rep.tolerance,
                "passed": rep.passed,
            } for rep in result.reports],
        })
    all_passed = all(result.passed for result in results)
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    report_path = out_dir / "verify_report.json"
    report_path.write_text(
        json.dumps({"passed": all_passed, "perturb": perturb,
                    "criteria": payload}, indent=2, sort_keys=True) + "\n",
        encoding="utf-8")
    for result in results:
        tag = "PASS" if result.passed else "FAIL"
        print(f"{tag} {result.ident}: {result.description}")
    print(report_path)
    return 0 if all_passed else 1


_COMMON_TABLE: dict[str, tuple[Callable[[str], object], object]] = {
    "grid": (int, 1000),
    "format": (str, "csv"),
    "out": (str, None),
}

_COMMANDS: dict[str, tuple[Callable[[Mapping[str, object], RunConfig], int],
                           dict[str, tuple[Callable[[str], object], object]]]] = {
    "box-figure": (_cmd_box_figure, {
        "a": (float, 2e-9),
        "mass": (float, ELECTRON_MASS),
        "ratios": (str, "1.5,1.45,1.40"),
    }),
    "osc-trajectory": (_cmd_osc_trajectory, {
        "alpha": (float, 1e20),
        "n": (int, 1),
        "mu": (float, ELECTRON_MASS),
        "amplitude": (float, None),
    }),
    "hydrogen-figure": (_cmd_hydrogen_figure, {
        "z": (float, 1.0),
        "mu": (float, ELECTRON_MASS),
        "a_ha": (float, 0.1),
        "r": (float, None),
    }),
    "spectrum": (_cmd_spectrum, {
        "a": (float, 2e-9),
        "mass": (float, ELECTRON_MASS),
        "eps": (float, 0.0),
        "ratio": (float, 1.5),
        "levels": (int, 5),
    }),
    "flux-check": (_cmd_flux_check, {
        "a": (float, 2e-9),
        "mass": (float, ELECTRON_MASS),
    }),
    "verify": (_cmd_verify, {
        "inject_error": (lambda s: s.lower() in ("1", "true", "yes"), False),
    }),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfield",
        description="Particle-field composite data sets and verification.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (_, table) in _COMMANDS.items():
        sub = subparsers.add_parser(name, help=f"run the {name} command")
        sub.add_argument("--config", help="flat key=value option file")
        sub.add_argument("--out", help="output directory (default: "
                                       "$OUTPUT_DIR or the working directory)")
        sub.add_argument("--format", choices=_FORMATS, help="output format")
        sub.add_argument("--grid", type=int, help="number of sample points")
        for key, (conv, _default) in table.items():
            flag = "--" + key.replace("_", "-")
            if key == "inject_error":
                sub.add_argument(flag, action="store_true", default=None,
                                 help="scale outputs by 1%% as a negative "
                                      "control; the run must then fail")
            else:
                sub.add_argument(flag, type=conv,
                                 help=f"{key} (default {_default})")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    runner, table = _COMMANDS[args.command]
    full_table = dict(_COMMON_TABLE)
    full_table.update(table)
    merged = _merge_options(args, full_table, parser)
    cfg = _run_config(merged, parser)
    try:
        return runner(merged, cfg)
    except (ValueError, oracle.QuadratureError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
