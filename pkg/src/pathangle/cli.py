"""Command-line front end.

Subcommands: probe, scan, critical-angle, optimize, audit, lhv-bound,
report. Angles are degrees at this boundary and radians everywhere
inside; JSON output carries every angle twice, as *_deg and *_rad.

Exit codes: 0 ok, 2 flag/usage error, 3 domain error, 4 unwritable
output, 5 audit gate failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .analysis import (
    GridSpec,
    audit_closed_vs_sim,
    critical_angle,
    critical_angle_closed_form,
    lhv_strategy_table,
    optimize_settings,
    scan,
)
from .correlations import (
    CANONICAL_SETTINGS,
    SettingsQuad,
    expectation_closed,
    expectation_from_distribution,
    joint_distribution_closed,
    joint_distribution_sim,
    s_canonical_sim,
)
from .optics import Scenario
from .states import concurrence_of_angle
from .svgplot import Series, render_line_chart
from .tables import scan_csv_lines

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4
EXIT_AUDIT = 5

_SCENARIOS = {"I": Scenario.SINGLE_BS, "II": Scenario.DOUBLE_BS}


def _rad(deg: float) -> float:
    return math.radians(deg)


def _deg(rad: float) -> float:
    return math.degrees(rad)


def _angle_fields(name: str, rad: float) -> dict:
    return {f"{name}_deg": _deg(rad), f"{name}_rad": rad}


def _settings_fields(settings: SettingsQuad) -> dict:
    out = {}
    for field_name in ("theta_l", "theta_r", "theta_l_prime", "theta_r_prime"):
        out.update(_angle_fields(field_name, getattr(settings, field_name)))
    return out


def _parse_settings(text: str) -> SettingsQuad:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("settings need four comma-separated degrees")
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad settings value: {exc}") from None
    return SettingsQuad(*(_rad(v) for v in vals))


def _axis_deg(start: float, stop: float, step: float) -> list[float]:
    if step <= 0.0:
        raise ValueError(f"step must be positive, got {step!r}")
    if stop < start:
        raise ValueError(f"stop {stop!r} below start {start!r}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + k * step for k in range(count)]


def _require_format(args, allowed: tuple[str, ...]) -> str:
    fmt = args.format or allowed[0]
    if fmt not in allowed:
        raise _UsageError(
            f"format {fmt!r} not supported by {args.command!r} (allowed: {', '.join(allowed)})"
        )
    return fmt


class _UsageError(Exception):
    pass


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------- handlers

def _cmd_probe(args) -> tuple[str, int]:
    fmt = _require_format(args, ("json", "csv"))
    scenario = _SCENARIOS[args.scenario]
    alpha, gamma = _rad(args.alpha), _rad(args.gamma)
    tl, tr = _rad(args.theta_l), _rad(args.theta_r)

    d_sim = joint_distribution_sim(scenario, alpha, gamma, tl, tr)
    c = concurrence_of_angle(alpha)
    d_closed = joint_distribution_closed(scenario, c, gamma, tl, tr)
    e_sim = expectation_from_distribution(d_sim)
    e_closed = expectation_closed(scenario, c, gamma, tl, tr)

    names = ("p00", "p01", "p10", "p11")
    sim_vals = {n: getattr(d_sim, n) for n in names}
    closed_vals = {n: getattr(d_closed, n) for n in names}
    devs = {n: abs(sim_vals[n] - closed_vals[n]) for n in names}

    if fmt == "csv":
        header = ["scenario", "alpha_deg", "gamma_deg", "theta_l_deg", "theta_r_deg",
                  "concurrence"]
        row = [args.scenario, f"{args.alpha:.12g}", f"{args.gamma:.12g}",
               f"{args.theta_l:.12g}", f"{args.theta_r:.12g}", f"{c:.12g}"]
        for n in names:
            header.append(f"{n}_sim")
            row.append(f"{sim_vals[n]:.12g}")
        for n in names:
            header.append(f"{n}_closed")
            row.append(f"{closed_vals[n]:.12g}")
        for n in names:
            header.append(f"{n}_deviation")
            row.append(f"{devs[n]:.12g}")
        header += ["e_sim", "e_closed", "expectation_deviation"]
        row += [f"{e_sim:.12g}", f"{e_closed:.12g}", f"{abs(e_sim - e_closed):.12g}"]
        return ",".join(header) + "\n" + ",".join(row) + "\n", EXIT_OK

    payload = {
        "scenario": args.scenario,
        **_angle_fields("alpha", alpha),
        **_angle_fields("gamma", gamma),
        **_angle_fields("theta_l", tl),
        **_angle_fields("theta_r", tr),
        "concurrence": c,
        "probabilities_sim": sim_vals,
        "probabilities_closed": closed_vals,
        "probability_deviation": devs,
        "expectation_sim": e_sim,
        "expectation_closed": e_closed,
        "expectation_deviation": abs(e_sim - e_closed),
    }
    return _json_text(payload), EXIT_OK


def _cmd_scan(args) -> tuple[str, int]:
    fmt = _require_format(args, ("csv", "json", "svg"))
    scenario = _SCENARIOS[args.scenario]
    alpha_deg = _axis_deg(args.alpha_start, args.alpha_stop, args.alpha_step)
    gamma_deg = _axis_deg(args.gamma_start, args.gamma_stop, args.gamma_step)
    rows = scan(
        scenario,
        [_rad(a) for a in alpha_deg],
        [_rad(g) for g in gamma_deg],
        args.settings,
    )

    if fmt == "csv":
        return "\n".join(scan_csv_lines(rows, scenario)) + "\n", EXIT_OK

    if fmt == "json":
        payload = {
            "scenario": args.scenario,
            "settings": _settings_fields(args.settings),
            "rows": [
                {
                    **_angle_fields("alpha", r.alpha),
                    **_angle_fields("gamma", r.gamma),
                    "concurrence": r.concurrence,
                    "s_sim": r.s_sim,
                    "s_paper": r.s_paper,
                    "region": r.region,
                }
                for r in rows
            ],
        }
        return _json_text(payload), EXIT_OK

    # svg: one polyline per fixed-alpha series over gamma; if the gamma
    # axis is a single point, transpose to fixed-gamma series over alpha.
    by_first: dict[float, list] = {}
    if len(gamma_deg) > 1 or len(alpha_deg) == 1:
        for r in rows:
            by_first.setdefault(r.alpha, []).append(r)
        series = [
            Series(
                label=f"alpha = {_deg(a):.4g} deg",
                xs=tuple(_deg(r.gamma) for r in group),
                ys=tuple(r.s_sim for r in group),
            )
            for a, group in by_first.items()
        ]
        x_label = "geometric phase (deg)"
    else:
        for r in rows:
            by_first.setdefault(r.gamma, []).append(r)
        series = [
            Series(
                label=f"gamma = {_deg(g):.4g} deg",
                xs=tuple(_deg(r.alpha) for r in group),
                ys=tuple(r.s_sim for r in group),
            )
            for g, group in by_first.items()
        ]
        x_label = "production angle (deg)"
    svg = render_line_chart(
        series, x_label, "S (simulated)",
        title=f"scenario {args.scenario} scan",
    )
    return svg, EXIT_OK


def _cmd_critical_angle(args) -> tuple[str, int]:
    _require_format(args, ("json",))
    a_c = critical_angle(args.tolerance)
    closed = critical_angle_closed_form()
    payload = {
        "alpha_c_deg": _deg(a_c),
        "alpha_c_rad": a_c,
        "closed_form_deg": _deg(closed),
        "closed_form_rad": closed,
        "bisection_vs_closed_form_rad": abs(a_c - closed),
        "concurrence_at_critical": concurrence_of_angle(a_c),
        "s_at_critical": s_canonical_sim(Scenario.DOUBLE_BS, a_c, 0.0).s,
        "s_at_critical_single_bs": s_canonical_sim(Scenario.SINGLE_BS, a_c, 0.0).s,
        "s_at_critical_double_bs": s_canonical_sim(Scenario.DOUBLE_BS, a_c, 0.0).s,
        "tolerance_rad": args.tolerance,
    }
    return _json_text(payload), EXIT_OK


def _cmd_optimize(args) -> tuple[str, int]:
    _require_format(args, ("json",))
    scenario = _SCENARIOS[args.scenario]
    report = optimize_settings(
        scenario, _rad(args.alpha), _rad(args.gamma),
        coarse_steps=args.coarse, refine_rounds=args.rounds,
    )
    payload = {
        "scenario": args.scenario,
        "method": report.method.value,
        **_angle_fields("alpha", report.alpha),
        **_angle_fields("gamma", report.gamma),
        "concurrence": concurrence_of_angle(report.alpha),
        "s_max": report.s,
        "region": report.region.value,
        "settings": _settings_fields(report.settings),
        "coarse_steps": args.coarse,
        "refine_rounds": args.rounds,
    }
    return _json_text(payload), EXIT_OK


def _worst_point_fields(point: dict) -> dict:
    out = {}
    for key, value in point.items():
        out.update(_angle_fields(key, value))
    return out


def _cmd_audit(args) -> tuple[str, int]:
    _require_format(args, ("json",))
    scenario = _SCENARIOS[args.scenario]
    report = audit_closed_vs_sim(scenario, GridSpec.regular(args.steps))
    payload = {
        "scenario": args.scenario,
        "grid": report.grid,
        "probabilities": {
            "max_abs_deviation": report.probabilities.max_abs_deviation,
            "worst_point": _worst_point_fields(report.probabilities.worst_point),
        },
        "expectations": {
            "max_abs_deviation": report.expectations.max_abs_deviation,
            "worst_point": _worst_point_fields(report.expectations.worst_point),
        },
        "s_values": {
            "max_abs_deviation": report.s_values.max_abs_deviation,
            "worst_point": _worst_point_fields(report.s_values.worst_point),
            "note": "informational only; never gates the exit code",
        },
        "gate": 1e-10,
        "passed": report.passed,
    }
    return _json_text(payload), EXIT_OK if report.passed else EXIT_AUDIT


def _cmd_lhv_bound(args) -> tuple[str, int]:
    fmt = _require_format(args, ("json", "csv"))
    table = lhv_strategy_table()
    max_s = max(row["s"] for row in table)
    if fmt == "csv":
        lines = ["a,a_prime,b,b_prime,s"]
        lines += [f"{r['a']},{r['a_prime']},{r['b']},{r['b_prime']},{r['s']}" for r in table]
        return "\n".join(lines) + "\n", EXIT_OK
    return _json_text({"strategies": table, "count": len(table), "max": max_s}), EXIT_OK


def _cmd_report(args) -> tuple[str, int]:
    _require_format(args, ("json",))
    from .figures import write_report  # matplotlib import deferred to use

    files = write_report(args.out_dir)
    return _json_text({"directory": args.out_dir, "files": files}), EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="-", metavar="PATH",
                        help="output path, or - for stdout (default)")
    common.add_argument("--format", choices=("csv", "json", "svg"), default=None,
                        help="output format (default depends on the command)")

    parser = argparse.ArgumentParser(
        prog="pathangle",
        description="Bell correlations of production-angle path-entangled "
                    "states in Mach-Zehnder setups with geometric-phase control.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("probe", parents=[common],
                       help="joint probabilities and E at one parameter point")
    p.add_argument("--scenario", choices=("I", "II"), required=True)
    p.add_argument("--alpha", type=float, required=True, help="production angle, deg")
    p.add_argument("--gamma", type=float, default=0.0, help="geometric phase, deg")
    p.add_argument("--theta-l", type=float, default=0.0, help="left retarder, deg")
    p.add_argument("--theta-r", type=float, default=0.0, help="right retarder, deg")
    p.set_defaults(handler=_cmd_probe)

    p = sub.add_parser("scan", parents=[common],
                       help="S over an (alpha, gamma) grid; csv, json or svg")
    p.add_argument("--scenario", choices=("I", "II"), required=True)
    p.add_argument("--alpha-start", type=float, default=0.0)
    p.add_argument("--alpha-stop", type=float, default=90.0)
    p.add_argument("--alpha-step", type=float, default=1.0)
    p.add_argument("--gamma-start", type=float, default=0.0)
    p.add_argument("--gamma-stop", type=float, default=90.0)
    p.add_argument("--gamma-step", type=float, default=1.0)
    p.add_argument("--settings", type=_parse_settings,
                   default=CANONICAL_SETTINGS,
                   help="four retarder angles 'L,R,Lp,Rp' in deg "
                        "(default 0,45,90,135)")
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser("critical-angle", parents=[common],
                       help="bisection of the Bell-limit production angle")
    p.add_argument("--tolerance", type=float, default=1e-12,
                   help="bisection bracket width, rad")
    p.set_defaults(handler=_cmd_critical_angle)

    p = sub.add_parser("optimize", parents=[common],
                       help="search retarder settings maximizing S")
    p.add_argument("--scenario", choices=("I", "II"), required=True)
    p.add_argument("--alpha", type=float, required=True, help="production angle, deg")
    p.add_argument("--gamma", type=float, default=0.0, help="geometric phase, deg")
    p.add_argument("--coarse", type=int, default=24, help="coarse grid steps per axis")
    p.add_argument("--rounds", type=int, default=3, help="refinement sweeps")
    p.set_defaults(handler=_cmd_optimize)

    p = sub.add_parser("audit", parents=[common],
                       help="closed-form vs pipeline deviations over a grid")
    p.add_argument("--scenario", choices=("I", "II"), required=True)
    p.add_argument("--steps", type=int, default=20, help="grid points per axis (>= 8)")
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("lhv-bound", parents=[common],
                       help="deterministic local-strategy enumeration")
    p.set_defaults(handler=_cmd_lhv_bound)

    p = sub.add_parser("report", parents=[common],
                       help="write scan CSVs with matplotlib figures")
    p.add_argument("--out-dir", default="pathangle-report",
                   help="directory for the CSV/PNG pairs")
    p.set_defaults(handler=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        return EXIT_USAGE if code not in (0,) else EXIT_OK

    if args.command == "audit" and args.steps < 8:
        print("error: usage: --steps must be >= 8", file=sys.stderr)
        return EXIT_USAGE

    try:
        text, code = args.handler(args)
    except _UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: domain: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        if args.out == "-":
            sys.stdout.write(text)
        else:
            with open(args.out, "w", newline="\n") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    raise SystemExit(main())
