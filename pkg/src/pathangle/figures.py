"""Report rendering: scan CSVs with matching matplotlib figures.

Each report product is a pair of files written side by side: the raw
delimited data and a PNG rendering of it. Used by the `report` CLI
subcommand.
"""

from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .analysis import critical_angle_closed_form, scan
from .correlations import CANONICAL_SETTINGS
from .optics import Scenario
from .states import angle_of_concurrence
from .tables import scan_csv_lines, write_text

__all__ = ["write_report"]

_DEG = 180.0 / math.pi

# Concurrence levels traced in the gamma sweeps, strongest first.
_C_LEVELS = (1.0, 0.75, 0.5, 0.25, 0.0)


def _gamma_sweep_figure(scenario: Scenario, out_dir: str, stem: str, title: str) -> list[str]:
    gamma_axis = [math.radians(g) for g in range(0, 181)]
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    all_rows = []
    for c in _C_LEVELS:
        alpha = angle_of_concurrence(c)
        rows = scan(scenario, [alpha], gamma_axis, CANONICAL_SETTINGS)
        all_rows.extend(rows)
        gammas = [r.gamma * _DEG for r in rows]
        ax.plot(gammas, [r.s_sim for r in rows], label=f"C = {c:g} (simulated)")
        ax.plot(
            gammas,
            [r.s_paper for r in rows],
            linestyle="--",
            linewidth=0.9,
            label=f"C = {c:g} (closed form)",
        )
    ax.axhline(2.0, color="black", linewidth=0.8)
    ax.set_xlabel("geometric phase (deg)")
    ax.set_ylabel("S")
    ax.set_title(title)
    ax.legend(fontsize=7, ncol=2)
    fig.tight_layout()

    csv_path = os.path.join(out_dir, f"{stem}.csv")
    png_path = os.path.join(out_dir, f"{stem}.png")
    write_text(csv_path, scan_csv_lines(all_rows, scenario))
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]


def _alpha_sweep_figure(out_dir: str) -> list[str]:
    alpha_axis = [math.radians(0.25 * k) for k in range(0, 361)]
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    written = []
    rows_by_scenario = {}
    for scenario in (Scenario.SINGLE_BS, Scenario.DOUBLE_BS):
        rows = scan(scenario, alpha_axis, [0.0], CANONICAL_SETTINGS)
        rows_by_scenario[scenario] = rows
        label = "single BS" if scenario is Scenario.SINGLE_BS else "double BS"
        ax.plot(
            [r.alpha * _DEG for r in rows],
            [r.s_sim for r in rows],
            label=f"{label}, simulated",
            linewidth=1.4 if scenario is Scenario.DOUBLE_BS else 2.6,
            alpha=0.9 if scenario is Scenario.DOUBLE_BS else 0.45,
        )
    a_c = critical_angle_closed_form() * _DEG
    ax.axhline(2.0, color="black", linewidth=0.8)
    ax.axvline(a_c, color="gray", linestyle=":", linewidth=1.0)
    ax.axvline(90.0 - a_c, color="gray", linestyle=":", linewidth=1.0)
    ax.axvspan(a_c, 90.0 - a_c, color="tab:blue", alpha=0.08)
    ax.set_xlabel("production angle (deg)")
    ax.set_ylabel("S at zero geometric phase")
    ax.set_title("Bell-limit crossing of the production-angle sweep")
    ax.legend(fontsize=8)
    fig.tight_layout()

    for scenario, rows in rows_by_scenario.items():
        name = "single_bs" if scenario is Scenario.SINGLE_BS else "double_bs"
        csv_path = os.path.join(out_dir, f"s_vs_alpha_{name}.csv")
        write_text(csv_path, scan_csv_lines(rows, scenario))
        written.append(csv_path)
    png_path = os.path.join(out_dir, "s_vs_alpha.png")
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    written.append(png_path)
    return written


def write_report(out_dir: str) -> list[str]:
    """Render the full report into out_dir; returns the files written."""
    os.makedirs(out_dir, exist_ok=True)
    written = []
    written += _gamma_sweep_figure(
        Scenario.SINGLE_BS, out_dir, "s_vs_gamma_single_bs",
        "S vs geometric phase, single-BS setup",
    )
    written += _gamma_sweep_figure(
        Scenario.DOUBLE_BS, out_dir, "s_vs_gamma_double_bs",
        "S vs geometric phase, double-BS setup",
    )
    written += _alpha_sweep_figure(out_dir)
    return written
