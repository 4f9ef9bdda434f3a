"""Delimited-text formatting shared by the CLI and the report renderer."""

from __future__ import annotations

import math

from .analysis import ScanRow
from .optics import Scenario

__all__ = ["SCAN_CSV_HEADER", "scan_csv_lines", "write_text"]

_DEG = 180.0 / math.pi

SCAN_CSV_HEADER = "scenario,alpha_deg,gamma_deg,concurrence,s_sim,s_paper,region"


def scan_csv_lines(rows: list[ScanRow], scenario: Scenario) -> list[str]:
    """CSV lines for scan rows: 12 significant digits, LF, header first."""
    lines = [SCAN_CSV_HEADER]
    for r in rows:
        lines.append(
            f"{scenario.value},{r.alpha * _DEG:.12g},{r.gamma * _DEG:.12g},"
            f"{r.concurrence:.12g},{r.s_sim:.12g},{r.s_paper:.12g},{r.region}"
        )
    return lines


def write_text(path: str, lines: list[str]) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
