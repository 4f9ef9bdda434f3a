"""Minimal dependency-free SVG line charts.

Fixed 800x600 viewport, linear axes, one polyline per series, axis and
legend labels as text elements. Output is built with ElementTree, so it
is well-formed XML by construction.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass

__all__ = ["Series", "render_line_chart"]

WIDTH, HEIGHT = 800, 600
MARGIN_LEFT, MARGIN_RIGHT = 80, 170
MARGIN_TOP, MARGIN_BOTTOM = 50, 60

_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)


@dataclass(frozen=True)
class Series:
    label: str
    xs: tuple[float, ...]
    ys: tuple[float, ...]


def _padded_range(values) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if hi - lo < 1e-30:
        pad = max(abs(lo), 1.0) * 0.5
        return lo - pad, hi + pad
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def _ticks(lo: float, hi: float, n: int = 6) -> list[float]:
    step = (hi - lo) / (n - 1)
    return [lo + k * step for k in range(n)]


def render_line_chart(
    series: list[Series],
    x_label: str,
    y_label: str,
    title: str = "",
) -> str:
    """Render series to an SVG document string."""
    if not series:
        raise ValueError("no series to plot")
    for s in series:
        if len(s.xs) != len(s.ys) or len(s.xs) == 0:
            raise ValueError(f"series {s.label!r} needs equal-length non-empty x/y")

    x_lo, x_hi = _padded_range([x for s in series for x in s.xs])
    y_lo, y_hi = _padded_range([y for s in series for y in s.ys])
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(x: float) -> float:
        return MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return HEIGHT - MARGIN_BOTTOM - (y - y_lo) / (y_hi - y_lo) * plot_h

    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(WIDTH),
        height=str(HEIGHT),
        viewBox=f"0 0 {WIDTH} {HEIGHT}",
    )
    ET.SubElement(svg, "rect", x="0", y="0", width=str(WIDTH), height=str(HEIGHT), fill="white")

    # frame
    ET.SubElement(
        svg, "rect",
        x=str(MARGIN_LEFT), y=str(MARGIN_TOP),
        width=str(plot_w), height=str(plot_h),
        fill="none", stroke="#333333", attrib={"stroke-width": "1"},
    )

    # ticks and grid
    for xv in _ticks(x_lo, x_hi):
        px = sx(xv)
        ET.SubElement(
            svg, "line",
            x1=f"{px:.2f}", y1=str(HEIGHT - MARGIN_BOTTOM),
            x2=f"{px:.2f}", y2=str(HEIGHT - MARGIN_BOTTOM + 5),
            stroke="#333333",
        )
        label = ET.SubElement(
            svg, "text",
            x=f"{px:.2f}", y=str(HEIGHT - MARGIN_BOTTOM + 20),
            attrib={"text-anchor": "middle", "font-size": "12"},
        )
        label.text = f"{xv:.4g}"
    for yv in _ticks(y_lo, y_hi):
        py = sy(yv)
        ET.SubElement(
            svg, "line",
            x1=str(MARGIN_LEFT - 5), y1=f"{py:.2f}",
            x2=str(MARGIN_LEFT), y2=f"{py:.2f}",
            stroke="#333333",
        )
        label = ET.SubElement(
            svg, "text",
            x=str(MARGIN_LEFT - 10), y=f"{py + 4:.2f}",
            attrib={"text-anchor": "end", "font-size": "12"},
        )
        label.text = f"{yv:.4g}"

    # axis labels
    xl = ET.SubElement(
        svg, "text",
        x=str(MARGIN_LEFT + plot_w // 2), y=str(HEIGHT - 15),
        attrib={"text-anchor": "middle", "font-size": "14"},
    )
    xl.text = x_label
    yl = ET.SubElement(
        svg, "text",
        x="22", y=str(MARGIN_TOP + plot_h // 2),
        attrib={
            "text-anchor": "middle",
            "font-size": "14",
            "transform": f"rotate(-90 22 {MARGIN_TOP + plot_h // 2})",
        },
    )
    yl.text = y_label
    if title:
        tl = ET.SubElement(
            svg, "text",
            x=str(WIDTH // 2), y="28",
            attrib={"text-anchor": "middle", "font-size": "16"},
        )
        tl.text = title

    # series polylines plus legend
    for idx, s in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        points = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(s.xs, s.ys))
        ET.SubElement(
            svg, "polyline",
            points=points,
            fill="none",
            stroke=color,
            attrib={"stroke-width": "1.5"},
        )
        ly = MARGIN_TOP + 16 + 18 * idx
        ET.SubElement(
            svg, "line",
            x1=str(WIDTH - MARGIN_RIGHT + 12), y1=str(ly - 4),
            x2=str(WIDTH - MARGIN_RIGHT + 36), y2=str(ly - 4),
            stroke=color, attrib={"stroke-width": "1.5"},
        )
        entry = ET.SubElement(
            svg, "text",
            x=str(WIDTH - MARGIN_RIGHT + 42), y=str(ly),
            attrib={"font-size": "12"},
        )
        entry.text = s.label

    return ET.tostring(svg, encoding="unicode") + "\n"
