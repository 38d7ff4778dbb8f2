"""Three orthographic projections of a point cloud and its fitted line, as SVG."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from pathlib import Path

import numpy as np

from linefit3d.fitter import FitResult
from linefit3d.nonlinearity import PointCloud

PANEL = 320.0
MARGIN = 24.0
LEGEND_HEIGHT = 56.0
POINT_RADIUS = 3.0
# fraction of the bounding box added in total along each axis
INFLATE = 0.10

PROJECTIONS = (("xy", 0, 1), ("xz", 0, 2), ("yz", 1, 2))


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def plot_box(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    lo = points.min(axis=0)
    hi = points.max(axis=0)
    extent = hi - lo
    fallback = 0.5 * INFLATE * max(float(extent.max()), 1.0)
    pad = np.where(extent > 0, 0.5 * INFLATE * extent, fallback)
    return lo - pad, hi + pad


def clip_line(origin: np.ndarray, direction: np.ndarray, lo: np.ndarray, hi: np.ndarray):
    """Segment of the line ``origin + direction*t`` inside the box, or None."""
    t0, t1 = -math.inf, math.inf
    for k in range(3):
        if direction[k] == 0.0:
            if not lo[k] <= origin[k] <= hi[k]:
                return None
            continue
        ta = (lo[k] - origin[k]) / direction[k]
        tb = (hi[k] - origin[k]) / direction[k]
        t0 = max(t0, min(ta, tb))
        t1 = min(t1, max(ta, tb))
    if t0 > t1:
        return None
    return origin + direction * t0, origin + direction * t1


class _Panel:
    """Maps two world coordinates into one panel's pixel frame (y up)."""

    def __init__(self, u: int, v: int, lo: np.ndarray, hi: np.ndarray):
        self.u, self.v = u, v
        du, dv = hi[u] - lo[u], hi[v] - lo[v]
        inner = PANEL - 2 * MARGIN
        self.scale = inner / max(du, dv)
        self.cu = 0.5 * (lo[u] + hi[u])
        self.cv = 0.5 * (lo[v] + hi[v])

    def __call__(self, p) -> tuple[float, float]:
        x = PANEL / 2 + (p[self.u] - self.cu) * self.scale
        y = PANEL / 2 - (p[self.v] - self.cv) * self.scale
        return x, y


def render_svg(cloud, result: FitResult) -> str:
    cloud = PointCloud.coerce(cloud)
    pts = cloud.points
    lo, hi = plot_box(pts)
    segment = clip_line(result.centroid, result.direction, lo, hi)

    width, height = 3 * PANEL, PANEL + LEGEND_HEIGHT
    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=_fmt(width),
        height=_fmt(height),
        viewBox=f"0 0 {_fmt(width)} {_fmt(height)}",
    )
    for i, (name, u, v) in enumerate(PROJECTIONS):
        to_px = _Panel(u, v, lo, hi)
        g = ET.SubElement(svg, "g", id=name, transform=f"translate({_fmt(i * PANEL)},0)")
        ET.SubElement(
            g, "rect", x="0.5", y="0.5", width=_fmt(PANEL - 1), height=_fmt(PANEL - 1),
            fill="white", stroke="#999999",
        )
        label = ET.SubElement(g, "text", x="8", y="16", fill="#333333")
        label.set("font-size", "12")
        label.text = f"{name[0]} →, {name[1]} ↑"
        for p in pts:
            cx, cy = to_px(p)
            ET.SubElement(g, "circle", cx=_fmt(cx), cy=_fmt(cy), r=_fmt(POINT_RADIUS), fill="#1f77b4")
        if segment is not None:
            (x1, y1), (x2, y2) = to_px(segment[0]), to_px(segment[1])
            ET.SubElement(
                g, "line", x1=_fmt(x1), y1=_fmt(y1), x2=_fmt(x2), y2=_fmt(y2),
                stroke="#d62728",
            ).set("stroke-width", "1.5")

    flag = "" if result.is_unique else " (direction not unique)"
    lines = [
        f"n = {result.n_points}, rms distance = {result.rms_distance:.6g}",
        f"classification: {result.classification.value}{flag}",
    ]
    for k, text in enumerate(lines):
        t = ET.SubElement(svg, "text", x=_fmt(MARGIN), y=_fmt(PANEL + 20 + 18 * k), fill="#000000")
        t.set("font-size", "13")
        t.text = text
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"


def emit_svg(cloud, result: FitResult, path: str | Path) -> None:
    Path(path).write_text(render_svg(cloud, result), encoding="utf-8")
