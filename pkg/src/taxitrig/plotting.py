"""SVG rendering of :class:`~taxitrig.series.Series`.

The output is plain SVG 1.1 built with :mod:`xml.etree`.  Each smooth
segment of each function is one ``<polyline class="curve">``, poles get a
dashed ``<line class="asymptote">``, and a JSON ``<metadata>`` block records
the data-to-pixel mapping so the vertices can be read back as (theta, value).
"""

from __future__ import annotations

import json
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Sequence

from .series import Series

SVG_NS = "http://www.w3.org/2000/svg"

COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")


@dataclass(frozen=True)
class Frame:
    """Maps data coordinates onto the pixel plot box."""

    x_range: tuple[float, float]
    y_range: tuple[float, float]
    box: tuple[float, float, float, float]  # left, top, width, height

    def px(self, theta: float) -> float:
        (x0, x1), (left, _, w, _) = self.x_range, self.box
        return left + (theta - x0) / (x1 - x0) * w

    def py(self, value: float) -> float:
        (y0, y1), (_, top, _, h) = self.y_range, self.box
        return top + (y1 - value) / (y1 - y0) * h

    def theta(self, px: float) -> float:
        (x0, x1), (left, _, w, _) = self.x_range, self.box
        return x0 + (px - left) / w * (x1 - x0)

    def value(self, py: float) -> float:
        (y0, y1), (_, top, _, h) = self.y_range, self.box
        return y1 - (py - top) / h * (y1 - y0)


def _fmt(v: float) -> str:
    return f"{v:.4f}".rstrip("0").rstrip(".")


def _y_range(series: Sequence[Series], y_limit: float) -> tuple[float, float]:
    values = [float(v) for s in series for _, v in s.points if v is not None]
    lo = max(min(values, default=-1.0), -y_limit)
    hi = min(max(values, default=1.0), y_limit)
    if hi - lo < 1e-9:
        lo, hi = lo - 1, hi + 1
    pad = 0.08 * (hi - lo)
    return lo - pad, hi + pad


def _tick_step(span: float, target: int) -> float:
    raw = span / target
    base = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if m * base >= raw:
            return m * base
    return 10 * base


def _ticks(lo: float, hi: float, step: float) -> list[float]:
    first = math.ceil(lo / step - 1e-9)
    out = []
    i = first
    while i * step <= hi + 1e-9:
        out.append(i * step)
        i += 1
    return out


def render_svg(
    series: Sequence[Series],
    *,
    width: int = 720,
    height: int = 440,
    y_limit: float = 4.0,
    title: str | None = None,
) -> str:
    if not series:
        raise ValueError("nothing to plot")
    x0 = float(series[0].points[0][0])
    x1 = float(series[0].points[-1][0])
    frame = Frame((x0, x1), _y_range(series, y_limit), (60.0, 36.0, width - 90.0, height - 86.0))
    left, top, w, h = frame.box

    ET.register_namespace("", SVG_NS)
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": str(width),
            "height": str(height),
            "viewBox": f"0 0 {width} {height}",
            "font-family": "sans-serif",
            "font-size": "12",
        },
    )
    names = ", ".join(s.function.value for s in series)
    ET.SubElement(root, "title").text = title or f"taxicab {names}"
    meta = {
        "functions": [s.function.value for s in series],
        "x_range": list(frame.x_range),
        "y_range": list(frame.y_range),
        "box": list(frame.box),
    }
    ET.SubElement(root, "metadata").text = json.dumps(meta)
    defs = ET.SubElement(root, "defs")
    clip = ET.SubElement(defs, "clipPath", {"id": "plot-area"})
    ET.SubElement(clip, "rect", {"x": _fmt(left), "y": _fmt(top), "width": _fmt(w), "height": _fmt(h)})
    ET.SubElement(root, "rect", {"width": str(width), "height": str(height), "fill": "white"})

    axes = ET.SubElement(root, "g", {"class": "axes", "stroke": "#444", "stroke-width": "1"})
    ET.SubElement(axes, "rect", {"x": _fmt(left), "y": _fmt(top), "width": _fmt(w), "height": _fmt(h), "fill": "none"})
    labels = ET.SubElement(root, "g", {"class": "labels", "fill": "#222"})
    y0, y1 = frame.y_range
    if y0 < 0 < y1:
        ET.SubElement(axes, "line", {"x1": _fmt(left), "x2": _fmt(left + w), "y1": _fmt(frame.py(0)), "y2": _fmt(frame.py(0)), "stroke": "#999"})
    if x0 < 0 < x1:
        ET.SubElement(axes, "line", {"x1": _fmt(frame.px(0)), "x2": _fmt(frame.px(0)), "y1": _fmt(top), "y2": _fmt(top + h), "stroke": "#999"})
    x_step = max(2.0, 2 * math.ceil(_tick_step(x1 - x0, 10) / 2))
    for t in _ticks(x0, x1, x_step):
        px = frame.px(t)
        ET.SubElement(axes, "line", {"x1": _fmt(px), "x2": _fmt(px), "y1": _fmt(top + h), "y2": _fmt(top + h + 5)})
        ET.SubElement(labels, "text", {"x": _fmt(px), "y": _fmt(top + h + 18), "text-anchor": "middle"}).text = f"{t:g}"
    for v in _ticks(y0, y1, _tick_step(y1 - y0, 6)):
        py = frame.py(v)
        ET.SubElement(axes, "line", {"x1": _fmt(left - 5), "x2": _fmt(left), "y1": _fmt(py), "y2": _fmt(py)})
        ET.SubElement(labels, "text", {"x": _fmt(left - 8), "y": _fmt(py + 4), "text-anchor": "end"}).text = f"{v:g}"
    ET.SubElement(labels, "text", {"x": _fmt(left + w / 2), "y": _fmt(height - 12), "text-anchor": "middle"}).text = "θ (t-radians)"

    curves = ET.SubElement(root, "g", {"class": "curves", "clip-path": "url(#plot-area)", "fill": "none"})
    for i, s in enumerate(series):
        color = COLORS[i % len(COLORS)]
        for theta in s.asymptotes:
            px = _fmt(frame.px(float(theta)))
            ET.SubElement(
                curves,
                "line",
                {
                    "class": f"asymptote {s.function.value}",
                    "x1": px, "x2": px, "y1": _fmt(top), "y2": _fmt(top + h),
                    "stroke": color, "stroke-width": "1", "stroke-dasharray": "5 4", "opacity": "0.6",
                },
            )
        for j, run in enumerate(s.smooth_segments()):
            pts = " ".join(f"{_fmt(frame.px(float(t)))},{_fmt(frame.py(float(v)))}" for t, v in run)
            ET.SubElement(
                curves,
                "polyline",
                {
                    "class": f"curve {s.function.value}",
                    "id": f"{s.function.value}-{j}",
                    "points": pts,
                    "stroke": color,
                    "stroke-width": "2",
                    "stroke-linejoin": "round",
                },
            )

    legend = ET.SubElement(root, "g", {"class": "legend"})
    for i, s in enumerate(series):
        ly = top + 14 + 16 * i
        lx = left + w - 60
        ET.SubElement(legend, "line", {"x1": _fmt(lx), "x2": _fmt(lx + 18), "y1": _fmt(ly - 4), "y2": _fmt(ly - 4), "stroke": COLORS[i % len(COLORS)], "stroke-width": "2"})
        ET.SubElement(legend, "text", {"x": _fmt(lx + 24), "y": _fmt(ly)}).text = s.function.value

    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def write_svg(path, series: Sequence[Series], **kwargs) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_svg(series, **kwargs))


def read_curves(svg_text: str) -> dict[str, list[list[tuple[float, float]]]]:
    """Recover the data-space vertices of every curve, keyed by function."""
    root = ET.fromstring(svg_text)
    ns = {"svg": SVG_NS}
    meta = json.loads(root.find("svg:metadata", ns).text)
    frame = Frame(tuple(meta["x_range"]), tuple(meta["y_range"]), tuple(meta["box"]))
    out: dict[str, list[list[tuple[float, float]]]] = {f: [] for f in meta["functions"]}
    for poly in root.iter(f"{{{SVG_NS}}}polyline"):
        fn = poly.get("class").split()[1]
        pts = []
        for pair in poly.get("points").split():
            px, py = (float(c) for c in pair.split(","))
            pts.append((frame.theta(px), frame.value(py)))
        out[fn].append(pts)
    return out


def read_asymptotes(svg_text: str) -> dict[str, list[float]]:
    root = ET.fromstring(svg_text)
    ns = {"svg": SVG_NS}
    meta = json.loads(root.find("svg:metadata", ns).text)
    frame = Frame(tuple(meta["x_range"]), tuple(meta["y_range"]), tuple(meta["box"]))
    out: dict[str, list[float]] = {f: [] for f in meta["functions"]}
    for line in root.iter(f"{{{SVG_NS}}}line"):
        cls = (line.get("class") or "").split()
        if cls and cls[0] == "asymptote":
            out[cls[1]].append(frame.theta(float(line.get("x1"))))
    return out
