"""SVG rendering of planar curves, splines and circles.

Arcs are emitted as native SVG arc path commands; clothoid and elastica
segments become polylines whose chordal deviation stays below a fraction of
the viewport size.  Output is deterministic, which makes the documents
usable as golden files in tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curve_core import DiscreteCurve, RefinedCurve
from .errors import NonPlanarData
from .spline2d import ArcSegment, ClothoidSegment, ElasticaSegment, LineSegment, Spline


@dataclass(frozen=True)
class RenderStyle:
    stroke_width: float = 0.02
    curve_color: str = "#1f4e9c"
    spline_color: str = "#c03020"
    circle_color: str = "#3a9c3a"
    marker_radius: float = 0.035
    marker_color: str = "#202020"
    padding: float = 0.6
    # chordal deviation budget for sampled segments, as a fraction of viewport
    chord_tol_frac: float = 0.001

    def __post_init__(self):
        if self.stroke_width <= 0 or self.marker_radius <= 0 or self.padding < 0:
            raise ValueError("style dimensions must be positive")


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _require_planar(points: np.ndarray) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.shape[1] == 3:
        if np.max(np.abs(pts[:, 2])) > 1e-12:
            raise NonPlanarData("SVG rendering requires planar data")
        pts = pts[:, :2]
    return pts


def _bounds_of(chunks):
    pts = np.vstack(chunks) if chunks else np.zeros((1, 2))
    return pts.min(axis=0), pts.max(axis=0)


def _polyline_path(pts: np.ndarray, close: bool) -> str:
    cmds = [f"M {_fmt(pts[0, 0])} {_fmt(-pts[0, 1])}"]
    for p in pts[1:]:
        cmds.append(f"L {_fmt(p[0])} {_fmt(-p[1])}")
    if close:
        cmds.append("Z")
    return " ".join(cmds)


def _segment_path(seg, start_cmd: bool, tol: float) -> str:
    if isinstance(seg, LineSegment):
        p0 = seg.start
        p1 = seg.point_at(seg.length)
        head = f"M {_fmt(p0[0])} {_fmt(-p0[1])} " if start_cmd else ""
        return head + f"L {_fmt(p1[0])} {_fmt(-p1[1])}"
    if isinstance(seg, ArcSegment):
        p0 = seg.point_at(0.0)
        p1 = seg.point_at(seg.length)
        large = 1 if abs(seg.sweep) > math.pi else 0
        # y-flip reverses the sweep sense
        sweep_flag = 0 if seg.sweep > 0 else 1
        head = f"M {_fmt(p0[0])} {_fmt(-p0[1])} " if start_cmd else ""
        return head + (
            f"A {_fmt(seg.radius)} {_fmt(seg.radius)} 0 {large} {sweep_flag} "
            f"{_fmt(p1[0])} {_fmt(-p1[1])}"
        )
    pts = seg.polyline(tol)
    path = _polyline_path(pts, close=False)
    return path if start_cmd else path[path.index("L") :]


def render_svg(
    curves=(),
    splines=(),
    circles=(),
    style: RenderStyle | None = None,
    width: int = 480,
) -> str:
    """Compose an SVG 1.1 document.

    ``curves``: DiscreteCurve/RefinedCurve instances drawn as polylines with
    point markers; ``splines``: Spline instances; ``circles``: (center,
    radius) pairs.  3D input raises NonPlanarData.
    """
    style = style or RenderStyle()
    chunks = []
    curve_pts = []
    for c in curves:
        pts = _require_planar(c.points)
        curve_pts.append((pts, getattr(c, "closed", False)))
        chunks.append(pts)
    spline_paths = []
    for sp in splines:
        for seg in sp.segments:
            chunks.append(seg.polyline(1e-3))
    for center, radius in circles:
        center = np.asarray(center, dtype=float)
        chunks.append(center + np.array([[radius, 0], [-radius, 0], [0, radius], [0, -radius]]))

    lo, hi = _bounds_of(chunks)
    pad = style.padding if style.padding > 0 else 0.05 * max(float(np.max(hi - lo)), 1e-9)
    span = np.maximum(hi - lo + 2 * pad, 1e-9)
    tol = style.chord_tol_frac * float(np.max(span))

    for sp in splines:
        if not sp.segments:
            continue
        parts = []
        for i, seg in enumerate(sp.segments):
            parts.append(_segment_path(seg, start_cmd=(i == 0), tol=tol))
        spline_paths.append(" ".join(parts))

    height = int(round(width * span[1] / span[0])) if span[0] > 0 else width
    view = f"{_fmt(lo[0] - pad)} {_fmt(-(hi[1] + pad))} {_fmt(span[0])} {_fmt(span[1])}"
    sw = style.stroke_width * float(np.max(span))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="{view}">',
    ]
    for center, radius in circles:
        cx, cy = np.asarray(center, dtype=float)
        out.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(-cy)}" r="{_fmt(radius)}" fill="none" '
            f'stroke="{style.circle_color}" stroke-width="{_fmt(sw)}"/>'
        )
    for pts, closed in curve_pts:
        out.append(
            f'<path d="{_polyline_path(pts, closed)}" fill="none" '
            f'stroke="{style.curve_color}" stroke-width="{_fmt(sw)}"/>'
        )
        for p in pts:
            out.append(
                f'<circle cx="{_fmt(p[0])}" cy="{_fmt(-p[1])}" '
                f'r="{_fmt(style.marker_radius * float(np.max(span)))}" '
                f'fill="{style.marker_color}"/>'
            )
    for path in spline_paths:
        out.append(
            f'<path d="{path}" fill="none" stroke="{style.spline_color}" '
            f'stroke-width="{_fmt(sw)}"/>'
        )
    out.append("</svg>")
    return "\n".join(out)
