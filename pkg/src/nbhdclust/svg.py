"""Minimal SVG rendering of instances and solutions."""

from __future__ import annotations

import numpy as np

from .geometry import Ball, Disk, Interval, Segment

__all__ = ["render_svg", "write_svg"]

_W = 640


def _bounds(objects, centers, radius):
    pts = []
    for o in objects:
        if isinstance(o, (Disk, Ball)):
            c = np.asarray(o.center, dtype=np.float64)[:2]
            pts.append(c - o.radius)
            pts.append(c + o.radius)
        elif isinstance(o, Segment):
            pts.append(np.asarray(o.p)[:2])
            pts.append(np.asarray(o.q)[:2])
        elif isinstance(o, Interval):
            pts.append(np.array([o.lo, 0.0]))
            pts.append(np.array([o.hi, 0.0]))
    for c in centers:
        arr = np.atleast_1d(np.asarray(c, dtype=np.float64))
        if arr.size == 1:
            arr = np.array([arr[0], 0.0])
        pts.append(arr[:2] - radius)
        pts.append(arr[:2] + radius)
    if not pts:
        return np.zeros(2), np.ones(2)
    pts = np.asarray(pts)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    pad = 0.05 * max(float((hi - lo).max()), 1e-6)
    return lo - pad, hi + pad


def render_svg(objects, centers=(), radius: float = 0.0) -> str:
    """An SVG document showing objects, centers, and coverage circles."""
    centers = list(centers)
    lo, hi = _bounds(objects, centers, radius)
    span = hi - lo
    scale = _W / max(float(span.max()), 1e-9)
    height = max(int(span[1] * scale) + 1, 16)

    def sx(x):
        return (x - lo[0]) * scale

    def sy(y):
        # flip so +y is up
        return height - (y - lo[1]) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{height}" '
        f'viewBox="0 0 {_W} {height}">',
        f'<rect width="{_W}" height="{height}" fill="white"/>',
    ]
    for o in objects:
        if isinstance(o, (Disk, Ball)):
            c = np.asarray(o.center)[:2]
            parts.append(
                f'<circle cx="{sx(c[0]):.2f}" cy="{sy(c[1]):.2f}" '
                f'r="{o.radius * scale:.2f}" fill="#9ecae1" stroke="#3182bd"/>'
            )
        elif isinstance(o, Segment):
            p, q = np.asarray(o.p)[:2], np.asarray(o.q)[:2]
            parts.append(
                f'<line x1="{sx(p[0]):.2f}" y1="{sy(p[1]):.2f}" '
                f'x2="{sx(q[0]):.2f}" y2="{sy(q[1]):.2f}" '
                f'stroke="#3182bd" stroke-width="2"/>'
            )
        elif isinstance(o, Interval):
            parts.append(
                f'<line x1="{sx(o.lo):.2f}" y1="{sy(0.0):.2f}" '
                f'x2="{sx(o.hi):.2f}" y2="{sy(0.0):.2f}" '
                f'stroke="#3182bd" stroke-width="4"/>'
            )
    for c in centers:
        arr = np.atleast_1d(np.asarray(c, dtype=np.float64))
        if arr.size == 1:
            arr = np.array([arr[0], 0.0])
        x, y = sx(arr[0]), sy(arr[1])
        if radius > 0.0:
            parts.append(
                f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{radius * scale:.2f}" '
                f'fill="none" stroke="#e6550d" stroke-dasharray="4 3"/>'
            )
        parts.append(
            f'<path d="M {x - 5:.2f} {y:.2f} H {x + 5:.2f} M {x:.2f} '
            f'{y - 5:.2f} V {y + 5:.2f}" stroke="#e6550d" stroke-width="2"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def write_svg(path: str, objects, centers=(), radius: float = 0.0) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(objects, centers, radius))
