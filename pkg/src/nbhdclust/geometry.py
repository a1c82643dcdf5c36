"""Geometric primitives for clustering with convex neighborhoods.

The covered objects are pairwise disjoint convex regions: planar disks,
d-dimensional balls, planar line segments, and closed intervals on the
line.  This module provides the building blocks used everywhere else:
set distances between objects, point-to-object distances, hit tests,
additively weighted bisectors of disjoint disks, and the points on such
a bisector that are equidistant to a third disk.

Conventions
-----------
* Coordinates are float64; points are 1-d numpy arrays.
* Distances are Euclidean set distances; they are zero when the closed
  sets meet.
* A point s "hits" an object C at radius r when dist(s, C) <= r, i.e.
  when s lies in C inflated by a ball of radius r.
* Equality-style decisions use ``EQ_TOL`` (absolute); bisection of
  bisector events refines the curve parameter to ``ROOT_TOL``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "EQ_TOL",
    "ROOT_TOL",
    "Disk",
    "Ball",
    "Segment",
    "Interval",
    "Bisector",
    "GeometryError",
    "DimensionMismatchError",
    "as_point",
    "dimension",
    "dist_objects",
    "dist_point_object",
    "hits",
    "disk_bisector",
    "equidistant_point_on_bisector",
    "bisector_events",
]

EQ_TOL = 1e-9     # absolute tolerance for equality-style decisions
ROOT_TOL = 1e-12  # parameter width to which bisector events are refined

# Events on a bisector are searched only while the distance to the
# defining disks stays below WINDOW_FACTOR times the pairwise extent of
# the objects involved.  Any achievable covering radius is bounded by
# that extent, so points beyond the window can never matter.
WINDOW_FACTOR = 4.0
_EVENT_SAMPLES = 1025

# Radius differences at or below this threshold use the exact
# perpendicular-line representation instead of a degenerate hyperbola.
_LINE_RADIUS_TOL = 1e-11


class GeometryError(ValueError):
    """Invalid geometric input (degenerate or intersecting objects)."""


class DimensionMismatchError(GeometryError):
    """Operands live in different ambient dimensions."""


def as_point(coords, dim: int | None = None) -> np.ndarray:
    """Coerce coords to a float64 point, optionally checking its dimension."""
    p = np.atleast_1d(np.asarray(coords, dtype=np.float64))
    if p.ndim != 1:
        raise GeometryError(f"a point must be one-dimensional, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise GeometryError("point coordinates must be finite")
    if dim is not None and p.shape[0] != dim:
        raise DimensionMismatchError(f"expected a {dim}-dimensional point, got {p.shape[0]}")
    return p


@dataclass
class Disk:
    """Closed planar disk given by center and radius (radius >= 0)."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        self.center = as_point(self.center, 2)
        self.radius = float(self.radius)
        if not (self.radius >= 0.0 and math.isfinite(self.radius)):
            raise GeometryError(f"disk radius must be finite and >= 0, got {self.radius}")

    @property
    def dimension(self) -> int:
        return 2


@dataclass
class Ball:
    """Closed ball in d dimensions (d >= 2), center plus radius."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        self.center = as_point(self.center)
        if self.center.shape[0] < 2:
            raise GeometryError("a ball needs at least 2 coordinates; use Interval in 1D")
        self.radius = float(self.radius)
        if not (self.radius >= 0.0 and math.isfinite(self.radius)):
            raise GeometryError(f"ball radius must be finite and >= 0, got {self.radius}")

    @property
    def dimension(self) -> int:
        return int(self.center.shape[0])


@dataclass
class Segment:
    """Closed planar line segment with distinct endpoints p and q."""

    p: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        self.p = as_point(self.p, 2)
        self.q = as_point(self.q, 2)
        if float(np.hypot(*(self.q - self.p))) == 0.0:
            raise GeometryError("segment endpoints must be distinct")

    @property
    def dimension(self) -> int:
        return 2


@dataclass
class Interval:
    """Closed interval [lo, hi] on the line (lo <= hi)."""

    lo: float
    hi: float

    def __post_init__(self):
        self.lo = float(self.lo)
        self.hi = float(self.hi)
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise GeometryError("interval endpoints must be finite")
        if self.lo > self.hi:
            raise GeometryError(f"interval needs lo <= hi, got [{self.lo}, {self.hi}]")

    @property
    def dimension(self) -> int:
        return 1


ConvexObject = Disk | Ball | Segment | Interval


def dimension(obj) -> int:
    """Ambient dimension of a convex object."""
    return obj.dimension


def _check_same_dim(a, b) -> int:
    da, db = a.dimension, b.dimension
    if da != db:
        raise DimensionMismatchError(
            f"objects live in different dimensions: {da} vs {db}"
        )
    return da


def _point_segment_dist(s: np.ndarray, p: np.ndarray, q: np.ndarray) -> float:
    d = q - p
    denom = float(d @ d)
    t = float((s - p) @ d) / denom
    t = min(1.0, max(0.0, t))
    closest = p + t * d
    return float(np.hypot(*(s - closest)))


def _orient(a, b, c) -> float:
    return float((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def _segments_intersect(p1, q1, p2, q2) -> bool:
    d1 = _orient(p2, q2, p1)
    d2 = _orient(p2, q2, q1)
    d3 = _orient(p1, q1, p2)
    d4 = _orient(p1, q1, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True

    def on_seg(a, b, c):
        return (
            min(a[0], b[0]) - EQ_TOL <= c[0] <= max(a[0], b[0]) + EQ_TOL
            and min(a[1], b[1]) - EQ_TOL <= c[1] <= max(a[1], b[1]) + EQ_TOL
        )

    if d1 == 0 and on_seg(p2, q2, p1):
        return True
    if d2 == 0 and on_seg(p2, q2, q1):
        return True
    if d3 == 0 and on_seg(p1, q1, p2):
        return True
    if d4 == 0 and on_seg(p1, q1, q2):
        return True
    return False


def dist_point_object(s, c) -> float:
    """Euclidean distance from point s to convex object c (0 if s is in c)."""
    if isinstance(c, (Disk, Ball)):
        p = as_point(s, c.dimension)
        return max(0.0, float(np.linalg.norm(p - c.center)) - c.radius)
    if isinstance(c, Segment):
        p = as_point(s, 2)
        return _point_segment_dist(p, c.p, c.q)
    if isinstance(c, Interval):
        p = as_point(s, 1)
        x = float(p[0])
        return max(0.0, c.lo - x, x - c.hi)
    raise TypeError(f"unsupported object type: {type(c).__name__}")


def dist_objects(a, b) -> float:
    """Euclidean set distance between two convex objects.

    Zero when the closed sets intersect or touch.  Raises
    DimensionMismatchError when the operands live in different ambient
    dimensions, and TypeError for unsupported type combinations.
    """
    _check_same_dim(a, b)
    ball_like = (Disk, Ball)
    if isinstance(a, ball_like) and isinstance(b, ball_like):
        gap = float(np.linalg.norm(a.center - b.center)) - a.radius - b.radius
        return max(0.0, gap)
    if isinstance(a, Interval) and isinstance(b, Interval):
        return max(0.0, b.lo - a.hi, a.lo - b.hi)
    if isinstance(a, Segment) and isinstance(b, Segment):
        if _segments_intersect(a.p, a.q, b.p, b.q):
            return 0.0
        return min(
            _point_segment_dist(a.p, b.p, b.q),
            _point_segment_dist(a.q, b.p, b.q),
            _point_segment_dist(b.p, a.p, a.q),
            _point_segment_dist(b.q, a.p, a.q),
        )
    if isinstance(a, ball_like) and isinstance(b, Segment):
        return max(0.0, _point_segment_dist(a.center, b.p, b.q) - a.radius)
    if isinstance(a, Segment) and isinstance(b, ball_like):
        return dist_objects(b, a)
    raise TypeError(
        f"unsupported object pair: {type(a).__name__} / {type(b).__name__}"
    )


def hits(s, c, r: float) -> bool:
    """True iff point s lies within distance r of object c."""
    return dist_point_object(s, c) <= r


@dataclass
class Bisector:
    """Locus of points equidistant to two disjoint disks.

    For equal radii this is the perpendicular bisector line of the two
    centers; otherwise it is one branch of a hyperbola with foci at the
    centers whose focal-distance difference equals the radius difference.
    The branch opens toward the smaller-radius disk.

    The curve is parameterized by u in (-inf, inf) with u = 0 at the
    vertex (the midpoint of the boundary gap on the center segment); the
    distance to either defining disk is strictly increasing in |u|.

    Attributes
    ----------
    kind : "line" or "hyperbola".
    origin : midpoint of the two centers (focal-frame origin).
    axis : unit vector from the larger-radius center toward the smaller.
    a, b : focal-frame shape parameters of the branch; a = 0 and b = 1
        for the line, which is parameterized by arc length.
    focus_dist : half the center separation.
    disks : the defining pair, in the order given to :func:`disk_bisector`.
    pair : indices of the defining objects when known, else (-1, -1).
    """

    kind: str
    origin: np.ndarray
    axis: np.ndarray
    a: float
    b: float
    focus_dist: float
    disks: tuple
    pair: tuple = (-1, -1)
    _radius_sum_half: float = field(default=0.0, repr=False)

    @property
    def perp(self) -> np.ndarray:
        ax = self.axis
        return np.array([-ax[1], ax[0]])

    def point(self, u):
        """Point(s) on the bisector at parameter u (scalar or array)."""
        u = np.asarray(u, dtype=np.float64)
        if self.kind == "line":
            xi = np.zeros_like(u)
            eta = u
        else:
            xi = self.a * np.cosh(u)
            eta = self.b * np.sinh(u)
        pts = (
            self.origin
            + np.multiply.outer(xi, self.axis)
            + np.multiply.outer(eta, self.perp)
        )
        return pts

    def defining_distance(self, u):
        """Distance from point(u) to either defining disk."""
        u = np.asarray(u, dtype=np.float64)
        if self.kind == "line":
            return np.hypot(self.focus_dist, u) - self._radius_sum_half
        return self.focus_dist * np.cosh(u) - self._radius_sum_half

    def u_at_distance(self, dist: float) -> float:
        """Smallest u >= 0 whose defining distance reaches dist."""
        target = dist + self._radius_sum_half
        if self.kind == "line":
            return math.sqrt(max(0.0, target * target - self.focus_dist**2))
        x = target / self.focus_dist
        if x <= 1.0:
            return 0.0
        return math.acosh(x)

    @property
    def vertex_distance(self) -> float:
        return float(self.defining_distance(0.0))


def disk_bisector(a: Disk, b: Disk, pair=(-1, -1)) -> Bisector:
    """Bisector of two disjoint disks.

    Raises GeometryError when the disks intersect or touch.
    """
    delta = b.center - a.center
    center_dist = float(np.hypot(*delta))
    gap = center_dist - a.radius - b.radius
    if gap <= 0.0:
        raise GeometryError("bisector requires disjoint (non-touching) disks")
    origin = 0.5 * (a.center + b.center)
    rsh = 0.5 * (a.radius + b.radius)
    focus_dist = 0.5 * center_dist
    diff = a.radius - b.radius
    if abs(diff) <= _LINE_RADIUS_TOL:
        axis = delta / center_dist
        return Bisector(
            kind="line",
            origin=origin,
            axis=axis,
            a=0.0,
            b=1.0,
            focus_dist=focus_dist,
            disks=(a, b),
            pair=tuple(pair),
            _radius_sum_half=rsh,
        )
    # orient the axis from the larger disk toward the smaller one so the
    # branch sits at positive xi
    axis = delta / center_dist if diff > 0 else -delta / center_dist
    semi_a = 0.5 * abs(diff)
    semi_b = math.sqrt(focus_dist**2 - semi_a**2)
    return Bisector(
        kind="hyperbola",
        origin=origin,
        axis=axis,
        a=semi_a,
        b=semi_b,
        focus_dist=focus_dist,
        disks=(a, b),
        pair=tuple(pair),
        _radius_sum_half=rsh,
    )


def _dists_to_disk(pts: np.ndarray, disk: Disk) -> np.ndarray:
    d = np.hypot(pts[:, 0] - disk.center[0], pts[:, 1] - disk.center[1])
    return np.maximum(0.0, d - disk.radius)


def _pair_extent(objs) -> float:
    ext = 0.0
    for i, a in enumerate(objs):
        for b in objs[i + 1 :]:
            ext = max(
                ext,
                float(np.linalg.norm(a.center - b.center)) + a.radius + b.radius,
            )
    return ext


def _refine_event(bis: Bisector, third: Disk, lo: float, hi: float) -> float:
    cx, cy = float(third.center[0]), float(third.center[1])
    rr = third.radius
    ox, oy = float(bis.origin[0]), float(bis.origin[1])
    ax, ay = float(bis.axis[0]), float(bis.axis[1])
    px, py = -ay, ax
    line = bis.kind == "line"
    aa, bb = bis.a, bis.b
    fd, rsh = bis.focus_dist, bis._radius_sum_half

    def g(u: float) -> float:
        if line:
            x = ox + u * px
            y = oy + u * py
            dd = math.hypot(fd, u) - rsh
        else:
            xi = aa * math.cosh(u)
            eta = bb * math.sinh(u)
            x = ox + xi * ax + eta * px
            y = oy + xi * ay + eta * py
            dd = fd * math.cosh(u) - rsh
        d3 = max(0.0, math.hypot(x - cx, y - cy) - rr)
        return d3 - dd

    glo = g(lo)
    if glo == 0.0:
        return lo
    ghi = g(hi)
    if ghi == 0.0:
        return hi
    while hi - lo > ROOT_TOL:
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0.0:
            return mid
        if (gm > 0.0) == (glo > 0.0):
            lo, glo = mid, gm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def bisector_events(bis: Bisector, thirds, samples: int = _EVENT_SAMPLES):
    """Parameters u where the bisector is equidistant to a third disk.

    thirds is a sequence of disks, each disjoint from the defining pair.
    Returns a sorted, deduplicated list of (u, distance) with distance
    the common distance to the defining disks.  The search window covers
    every point whose defining distance is at most WINDOW_FACTOR times
    the pairwise extent of the objects involved; farther equidistant
    points exceed any achievable covering radius and are ignored.
    """
    results: list[tuple[float, float]] = []
    if not thirds:
        return results
    for third in thirds:
        for d0 in bis.disks:
            if dist_objects(d0, third) <= 0.0:
                raise GeometryError(
                    "equidistant search requires the third disk to be disjoint "
                    "from the defining pair"
                )
    extent = _pair_extent(list(bis.disks) + list(thirds))
    u_max = bis.u_at_distance(WINDOW_FACTOR * extent)
    if u_max <= 0.0:
        return results
    t = np.linspace(-1.0, 1.0, samples)
    u_grid = (t**3) * u_max
    pts = bis.point(u_grid)
    dd = bis.defining_distance(u_grid)
    u_tol = 1e-9 * max(1.0, u_max)
    for third in thirds:
        g = _dists_to_disk(pts, third) - dd
        s = np.sign(g)
        roots: list[float] = []
        exact = np.nonzero(g == 0.0)[0]
        for idx in exact:
            roots.append(float(u_grid[idx]))
        cross = np.nonzero(s[:-1] * s[1:] < 0)[0]
        for idx in cross:
            roots.append(
                _refine_event(bis, third, float(u_grid[idx]), float(u_grid[idx + 1]))
            )
        for u in roots:
            pt = bis.point(u)
            d3 = dist_point_object(pt, third)
            dref = float(bis.defining_distance(u))
            if abs(d3 - dref) > EQ_TOL:
                continue  # grid artifact; a true event re-verifies exactly
            results.append((u, dref))
    results.sort()
    dedup: list[tuple[float, float]] = []
    for u, d in results:
        if dedup and abs(u - dedup[-1][0]) <= u_tol:
            continue
        dedup.append((u, d))
    return dedup


def equidistant_point_on_bisector(bis: Bisector, third: Disk, samples: int = _EVENT_SAMPLES):
    """Events of a single third disk on the bisector; see bisector_events."""
    return bisector_events(bis, [third], samples=samples)
