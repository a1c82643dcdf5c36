"""Fully polynomial approximation for equal-radius disks, fixed k.

Covering equal disks reduces to k-center on their center points: a
center set S covers the disks at radius max(0, r - rho) exactly when it
covers the centers at radius r, rho the common disk radius.  Small
inputs are solved exactly over a cubic candidate family; past the size
threshold gamma * k / eps^2 the optimum is provably large next to rho,
so a Gonzalez-seeded grid snap loses only an eps fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _maskops
from .geometry import Disk, GeometryError
from .optimizer import Solution

__all__ = [
    "FptasConfig",
    "gonzalez",
    "exact_kcenter_points",
    "kcenter_points",
    "solve_unit_disks_small_k",
]


@dataclass(frozen=True)
class FptasConfig:
    # instances with n <= gamma * k / eps^2 take the exact branch
    gamma: float = 16.0
    # point counts up to this get the exact candidate family in
    # kcenter_points regardless of eps
    exact_point_cap: int = 16


_DEFAULT_CONFIG = FptasConfig()

_RADIUS_SPREAD_TOL = 1e-9


def _as_points(points) -> np.ndarray:
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] != 2:
        raise GeometryError("expected a nonempty array of planar points")
    if not np.all(np.isfinite(arr)):
        raise GeometryError("points must be finite")
    return arr


def gonzalez(points, k: int):
    """Greedy farthest-point seeding from index 0.

    Returns (indices, r) with r the covering radius of the picked
    centers; r is within a factor 2 of the k-center optimum.
    """
    pts = _as_points(points)
    n = pts.shape[0]
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    picked = [0]
    d = np.linalg.norm(pts - pts[0], axis=1)
    while len(picked) < min(k, n):
        i = int(np.argmax(d))
        picked.append(i)
        np.minimum(d, np.linalg.norm(pts - pts[i], axis=1), out=d)
    return picked, float(d.max())


def _min_cover(pts: np.ndarray, cands: np.ndarray, r: float, k: int):
    """Indices of <= k candidates covering all points within r, or None."""
    n = pts.shape[0]
    rows = []
    limit = r + 1e-12 * max(1.0, r)
    for lo in range(0, cands.shape[0], 4096):
        chunk = cands[lo : lo + 4096]
        d2 = np.square(chunk[:, None, :] - pts[None, :, :]).sum(axis=2)
        rows.append(d2 <= limit * limit)
    covers = np.concatenate(rows, axis=0)
    keep = np.flatnonzero(covers.any(axis=1))
    if keep.size == 0:
        return None
    covers = covers[keep]
    if not covers.any(axis=0).all():
        return None
    if n <= _maskops.MAX_MASK_OBJECTS:
        masks = _maskops.pack_masks(covers)
        uniq, first = np.unique(masks, return_index=True)
        chosen = _maskops.cover_choice([int(m) for m in uniq], n, k)
        if chosen is None:
            return None
        return [int(keep[first[c]]) for c in chosen]
    ints = []
    weights = 1 << np.arange(n, dtype=object)
    for row in covers:
        ints.append(int(sum(weights[row])))
    seen: dict[int, int] = {}
    for i, m in enumerate(ints):
        if m not in seen:
            seen[m] = i
    uniq_list = list(seen.keys())
    chosen = _maskops.cover_choice(uniq_list, n, k)
    if chosen is None:
        return None
    return [int(keep[seen[uniq_list[c]]]) for c in chosen]


def _circumcenter(a, b, c):
    """Center equidistant to three points, or None when collinear."""
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-14:
        return None
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return (ux, uy)


def _cover_radius(pts: np.ndarray, centers: np.ndarray) -> float:
    d2 = np.square(pts[:, None, :] - centers[None, :, :]).sum(axis=2)
    return float(np.sqrt(d2.min(axis=1).max()))


def exact_kcenter_points(points, k: int):
    """Optimal k-center of points; cost grows with the cube of n.

    Candidates are the points, pair midpoints, and triple circumcenters:
    every minimum enclosing circle of a subset is determined by at most
    three points, so the optimum is attained inside this family.
    Returns (centers, radius).
    """
    pts = _as_points(points)
    n = pts.shape[0]
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    uniq = np.unique(pts, axis=0)
    if uniq.shape[0] <= k:
        return [row.copy() for row in uniq], 0.0

    cands = [pts]
    mids = [(pts[i] + pts[j]) / 2.0 for i, j in combinations(range(n), 2)]
    if mids:
        cands.append(np.asarray(mids))
    circ = []
    for i, j, l in combinations(range(n), 3):
        cc = _circumcenter(pts[i], pts[j], pts[l])
        if cc is not None:
            circ.append(cc)
    if circ:
        cands.append(np.asarray(circ, dtype=np.float64))
    cands = np.concatenate(cands, axis=0)

    d2 = np.square(cands[:, None, :] - pts[None, :, :]).sum(axis=2)
    radii = np.unique(np.sqrt(d2))
    lo, hi = 0, radii.shape[0] - 1
    best = _min_cover(pts, cands, float(radii[hi]), k)
    if best is None:
        raise AssertionError("unreachable: the farthest distance always covers")
    while lo < hi:
        mid = (lo + hi) // 2
        got = _min_cover(pts, cands, float(radii[mid]), k)
        if got is None:
            lo = mid + 1
        else:
            hi = mid
            best = got
    centers = np.asarray([cands[i] for i in best])
    return [row.copy() for row in centers], _cover_radius(pts, centers)


def _grid_kcenter(pts: np.ndarray, k: int, eps: float):
    """(1 + eps)-approximate k-center by grid snapping.

    Gonzalez seeding bounds the optimum within [r_g / 2, r_g]; every
    optimal center lies within 2 r_g of a seed, and snapping it to a
    grid of spacing eps * r_g / (2 sqrt 2) moves it by at most
    eps * r_opt / 2.  A geometric radius sweep with ratio 1 + eps / 4
    absorbs the rest of the budget.
    """
    picked, r_g = gonzalez(pts, k)
    if r_g == 0.0:
        uniq = np.unique(pts, axis=0)
        return [row.copy() for row in uniq[:k]], 0.0

    step = eps * r_g / (2.0 * math.sqrt(2.0))
    half = 2.0 * r_g
    m = int(math.ceil(half / step))
    offs = np.arange(-m, m + 1, dtype=np.float64) * step
    gx, gy = np.meshgrid(offs, offs, indexing="ij")
    cell = np.stack([gx.ravel(), gy.ravel()], axis=1)
    grids = [pts[i] + cell for i in picked]
    grids.append(pts)
    cands = np.concatenate(grids, axis=0)

    ratio = 1.0 + eps / 4.0
    lo_r = r_g / 2.0
    steps = max(1, int(math.ceil(math.log(4.0) / math.log(ratio))) + 1)
    lo, hi = 0, steps
    best = _min_cover(pts, cands, r_g * (1.0 + 1e-9), k)
    if best is None:
        raise AssertionError("unreachable: seeds cover at the seeding radius")
    best_r = r_g
    while lo < hi:
        mid = (lo + hi) // 2
        r = lo_r * ratio**mid
        got = _min_cover(pts, cands, r, k)
        if got is None:
            lo = mid + 1
        else:
            hi = mid
            best, best_r = got, r
    centers = np.asarray([cands[i] for i in best])
    return [row.copy() for row in centers], _cover_radius(pts, centers)


def kcenter_points(points, k: int, eps: float, config: FptasConfig = _DEFAULT_CONFIG):
    """k-center on points: exact up to the size cap, grid-snapped past it.

    Returns (centers, radius) with radius <= (1 + eps) times optimal.
    """
    pts = _as_points(points)
    if eps <= 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    if pts.shape[0] <= config.exact_point_cap:
        return exact_kcenter_points(pts, k)
    return _grid_kcenter(pts, k, min(eps, 1.0))


def solve_unit_disks_small_k(
    disks, k: int, eps: float, config: FptasConfig = _DEFAULT_CONFIG
) -> Solution:
    """(1 + eps)-approximate covering of equal-radius disks.

    Below the size threshold gamma * k / eps^2 the reduction to point
    k-center is solved exactly.  Above it, n disjoint equal disks force
    the optimal radius to at least 2 rho / eps, so the grid
    approximation with budget eps / 3 on the point problem stays within
    (1 + eps) on the disk problem.
    """
    disks = list(disks)
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if not 0.0 < eps <= 1.0:
        raise ValueError(f"eps must be in (0, 1], got {eps}")
    if not disks:
        return Solution([], 0.0, "unit-disk-grid", 0)
    for d in disks:
        if not isinstance(d, Disk):
            raise GeometryError("solve_unit_disks_small_k expects planar disks")
    radii = [d.radius for d in disks]
    rho = radii[0]
    if max(radii) - min(radii) > _RADIUS_SPREAD_TOL:
        raise GeometryError(
            "disk radii differ by more than the supported tolerance; "
            "this solver requires equal radii"
        )

    centers = np.asarray([d.center for d in disks])
    e = eps
    n = len(disks)
    if n <= config.gamma * k / (e * e):
        sols, r_pts = exact_kcenter_points(centers, k)
        algorithm = "unit-disk-exact"
    else:
        sols, r_pts = _grid_kcenter(centers, k, e / 3.0)
        algorithm = "unit-disk-grid"
    radius = max(0.0, r_pts - rho)
    return Solution([np.asarray(s) for s in sols], radius, algorithm, 0)
