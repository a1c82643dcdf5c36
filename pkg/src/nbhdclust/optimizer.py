"""Radius optimization driven by the constant-factor decider.

solve_disks binary-searches the canonical candidate radii of a planar
disk instance, maintaining an infeasible lower probe and a covering
upper probe; the decider contract pins the final cover's radius at no
more than (5 + 2*sqrt(3)) times optimal.

solve_balls_dd does the analogue in d dimensions, where the canonical
machinery is unavailable: a coarser candidate set (ball-to-center and
gap-midpoint distances) brackets the optimum within a constant spread,
and a geometric refinement grid brings the cover down to
(5 + 2*sqrt(3) + eps) times optimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .canonical import canonical_candidates, _dedupe_sorted
from .decider import COVER_FACTOR, decide
from .geometry import Ball, Disk, GeometryError, dist_objects, dist_point_object

__all__ = ["Solution", "solution_radius", "solve_disks", "solve_balls_dd"]


@dataclass
class Solution:
    """Centers plus the achieved covering radius.

    algorithm names the producing routine; decider_calls counts the
    feasibility probes spent (0 for algorithms that use none).
    """

    centers: list
    radius: float
    algorithm: str
    decider_calls: int = 0

    def centers_array(self) -> np.ndarray:
        return np.array([np.atleast_1d(c) for c in self.centers])


def solution_radius(objects, centers) -> float:
    """Largest distance from any object to its nearest center."""
    objects = list(objects)
    if not objects:
        return 0.0
    if not centers:
        raise ValueError("no centers given")
    worst = 0.0
    for obj in objects:
        best = min(dist_point_object(c, obj) for c in centers)
        worst = max(worst, best)
    return worst


def _trivial_zero(objects, algorithm: str) -> Solution:
    return Solution(
        centers=[o.center.copy() for o in objects],
        radius=0.0,
        algorithm=algorithm,
        decider_calls=0,
    )


def solve_disks(disks, k: int) -> Solution:
    """Cover disjoint planar disks with k centers, radius <= (5+2*sqrt(3)) * opt.

    Binary search over the canonical candidate radii: the lower probe
    stays infeasible, the upper probe keeps a cover; they end adjacent,
    and the optimum lies between them, so the final cover's query radius
    is at most optimal.
    """
    disks = list(disks)
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if not disks:
        return Solution([], 0.0, "disk-decider-search", 0)
    if k >= len(disks):
        # one center inside each object covers at radius exactly zero
        return _trivial_zero(disks, "disk-decider-search")

    cand = canonical_candidates(disks)
    radii = cand.radii[cand.radii > 0.0]
    if radii.size == 0:
        raise GeometryError("no positive candidate radius; instance degenerate")

    calls = 0

    def probe(r: float):
        nonlocal calls
        calls += 1
        return decide(disks, k, float(r))

    hi = len(radii) - 1
    best = probe(radii[hi])
    if not best.feasible:
        raise AssertionError(
            "decider violated its contract: largest candidate radius infeasible"
        )
    lo = -1
    while hi - lo > 1:
        mid = (hi + lo) // 2
        verdict = probe(radii[mid])
        if verdict.feasible:
            hi = mid
            best = verdict
        else:
            lo = mid

    achieved = solution_radius(disks, best.centers)
    return Solution(best.centers, achieved, "disk-decider-search", calls)


def _candidate_radii_balls(balls) -> np.ndarray:
    vals = [0.0]
    n = len(balls)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            vals.append(dist_point_object(balls[j].center, balls[i]))
    for i in range(n):
        for j in range(i + 1, n):
            vals.append(0.5 * dist_objects(balls[i], balls[j]))
    vals.sort()
    return _dedupe_sorted(vals)


def solve_balls_dd(balls, k: int, eps: float) -> Solution:
    """Cover disjoint d-dimensional balls with k centers.

    Radius at most (5 + 2*sqrt(3) + eps) times optimal.  The candidate
    set of ball-to-center and half-gap distances contains a value x with
    r_opt <= x <= (5+2*sqrt(3)) * r_opt; binary search brackets the
    optimum inside [x / (5+2*sqrt(3)), (5+2*sqrt(3)) * x], and an
    ascending geometric grid with ratio 1 + eps/(5+2*sqrt(3)) over that
    interval locates a cover at query radius within (1 + eps/(5+2*sqrt(3)))
    of optimal.
    """
    balls = list(balls)
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if eps <= 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    for b in balls:
        if not isinstance(b, (Disk, Ball)):
            raise GeometryError("solve_balls_dd expects disk/ball objects")
    if not balls:
        return Solution([], 0.0, "ball-decider-search", 0)
    if k >= len(balls):
        return _trivial_zero(balls, "ball-decider-search")

    radii = _candidate_radii_balls(balls)
    radii = radii[radii > 0.0]
    if radii.size == 0:
        raise GeometryError("no positive candidate radius; instance degenerate")

    calls = 0

    def probe(r: float):
        nonlocal calls
        calls += 1
        return decide(balls, k, float(r))

    hi = len(radii) - 1
    best = probe(radii[hi])
    if not best.feasible:
        raise AssertionError(
            "decider violated its contract: largest candidate radius infeasible"
        )
    best_r = float(radii[hi])
    lo = -1
    while hi - lo > 1:
        mid = (hi + lo) // 2
        verdict = probe(radii[mid])
        if verdict.feasible:
            hi = mid
            best = verdict
            best_r = float(radii[mid])
        else:
            lo = mid

    # refine: r_opt lies in [z / C, C * z]; scan the geometric grid
    # upward and keep the first cover found
    anchor = float(radii[hi])
    ratio = 1.0 + eps / COVER_FACTOR
    r = anchor / COVER_FACTOR
    top = COVER_FACTOR * anchor
    while r <= top * (1.0 + 1e-12):
        verdict = probe(r)
        if verdict.feasible:
            if r < best_r:
                best = verdict
                best_r = r
            break
        r *= ratio

    achieved = solution_radius(balls, best.centers)
    return Solution(best.centers, achieved, "ball-decider-search", calls)
