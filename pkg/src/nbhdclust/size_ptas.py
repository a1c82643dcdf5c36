"""Size-approximate covering via hitting sets of inflated regions.

A set of centers covers every disk at radius r exactly when it hits
every disk inflated by r, so minimum covering is minimum hitting of a
family of fat pseudo-disk regions.  A b-swap local search over the
canonical candidate points approximates that hitting set; binary search
over the canonical radii then yields at most (1 + eps) * k centers whose
radius is no worse than the true k-center optimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .canonical import canonical_candidates
from .geometry import Disk, GeometryError, dist_objects, dist_point_object
from .optimizer import Solution, solution_radius

__all__ = [
    "InflatedRegion",
    "hitting_set_local_search",
    "solve_size",
    "DEFAULT_SWAP_SIZE",
]

DEFAULT_SWAP_SIZE = 3

# Touching inflated regions are nudged into proper intersection by a
# perturbation below half the smallest nonzero region gap, capped so the
# reported radius stays within equality tolerance of the query radius.
_ALPHA_CAP = 1e-9


@dataclass
class InflatedRegion:
    """A convex object inflated by radius r: the set of points hitting it."""

    index: int
    obj: object
    r: float

    def contains(self, point) -> bool:
        return dist_point_object(point, self.obj) <= self.r


def _region_masks(regions, candidates) -> list[int]:
    """Per-candidate bitmask of the regions it hits."""
    masks = []
    for p in candidates:
        m = 0
        for t, reg in enumerate(regions):
            if reg.contains(p):
                m |= 1 << t
        masks.append(m)
    return masks


def _cover_with(pool_masks, need: int, size: int) -> list | None:
    """Indices of <= size pool masks that OR over need, or None."""
    if need == 0:
        return []
    if size <= 0:
        return None
    bit = need & (-need)
    for i, mk in enumerate(pool_masks):
        if mk & bit:
            rest = _cover_with(pool_masks, need & ~mk, size - 1)
            if rest is not None:
                return [i] + rest
    return None


def hitting_set_local_search(regions, candidates, b: int = DEFAULT_SWAP_SIZE):
    """Points from candidates hitting every region, locally minimal.

    Greedy initialization (most unhit regions first, ties to the lowest
    candidate index), then improving swaps: while some <= b chosen points
    can be replaced by fewer candidates without losing any region, apply
    the replacement.  Raises ValueError naming the first region hit by no
    candidate.  The result never exceeds the greedy solution's size.
    """
    regions = list(regions)
    candidates = [np.asarray(p, dtype=np.float64) for p in candidates]
    if b < 1:
        raise ValueError(f"swap size must be >= 1, got {b}")
    nr = len(regions)
    if nr == 0:
        return []
    full = (1 << nr) - 1
    masks = _region_masks(regions, candidates)

    covered = 0
    for m in masks:
        covered |= m
    if covered != full:
        missing = next(t for t in range(nr) if not (covered >> t) & 1)
        raise ValueError(
            f"region {regions[missing].index} is hit by no candidate point"
        )

    # one candidate per distinct mask (the lowest index), dominated masks
    # dropped: any swap using a dominated mask works at least as well with
    # a dominating one
    first_of_mask: dict[int, int] = {}
    for i, m in enumerate(masks):
        if m not in first_of_mask:
            first_of_mask[m] = i
    distinct = sorted(first_of_mask.items(), key=lambda t: t[1])
    pool = []
    for m, i in distinct:
        if any(m != m2 and (m | m2) == m2 for m2, _ in distinct):
            continue
        pool.append((m, i))
    pool_masks = [m for m, _ in pool]

    # greedy start
    chosen: list[int] = []  # indices into pool
    uncov = full
    while uncov:
        gains = [(bin(mk & uncov).count("1"), -pool[t][1], t) for t, mk in enumerate(pool_masks)]
        gain, _, t = max(gains)
        if gain == 0:
            raise AssertionError("unreachable: coverage verified above")
        chosen.append(t)
        uncov &= ~pool_masks[t]

    # improving swaps: replace s chosen points by s - 1 pool points
    improved = True
    while improved:
        improved = False
        for s in range(1, min(b, len(chosen)) + 1):
            for out in combinations(range(len(chosen)), s):
                keep_mask = 0
                for t, idx in enumerate(chosen):
                    if t not in out:
                        keep_mask |= pool_masks[idx]
                need = full & ~keep_mask
                repl = _cover_with(pool_masks, need, s - 1)
                if repl is not None:
                    chosen = [idx for t, idx in enumerate(chosen) if t not in out]
                    chosen.extend(repl)
                    improved = True
                    break
            if improved:
                break

    picked = sorted(pool[t][1] for t in set(chosen))
    return [candidates[i] for i in picked]


def _perturbation(disks, r: float) -> float:
    """Inflation nudge making tangent regions properly intersect.

    Zero when no two inflated regions touch within tolerance; otherwise
    a quarter of the smallest nonzero region gap, capped at _ALPHA_CAP
    so reported radii stay within equality tolerance.
    """
    touch = False
    d_min = math.inf
    n = len(disks)
    for i in range(n):
        for j in range(i + 1, n):
            gap = dist_objects(disks[i], disks[j]) - 2.0 * r
            if abs(gap) <= 1e-9:
                touch = True
            elif gap > 1e-9:
                d_min = min(d_min, gap)
    if not touch:
        return 0.0
    if math.isinf(d_min):
        return _ALPHA_CAP
    return min(0.25 * d_min, _ALPHA_CAP)


def solve_size(disks, k: int, eps: float, b: int = DEFAULT_SWAP_SIZE) -> Solution:
    """At most (1 + eps) * k centers at radius <= the k-center optimum.

    Binary search over the canonical radii; at each probe the hitting-set
    local search runs on the regions inflated by the probe radius (plus a
    tangency perturbation).  Probes whose hitting set exceeds
    (1 + eps) * k move right, the rest move left; the final right probe
    is at most the true optimum because an oversized hitting set at some
    radius certifies that k centers cannot cover at that radius.
    """
    disks = list(disks)
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if eps <= 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    for d in disks:
        if not isinstance(d, Disk):
            raise GeometryError("solve_size expects planar disks")
    if not disks:
        return Solution([], 0.0, "size-local-search", 0)

    cand = canonical_candidates(disks)
    points = [cp.point for cp in cand.points]
    radii = cand.radii
    budget = (1.0 + eps) * k

    probes = 0

    def hit_at(r: float):
        nonlocal probes
        probes += 1
        # the relative floor absorbs the couple-of-ulp gap between a stored
        # candidate radius and the recomputed distance of its defining point;
        # without it the optimal probe can fail by one ulp and the search
        # overshoots to the next candidate radius
        alpha = max(_perturbation(disks, r), 1e-12 * max(1.0, r))
        regions = [InflatedRegion(i, d, r + alpha) for i, d in enumerate(disks)]
        return hitting_set_local_search(regions, points, b)

    hi = len(radii) - 1
    best = hit_at(radii[hi])
    if len(best) > budget:
        raise AssertionError(
            "local search exceeded the size budget at the largest candidate "
            "radius; instance beyond the search's reach"
        )
    lo = -1
    while hi - lo > 1:
        mid = (hi + lo) // 2
        h = hit_at(radii[mid])
        if len(h) > budget:
            lo = mid
        else:
            hi = mid
            best = h

    achieved = solution_radius(disks, best)
    return Solution(list(best), achieved, "size-local-search", probes)
