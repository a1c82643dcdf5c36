"""Shared test utilities: small independent oracles.

Everything here is deliberately naive (enumeration, convex solves,
mask DP) so that library results are checked against code that shares
no logic with the implementation under test.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations, product

import numpy as np
import pytest
from scipy.optimize import minimize

from nbhdclust.geometry import dist_point_object


@pytest.fixture
def report(capsys):
    """Print a line past pytest's capture, for acceptance summaries."""

    def emit(line: str) -> None:
        with capsys.disabled():
            print(line)

    return emit


def min_edge_cover_size_exhaustive(vertices, edges) -> int:
    """Minimum number of edges touching every vertex, by mask DP."""
    idx = {v: i for i, v in enumerate(vertices)}
    full = (1 << len(vertices)) - 1
    em = [(idx[u], idx[v]) for u, v in edges if u in idx and v in idx]

    @lru_cache(maxsize=None)
    def go(covered: int) -> float:
        if covered == full:
            return 0
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        best = math.inf
        for a, b in em:
            if a == v or b == v:
                best = min(best, 1 + go(covered | (1 << a) | (1 << b)))
        return best

    out = go(0)
    go.cache_clear()
    return out


def max_matching_size_exhaustive(n: int, edges) -> int:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    @lru_cache(maxsize=None)
    def go(mask: int) -> int:
        free = ~mask & ((1 << n) - 1)
        if free == 0:
            return 0
        v = (free & -free).bit_length() - 1
        best = go(mask | (1 << v))  # leave v unmatched
        for u in adj[v]:
            if not mask & (1 << u):
                best = max(best, 1 + go(mask | (1 << v) | (1 << u)))
        return best

    out = go(0)
    go.cache_clear()
    return out


def _circumcenter_or_none(a, b, c):
    d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if abs(d) < 1e-12:
        return None
    ux = (
        (a @ a) * (b[1] - c[1]) + (b @ b) * (c[1] - a[1]) + (c @ c) * (a[1] - b[1])
    ) / d
    uy = (
        (a @ a) * (c[0] - b[0]) + (b @ b) * (a[0] - c[0]) + (c @ c) * (b[0] - a[0])
    ) / d
    return np.array([ux, uy])


def min_enclosing_circle(points, seed: int = 0):
    """Welzl's move-to-front algorithm; returns (center, radius)."""
    pts = [np.asarray(p, dtype=np.float64) for p in points]
    order = list(np.random.default_rng(seed).permutation(len(pts)))

    def inside(p, c, r):
        return np.linalg.norm(p - c) <= r * (1.0 + 1e-12) + 1e-12

    c, r = pts[order[0]].copy(), 0.0
    for i in range(1, len(order)):
        p = pts[order[i]]
        if inside(p, c, r):
            continue
        c, r = p.copy(), 0.0
        for j in range(i):
            q = pts[order[j]]
            if inside(q, c, r):
                continue
            c = 0.5 * (p + q)
            r = float(np.linalg.norm(p - c))
            for m in range(j):
                s = pts[order[m]]
                if inside(s, c, r):
                    continue
                cc = _circumcenter_or_none(p, q, s)
                if cc is None:
                    # collinear support: the two farthest span the circle
                    far = max(
                        ((p, q), (p, s), (q, s)),
                        key=lambda ab: np.linalg.norm(ab[0] - ab[1]),
                    )
                    cc = 0.5 * (far[0] + far[1])
                c = cc
                r = float(np.linalg.norm(p - c))
    return c, r


def one_center_balls(balls) -> float:
    """min over s of max_i dist(s, ball_i), by convex epigraph solve."""
    centers = np.asarray([b.center for b in balls], dtype=np.float64)
    radii = np.asarray([b.radius for b in balls], dtype=np.float64)
    if len(balls) == 1:
        return 0.0
    dim = centers.shape[1]

    def worst(s):
        return float(
            np.max(np.linalg.norm(centers - s[None, :], axis=1) - radii)
        )

    cons = []
    for i in range(len(balls)):
        def g(z, i=i):
            return z[dim] - np.linalg.norm(z[:dim] - centers[i]) + radii[i]

        cons.append({"type": "ineq", "fun": g})

    best = math.inf
    starts = [centers.mean(axis=0)] + [c for c in centers]
    for s0 in starts:
        z0 = np.concatenate([s0 + 1e-6, [worst(s0) + 1e-6]])
        res = minimize(
            lambda z: z[dim],
            z0,
            constraints=cons,
            method="SLSQP",
            options={"maxiter": 300, "ftol": 1e-12},
        )
        if res.x is not None:
            best = min(best, worst(res.x[:dim]))
    return max(0.0, best)


def ball_partition_oracle(balls, k: int) -> float:
    """Exact (to solver tolerance) k-center radius by partition enumeration."""
    n = len(balls)
    if k >= n:
        return 0.0
    best = math.inf
    for assign in product(range(k), repeat=n - 1):
        groups = [[balls[0]]] + [[] for _ in range(k - 1)]
        for i, g in enumerate(assign):
            groups[g].append(balls[i + 1])
        worst = 0.0
        for g in groups:
            if not g:
                continue
            worst = max(worst, one_center_balls(g))
            if worst >= best:
                break
        best = min(best, worst)
    return best


def min_stab_count_exhaustive(intervals, r: float) -> int:
    """Minimum points stabbing all intervals inflated by r (n <= ~10)."""
    ivs = [(iv.lo - r, iv.hi + r) for iv in intervals]
    cand = sorted({hi for _, hi in ivs})
    for size in range(1, len(ivs) + 1):
        for combo in combinations(cand, size):
            if all(any(lo <= x <= hi for x in combo) for lo, hi in ivs):
                return size
    return len(ivs)


# small graphs with a known minimum vertex cover size, all planar with
# maximum degree 3 (forest layouts, suitable for the disk gadget)
VC_GRAPHS = [
    ([(0, 1)], 1),
    ([(0, 1), (1, 2)], 1),
    ([(0, 1), (0, 2), (0, 3)], 1),
    ([(0, 1), (1, 2), (2, 3)], 2),
]
