"""Exact interval clustering on the line.

Intervals may intersect here.  A greedy sweep decides feasibility of a
radius in linear time after sorting, and the optimal radius is found
with O(log n) sweeps by searching the sorted matrix of endpoint
differences: the optimum is either 0 or half the distance between two
interval endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .geometry import Interval
from .optimizer import Solution

__all__ = [
    "IntervalSet",
    "OneDVerdict",
    "decide_1d",
    "SortedMatrix",
    "build_sorted_matrix",
    "msearch",
    "NonMonotoneError",
    "solve_1d",
]


class NonMonotoneError(RuntimeError):
    """The feasibility predicate contradicted an earlier answer."""


@dataclass(frozen=True)
class OneDVerdict:
    feasible: bool
    centers: list
    query_radius: float

    def __bool__(self) -> bool:
        return self.feasible


class IntervalSet:
    """Closed intervals with both endpoint orders precomputed.

    by_left and by_right sort the intervals by left and right endpoint;
    left_pos_to_right_pos cross-links the two orders so the sweep can
    discard by left endpoint while scanning by right endpoint.
    """

    def __init__(self, intervals):
        items = []
        for iv in intervals:
            if isinstance(iv, Interval):
                items.append(iv)
            else:
                lo, hi = iv
                items.append(Interval(float(lo), float(hi)))
        self.intervals = items
        lo = np.asarray([iv.lo for iv in items], dtype=np.float64)
        hi = np.asarray([iv.hi for iv in items], dtype=np.float64)
        self.by_left = np.argsort(lo, kind="stable")
        self.by_right = np.argsort(hi, kind="stable")
        self.lefts_by_left = np.ascontiguousarray(lo[self.by_left])
        self.rights_by_right = np.ascontiguousarray(hi[self.by_right])
        rank_in_right = np.empty(len(items), dtype=np.intp)
        rank_in_right[self.by_right] = np.arange(len(items), dtype=np.intp)
        self.left_pos_to_right_pos = np.ascontiguousarray(
            rank_in_right[self.by_left]
        )

    def __len__(self) -> int:
        return len(self.intervals)

    @property
    def endpoints(self) -> np.ndarray:
        out = np.empty(2 * len(self.intervals))
        out[0::2] = [iv.lo for iv in self.intervals]
        out[1::2] = [iv.hi for iv in self.intervals]
        return out


def decide_1d(s, k: int, r: float) -> OneDVerdict:
    """Whether k points can stab every interval inflated by r.

    Greedy sweep: take the unremoved interval with the leftmost right
    endpoint beta, place a center at beta + r, drop every interval whose
    left endpoint is at most beta + 2r, repeat.  The sweep produces a
    minimum-cardinality cover, so the verdict is exact.
    """
    if r < 0.0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if not isinstance(s, IntervalSet):
        s = IntervalSet(s)
    if len(s) == 0:
        return OneDVerdict(True, [], r)
    count, centers = kernels.sweep_1d(
        s.lefts_by_left,
        s.rights_by_right,
        s.left_pos_to_right_pos,
        float(r),
        int(k),
    )
    if count > k:
        return OneDVerdict(False, [], r)
    return OneDVerdict(True, [float(c) for c in centers], r)


class SortedMatrix:
    """Implicit matrix of all pairwise differences of a value set.

    With A the values sorted ascending, entry (i, j) is A[m-1-i] - A[j]
    (zero-based), which is nonincreasing along every row and column.
    Entries are raw float differences so they agree bit for bit with a
    caller that subtracts the same two values.  Entries with either
    index at or beyond m - 1 read as -inf so the virtual matrix can be
    padded to a power of two.
    """

    def __init__(self, values):
        vals = np.sort(np.asarray(values, dtype=np.float64))
        if vals.size < 2:
            raise ValueError("need at least 2 values to form difference matrix")
        if not np.all(np.isfinite(vals)):
            raise ValueError("values must be finite")
        self.a = vals
        self.m = int(vals.size)
        self.dim = self.m - 1
        self.size = 1 << max(0, (self.dim - 1).bit_length())

    def entry(self, i: int, j: int) -> float:
        if i >= self.dim or j >= self.dim:
            return -math.inf
        return float(self.a[self.m - 1 - i] - self.a[j])

    def entry_grid(self, ii: np.ndarray, jj: np.ndarray) -> np.ndarray:
        """Vectorized entry lookup with -inf padding."""
        out = np.full(ii.shape, -np.inf)
        ok = (ii < self.dim) & (jj < self.dim)
        out[ok] = self.a[self.m - 1 - ii[ok]] - self.a[jj[ok]]
        return out

    def dense(self) -> np.ndarray:
        """The real (unpadded) matrix, for small-scale verification."""
        ii, jj = np.meshgrid(
            np.arange(self.dim), np.arange(self.dim), indexing="ij"
        )
        return self.a[self.m - 1 - ii] - self.a[jj]


def build_sorted_matrix(values) -> SortedMatrix:
    return SortedMatrix(values)


def _lower_median(vals: np.ndarray) -> float:
    k = (vals.size - 1) // 2
    return float(np.partition(vals, k)[k])


def msearch(matrix: SortedMatrix, feasible, c: int = 0, rng=(0.0, math.inf)):
    """Search a sorted matrix for the smallest feasible entry.

    feasible must be monotone: false below some threshold and true from
    it on.  rng = (lam1, lam2) with lam1 known infeasible and lam2 known
    feasible (sentinels allowed).  Maintains square blocks, discards
    blocks lying entirely outside the open window (their top-left corner
    is their maximum, bottom-right their minimum), and tests lower
    medians of the straddling blocks' corner values, halving the window
    each time.  Values outside the window are never tested.

    Stops when at most c entries survive; with c = 0 the returned lam2
    is the smallest feasible entry (or the input lam2 when no entry in
    the window is feasible).  Returns (lam1, lam2, survivors) where
    survivors are the still-undecided entry values inside the final
    open window.  Raises NonMonotoneError if the predicate contradicts
    itself.
    """
    lam1, lam2 = float(rng[0]), float(rng[1])
    if not lam1 < lam2:
        raise ValueError(f"empty search window ({lam1}, {lam2})")
    if c < 0:
        raise ValueError(f"stopping count must be nonnegative, got {c}")

    def test(value: float) -> bool:
        nonlocal lam1, lam2
        ok = bool(feasible(value))
        if ok:
            if value <= lam1:
                raise NonMonotoneError(
                    f"feasible({value}) is true but {lam1} already failed above it"
                )
            lam2 = min(lam2, value)
        else:
            if value >= lam2:
                raise NonMonotoneError(
                    f"feasible({value}) is false but {lam2} already succeeded below it"
                )
            lam1 = max(lam1, value)
        return ok

    s = matrix.size
    tops_i = np.zeros(1, dtype=np.intp)
    tops_j = np.zeros(1, dtype=np.intp)

    def prune():
        nonlocal tops_i, tops_j
        if tops_i.size == 0:
            return
        hi_vals = matrix.entry_grid(tops_i, tops_j)
        lo_vals = matrix.entry_grid(tops_i + (s - 1), tops_j + (s - 1))
        keep = (hi_vals > lam1) & (lo_vals < lam2)
        tops_i, tops_j = tops_i[keep], tops_j[keep]

    while True:
        prune()
        remaining = tops_i.size * s * s
        if remaining <= c:
            break
        if s > 1:
            for pick_max in (True, False):
                if tops_i.size == 0:
                    break
                if pick_max:
                    vals = matrix.entry_grid(tops_i, tops_j)
                else:
                    vals = matrix.entry_grid(tops_i + (s - 1), tops_j + (s - 1))
                window = vals[(vals > lam1) & (vals < lam2)]
                if window.size:
                    test(_lower_median(window))
                    prune()
            s //= 2
            off = np.array([0, 0, s, s], dtype=np.intp), np.array(
                [0, s, 0, s], dtype=np.intp
            )
            tops_i = (tops_i[:, None] + off[0][None, :]).ravel()
            tops_j = (tops_j[:, None] + off[1][None, :]).ravel()
        else:
            vals = matrix.entry_grid(tops_i, tops_j)
            test(_lower_median(vals))

    survivors = []
    if c > 0 and tops_i.size:
        for i0, j0 in zip(tops_i, tops_j):
            for di in range(s):
                for dj in range(s):
                    v = matrix.entry(int(i0) + di, int(j0) + dj)
                    if lam1 < v < lam2:
                        survivors.append(v)
    return lam1, lam2, survivors


def solve_1d(intervals, k: int) -> Solution:
    """Exact minimum radius covering intervals with k points.

    Tries radius zero, then searches the endpoint difference matrix,
    each candidate radius being half an entry.  The number of sweep
    calls is logarithmic in the interval count.
    """
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    s = intervals if isinstance(intervals, IntervalSet) else IntervalSet(intervals)
    calls = 0
    cover_cache: dict[float, list] = {}

    def probe(r: float) -> OneDVerdict:
        nonlocal calls
        calls += 1
        v = decide_1d(s, k, r)
        if v.feasible:
            cover_cache[r] = v.centers
        return v

    if len(s) == 0:
        return Solution([], 0.0, "interval-msearch", 0)

    v0 = probe(0.0)
    if v0.feasible:
        return Solution(v0.centers, 0.0, "interval-msearch", calls)

    matrix = build_sorted_matrix(s.endpoints)
    _, lam2, _ = msearch(matrix, lambda lam: probe(lam / 2.0).feasible, 0)
    if not math.isfinite(lam2):
        raise AssertionError(
            "unreachable: one center at the midpoint of the span always covers"
        )
    r_opt = lam2 / 2.0
    centers = cover_cache.get(r_opt)
    if centers is None:
        centers = decide_1d(s, k, r_opt).centers
    return Solution([float(x) for x in centers], r_opt, "interval-msearch", calls)
