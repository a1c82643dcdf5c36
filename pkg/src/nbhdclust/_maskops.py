"""Bitmask helpers shared by the exact subset-search paths.

Coverage of n objects by a candidate point is a bitmask; "can k
candidates cover everything at radius r" is then an exact set-cover
query answered by the kernel backend.  Restricted to n <= 62 objects,
which is far beyond the exhaustive-search scale anyway.
"""

from __future__ import annotations

import numpy as np

from ._backend import kernels

__all__ = ["MAX_MASK_OBJECTS", "pack_masks", "filter_maximal", "cover_feasible", "cover_choice"]

MAX_MASK_OBJECTS = 62
_MAXIMAL_FILTER_LIMIT = 1500


def pack_masks(hit: np.ndarray) -> np.ndarray:
    """Bitmasks (uint64) of the rows of a boolean candidate x object matrix."""
    n = hit.shape[1]
    if n > MAX_MASK_OBJECTS:
        raise ValueError(f"at most {MAX_MASK_OBJECTS} objects supported, got {n}")
    weights = (np.uint64(1) << np.arange(n, dtype=np.uint64))
    return (hit.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def filter_maximal(masks: np.ndarray) -> np.ndarray:
    """Distinct masks with dominated (subset) masks removed.

    Dominated masks never help a minimum cover.  Skips the quadratic
    filter for very large inputs; the search tolerates dominated masks.
    """
    uniq = np.unique(masks)
    m = uniq.shape[0]
    if m <= 1:
        return uniq
    if m > _MAXIMAL_FILTER_LIMIT:
        return uniq
    contained = (uniq[:, None] | uniq[None, :]) == uniq[None, :]
    np.fill_diagonal(contained, False)
    dominated = contained.any(axis=1)
    return uniq[~dominated]


def cover_feasible(masks: np.ndarray, n_objects: int, k: int) -> bool:
    """Whether some k of the masks OR to the full object set."""
    full = np.uint64((1 << n_objects) - 1)
    usable = filter_maximal(masks)
    if usable.shape[0] == 0:
        return n_objects == 0
    if not np.bitwise_or.reduce(usable) == full:
        return False
    size = kernels.min_cover_size(np.ascontiguousarray(usable), int(full), int(k))
    return size <= k


def cover_choice(masks: np.ndarray, n_objects: int, k: int):
    """Indices (into masks) of <= k masks covering all objects, or None.

    Plain search used once per solve for reconstruction; feasibility
    checks go through the kernel instead.
    """
    full = (1 << n_objects) - 1
    items = sorted(
        ((int(m), i) for i, m in enumerate(masks)),
        key=lambda t: -bin(t[0]).count("1"),
    )
    best: list[int] | None = None

    def dfs(uncov: int, chosen: list[int]) -> bool:
        if uncov == 0:
            nonlocal best
            best = list(chosen)
            return True
        if len(chosen) >= k:
            return False
        bit = uncov & (-uncov)
        for mask, idx in items:
            if mask & bit:
                chosen.append(idx)
                if dfs(uncov & ~mask, chosen):
                    return True
                chosen.pop()
        return False

    if dfs(full, []):
        return best
    return None
