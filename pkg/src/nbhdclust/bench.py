"""Timing comparison of the compiled and pure-Python kernels."""

from __future__ import annotations

import time

import numpy as np

from . import _kernels_py

__all__ = ["available_backends", "run_bench", "format_table"]


def available_backends() -> dict:
    backends = {"python": _kernels_py}
    try:
        from . import _kernels_c

        backends["c"] = _kernels_c
    except ImportError:
        pass
    return backends


def _sweep_inputs(n: int, seed):
    rng = np.random.default_rng(seed)
    lo = rng.uniform(0.0, 100.0, size=n)
    hi = lo + rng.uniform(0.0, 3.0, size=n)
    by_left = np.argsort(lo, kind="stable")
    by_right = np.argsort(hi, kind="stable")
    rank = np.empty(n, dtype=np.intp)
    rank[by_right] = np.arange(n, dtype=np.intp)
    return (
        np.ascontiguousarray(lo[by_left]),
        np.ascontiguousarray(hi[by_right]),
        np.ascontiguousarray(rank[by_left]),
    )


def _cover_inputs(n_masks: int, n_objects: int, seed):
    rng = np.random.default_rng(seed)
    hit = rng.random((n_masks, n_objects)) < 0.22
    # guarantee coverability
    for j in range(n_objects):
        hit[rng.integers(0, n_masks), j] = True
    weights = np.uint64(1) << np.arange(n_objects, dtype=np.uint64)
    masks = (hit.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
    full = int((1 << n_objects) - 1)
    return np.ascontiguousarray(masks), full


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_bench(sizes, repeat: int = 3, seed: int = 0, cover_masks: int = 400,
              cover_objects: int = 20) -> list:
    """Rows of {op, size, backend, seconds, result} over both kernels."""
    rows = []
    backends = available_backends()
    for n in sizes:
        lefts, rights, cross = _sweep_inputs(int(n), seed)
        for name, mod in backends.items():
            count = mod.sweep_1d(lefts, rights, cross, 0.75)[0]
            secs = _time(lambda m=mod: m.sweep_1d(lefts, rights, cross, 0.75), repeat)
            rows.append(
                {"op": "sweep_1d", "size": int(n), "backend": name,
                 "seconds": secs, "result": int(count)}
            )
    masks, full = _cover_inputs(cover_masks, cover_objects, seed)
    for name, mod in backends.items():
        size = mod.min_cover_size(masks, full, cover_objects)
        secs = _time(lambda m=mod: m.min_cover_size(masks, full, cover_objects), repeat)
        rows.append(
            {"op": "min_cover_size", "size": int(cover_masks), "backend": name,
             "seconds": secs, "result": int(size)}
        )
    return rows


def format_table(rows) -> str:
    lines = [f"{'op':<16}{'size':>8}  {'backend':<8}{'seconds':>12}  result"]
    for r in rows:
        lines.append(
            f"{r['op']:<16}{r['size']:>8}  {r['backend']:<8}"
            f"{r['seconds']:>12.6f}  {r['result']}"
        )
    return "\n".join(lines)
