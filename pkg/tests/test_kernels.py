"""Compiled and pure kernels answer identically."""

import math
import os
import subprocess
import sys
from itertools import combinations

import numpy as np
import pytest

from nbhdclust import _kernels_py
from nbhdclust._backend import implementation, kernels
from nbhdclust._maskops import (
    MAX_MASK_OBJECTS,
    cover_feasible,
    filter_maximal,
    pack_masks,
)
from nbhdclust.oned import IntervalSet


def _sweep_inputs(rng, n):
    lo = rng.uniform(-10, 10, n)
    s = IntervalSet(list(zip(lo, lo + rng.uniform(0, 3, n))))
    return s.lefts_by_left, s.rights_by_right, s.left_pos_to_right_pos


def test_sweep_backends_agree():
    rng = np.random.default_rng(90)
    for _ in range(60):
        n = int(rng.integers(1, 40))
        lefts, rights, pos = _sweep_inputs(rng, n)
        r = float(rng.uniform(0, 4))
        got_c = kernels.sweep_1d(lefts, rights, pos, r)
        got_py = _kernels_py.sweep_1d(lefts, rights, pos, r)
        assert got_c[0] == got_py[0]
        assert list(got_c[1]) == list(got_py[1])
        cap = int(rng.integers(0, 4))
        cc = kernels.sweep_1d(lefts, rights, pos, r, cap)
        pc = _kernels_py.sweep_1d(lefts, rights, pos, r, cap)
        assert (cc[0] > cap) == (pc[0] > cap)


def _min_cover_brute(masks, full):
    for size in range(0, len(masks) + 1):
        for combo in combinations(masks, size):
            acc = 0
            for m in combo:
                acc |= m
            if acc == full:
                return size
    return math.inf


def test_min_cover_size_matches_brute_force():
    rng = np.random.default_rng(91)
    for _ in range(80):
        nm = int(rng.integers(1, 9))
        bits = int(rng.integers(1, 10))
        full = (1 << bits) - 1
        masks = [int(rng.integers(0, full + 1)) for _ in range(nm)]
        want = _min_cover_brute(masks, full)
        cap = bits + 1
        arr = np.ascontiguousarray(masks, dtype=np.uint64)
        got = kernels.min_cover_size(arr, full, cap)
        got_py = _kernels_py.min_cover_size(masks, full, cap)
        assert got == got_py
        if want <= cap:
            assert got == want
        else:
            assert got == cap + 1
    empty = np.empty(0, dtype=np.uint64)
    assert kernels.min_cover_size(empty, 0, 3) == 0
    one = np.ascontiguousarray([1], dtype=np.uint64)
    assert kernels.min_cover_size(one, 3, 3) == 4


def test_pack_masks_bit_layout():
    covers = np.array([[True, False, True], [False, True, False]])
    masks = pack_masks(covers)
    assert masks.tolist() == [0b101, 0b010]


def test_pack_masks_width_guard():
    wide = np.ones((1, MAX_MASK_OBJECTS + 1), dtype=bool)
    with pytest.raises(ValueError):
        pack_masks(wide)


def test_filter_maximal_drops_dominated():
    masks = [0b0011, 0b0111, 0b0100, 0b1000]
    kept = filter_maximal(masks)
    assert sorted(kept) == [0b0111, 0b1000]
    # ties keep one copy
    assert sorted(filter_maximal([0b11, 0b11])) == [0b11]


def test_cover_feasible_consistency():
    rng = np.random.default_rng(92)
    for _ in range(40):
        bits = int(rng.integers(1, 8))
        full = (1 << bits) - 1
        masks = [int(rng.integers(1, full + 1)) for _ in range(int(rng.integers(1, 7)))]
        k = int(rng.integers(1, 5))
        arr = np.asarray(masks, dtype=np.uint64)
        assert cover_feasible(arr, bits, k) == (_min_cover_brute(masks, full) <= k)


def test_pure_python_env_selects_fallback():
    code = (
        "from nbhdclust._backend import implementation;"
        "print(implementation())"
    )
    env = dict(os.environ, NBHDCLUST_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "python"


def test_compiled_backend_active_here():
    # the build in this tree compiles the extension; the suite should be
    # exercising it
    assert implementation() == "compiled"
