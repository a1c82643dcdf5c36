"""Candidate center and radius construction."""

import math

import numpy as np
import pytest

from nbhdclust.canonical import (
    PROV_EVENT,
    PROV_MINIMUM,
    PROV_OBJECT,
    canonical_candidates,
)
from nbhdclust.generators import random_disjoint_disks
from nbhdclust.geometry import Disk, GeometryError, dist_point_object
from nbhdclust.oracle import brute_force_opt

SQ3 = math.sqrt(3.0)


def _contains_point(cand, xy, tol=1e-9):
    return any(np.linalg.norm(cp.point - np.asarray(xy)) <= tol for cp in cand.points)


def _contains_radius(cand, r, tol=1e-9):
    return bool(np.any(np.abs(cand.radii - r) <= tol))


def test_single_disk():
    cand = canonical_candidates([Disk((0, 0), 1)])
    assert _contains_point(cand, (0, 0))
    assert list(cand.radii) == [0.0]


def test_pair_vertex_and_radius():
    disks = [Disk((0, 0), 1), Disk((4, 0), 1)]
    cand = canonical_candidates(disks)
    assert _contains_point(cand, (2, 0))
    assert _contains_radius(cand, 1.0)
    assert brute_force_opt(disks, 1).radius == pytest.approx(1.0, abs=1e-9)


def test_equilateral_triple_centroid_event():
    side = 6.0
    disks = [
        Disk((0, 0), 1),
        Disk((side, 0), 1),
        Disk((side / 2, side * SQ3 / 2), 1),
    ]
    cand = canonical_candidates(disks)
    assert _contains_radius(cand, 2 * SQ3 - 1)
    assert brute_force_opt(disks, 1).radius == pytest.approx(2 * SQ3 - 1, abs=1e-9)


def test_rejects_intersecting():
    with pytest.raises(GeometryError):
        canonical_candidates([Disk((0, 0), 1), Disk((1, 0), 1)])


def test_radii_sorted_start_at_zero():
    for seed in range(8):
        disks = random_disjoint_disks(5, seed=seed)
        cand = canonical_candidates(disks)
        assert cand.radii[0] == 0.0
        assert np.all(np.diff(cand.radii) > 0)


def test_bisector_points_lie_on_their_bisector():
    # every event or minimum is equidistant to its defining pair, and the
    # recorded distance matches
    for seed in range(10):
        disks = random_disjoint_disks(4, seed=100 + seed)
        cand = canonical_candidates(disks)
        for cp in cand.points:
            if cp.provenance == PROV_OBJECT:
                continue
            i, j = cp.pair
            di = dist_point_object(cp.point, disks[i])
            dj = dist_point_object(cp.point, disks[j])
            assert abs(di - dj) <= 1e-9
            assert abs(di - cp.distance) <= 1e-9


def test_minimum_is_smallest_on_its_bisector():
    for seed in range(10):
        disks = random_disjoint_disks(4, seed=200 + seed)
        cand = canonical_candidates(disks)
        by_pair = {}
        for cp in cand.points:
            if cp.provenance != PROV_OBJECT:
                by_pair.setdefault(cp.pair, []).append(cp)
        for group in by_pair.values():
            minima = [cp for cp in group if cp.provenance == PROV_MINIMUM]
            events = [cp for cp in group if cp.provenance == PROV_EVENT]
            if minima:
                assert len(minima) == 1
                assert minima[0].u == 0.0
                for ev in events:
                    assert minima[0].distance <= ev.distance + 1e-9
            else:
                # the vertex coincides with an event, which then carries
                # the minimum distance itself
                assert any(abs(ev.u) <= 1e-6 for ev in events)


def test_oracle_optimum_among_radii():
    rng = np.random.default_rng(31)
    for trial in range(30):
        n = int(rng.integers(1, 6))
        disks = random_disjoint_disks(n, seed=300 + trial)
        cand = canonical_candidates(disks)
        for k in range(1, n + 1):
            r_opt = brute_force_opt(disks, k).radius
            assert np.min(np.abs(cand.radii - r_opt)) <= 1e-9


def test_point_count_cubic():
    for n in (2, 4, 6, 8):
        disks = random_disjoint_disks(n, seed=n)
        cand = canonical_candidates(disks)
        assert len(cand.points) <= 3 * n**3 + 3
        assert len(cand.radii) <= 3 * n**3 + 3
