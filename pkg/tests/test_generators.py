"""Vertex-cover gadget layouts and random instance samplers."""

import math
from itertools import combinations

import numpy as np
import pytest

from conftest import VC_GRAPHS
from nbhdclust.generators import (
    CHAIN_GAP,
    CHAIN_SPACING,
    TRIPLE_CROSS_DISTANCE,
    GadgetError,
    GadgetParams,
    gen_vc_disks,
    gen_vc_segments,
    random_balls,
    random_disjoint_disks,
    random_intervals,
    random_unit_disks,
)
from nbhdclust.geometry import dist_objects
from nbhdclust.oracle import brute_force_opt


def test_chain_constants_frozen():
    assert abs(CHAIN_GAP - (4.0 / math.sqrt(3.0) - 2.0)) <= 1e-15
    assert abs(CHAIN_SPACING - math.sqrt(16.0 / 3.0)) <= 1e-15
    assert abs(TRIPLE_CROSS_DISTANCE - 2.0 * (math.sqrt(13.0 / 3.0) - 1.0)) <= 1e-15


def _min_pairwise(objs):
    return min(
        dist_objects(a, b) for a, b in combinations(objs, 2)
    )


def test_segments_single_edge():
    segs, k = gen_vc_segments(GadgetParams(edges=[(0, 1)], k=1, eps_shrink=0.01))
    assert k == 1
    assert len(segs) == 1
    length = float(np.linalg.norm(np.asarray(segs[0].q) - np.asarray(segs[0].p)))
    assert length == pytest.approx(0.98, abs=1e-12)


def test_segments_path_shared_vertex_distance():
    # a degree-2 vertex continues straight, so the shrunk ends sit
    # 2 * eps apart
    segs, _ = gen_vc_segments(
        GadgetParams(edges=[(0, 1), (1, 2)], k=1, eps_shrink=0.01)
    )
    assert _min_pairwise(segs) == pytest.approx(0.02, abs=1e-12)


def test_segments_triangle_shared_vertex_distance():
    # 60-degree corners bring the shrunk ends to 2 * eps * sin(30)
    segs, _ = gen_vc_segments(
        GadgetParams(edges=[(0, 1), (1, 2), (0, 2)], k=2, eps_shrink=0.01)
    )
    assert len(segs) == 3
    assert _min_pairwise(segs) == pytest.approx(0.01, abs=1e-12)


def test_segments_disjoint_on_forest_corpus():
    for edges, _ in VC_GRAPHS:
        segs, _ = gen_vc_segments(GadgetParams(edges=edges, k=1))
        if len(segs) > 1:
            assert _min_pairwise(segs) > 0.0


def test_segments_eps_validation():
    with pytest.raises(GadgetError):
        gen_vc_segments(GadgetParams(edges=[(0, 1)], k=1, eps_shrink=0.5))
    with pytest.raises(GadgetError):
        gen_vc_segments(GadgetParams(edges=[(0, 1)], k=1, eps_shrink=0.0))


def test_vc_disks_single_edge_chain():
    disks, kappa = gen_vc_disks(GadgetParams(edges=[(0, 1)], k=1))
    assert kappa == 2
    assert len(disks) == 3
    assert all(d.radius == 1.0 for d in disks)
    for a, b in zip(disks, disks[1:]):
        assert dist_objects(a, b) == pytest.approx(CHAIN_GAP, abs=1e-9)
    assert dist_objects(disks[0], disks[2]) > 2.5


def test_vc_disks_path_crosses_degree_two_vertex():
    disks, kappa = gen_vc_disks(GadgetParams(edges=[(0, 1), (1, 2)], k=1))
    assert kappa == 1 + (6 - 2) // 2
    assert len(disks) == 6
    gaps = sorted(
        dist_objects(a, b) for a, b in combinations(disks, 2)
    )
    # five consecutive pairs at the chain gap (the degree-2 junction
    # included), everything else far
    for g in gaps[:5]:
        assert g == pytest.approx(CHAIN_GAP, abs=1e-9)
    assert gaps[5] > 2.5


def test_vc_disks_star_triple():
    params = GadgetParams(
        edges=[(0, 1), (0, 2), (0, 3)], k=1, n_per_edge=5, delta_sep=1e-4
    )
    disks, kappa = gen_vc_disks(params)
    assert len(disks) == 15
    assert kappa == 1 + (15 - 3) // 2
    starts = [disks[0], disks[5], disks[10]]
    for a, b in combinations(starts, 2):
        assert dist_objects(a, b) == pytest.approx(1e-4, abs=1e-9)
    seconds = [disks[1], disks[6], disks[11]]
    for s_disk in starts:
        for other in seconds:
            g = dist_objects(s_disk, other)
            if g < 1.0:  # skip the chain's own consecutive pair
                continue
            assert g >= TRIPLE_CROSS_DISTANCE - 1e-9
            assert g <= TRIPLE_CROSS_DISTANCE + 1e-3


def test_vc_disks_encodes_path_cover():
    r_target = 2.0 / math.sqrt(3.0) - 1.0 + 1e-6
    disks, kappa = gen_vc_disks(
        GadgetParams(edges=[(0, 1), (1, 2)], k=1, delta_sep=1e-7)
    )
    assert brute_force_opt(disks, kappa).radius <= r_target
    assert brute_force_opt(disks, kappa - 1).radius > r_target


def test_vc_disks_validation():
    with pytest.raises(GadgetError):
        gen_vc_disks(GadgetParams(edges=[(0, 1), (0, 2), (0, 3), (0, 4)], k=1))
    with pytest.raises(GadgetError):
        gen_vc_disks(GadgetParams(edges=[(0, 1)], k=1, n_per_edge=4))
    with pytest.raises(GadgetError):
        gen_vc_disks(GadgetParams(edges=[(0, 1)], k=1, n_per_edge=1))
    with pytest.raises(GadgetError):
        gen_vc_disks(GadgetParams(edges=[(0, 1)], k=1, delta_sep=0.0))
    with pytest.raises(GadgetError):
        GadgetParams(edges=[(0, 0)], k=1)
    with pytest.raises(GadgetError):
        GadgetParams(edges=[(0, 1), (1, 0)], k=1)
    with pytest.raises(GadgetError):
        GadgetParams(edges=[], k=1)
    with pytest.raises(GadgetError):
        GadgetParams(edges=[(0, 1)], k=-1)
    # 60-degree cycle corners put chain disks inside each other
    with pytest.raises(GadgetError):
        gen_vc_disks(GadgetParams(edges=[(0, 1), (1, 2), (0, 2)], k=2))


def test_random_disks_disjoint_and_reproducible():
    a = random_disjoint_disks(8, seed=5)
    b = random_disjoint_disks(8, seed=5)
    c = random_disjoint_disks(8, seed=6)
    assert [(tuple(d.center), d.radius) for d in a] == [
        (tuple(d.center), d.radius) for d in b
    ]
    assert [(tuple(d.center), d.radius) for d in a] != [
        (tuple(d.center), d.radius) for d in c
    ]
    assert _min_pairwise(a) > 0.05


def test_random_unit_disks():
    disks = random_unit_disks(12, seed=7)
    assert all(d.radius == 1.0 for d in disks)
    assert _min_pairwise(disks) > 0.05


def test_random_intervals_bounds():
    ivs = random_intervals(20, seed=8, span=20.0, max_len=3.0)
    assert len(ivs) == 20
    for iv in ivs:
        assert 0.0 <= iv.lo <= 20.0
        assert 0.0 <= iv.hi - iv.lo <= 3.0
    again = random_intervals(20, seed=8, span=20.0, max_len=3.0)
    assert [(iv.lo, iv.hi) for iv in ivs] == [(iv.lo, iv.hi) for iv in again]


def test_random_balls():
    balls = random_balls(6, 3, seed=9)
    assert all(len(b.center) == 3 for b in balls)
    assert _min_pairwise(balls) > 0.05
    with pytest.raises(ValueError):
        random_balls(3, 1, seed=9)


def test_explicit_positions_override():
    pos = {0: (0.0, 0.0), 1: (0.0, 2.0)}
    segs, _ = gen_vc_segments(
        GadgetParams(edges=[(0, 1)], k=1, eps_shrink=0.1, positions=pos)
    )
    a, b = np.asarray(segs[0].p), np.asarray(segs[0].q)
    assert a == pytest.approx([0.0, 0.1])
    assert b == pytest.approx([0.0, 1.9])
