"""Adversarial and random instance generators.

The vertex-cover gadget families realize hardness constructions:
shrunken edge segments for one, near-touching unit-disk chains for the
other.  Both validate the geometric constraints they rely on and refuse
layouts that violate them.  The random generators are plain seeded
samplers used by the test corpus and the CLI.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .geometry import Ball, Disk, Interval, Segment, dist_objects

__all__ = [
    "GadgetError",
    "GadgetParams",
    "gen_vc_segments",
    "gen_vc_disks",
    "random_disjoint_disks",
    "random_unit_disks",
    "random_intervals",
    "random_balls",
    "CHAIN_GAP",
    "CHAIN_SPACING",
    "TRIPLE_CROSS_DISTANCE",
]

# boundary gap between consecutive chain disks
CHAIN_GAP = 2.0 * (2.0 / math.sqrt(3.0) - 1.0)
# center spacing implied by the gap for unit disks: 2 + CHAIN_GAP = 4 / sqrt(3)
CHAIN_SPACING = 2.0 + CHAIN_GAP
# boundary distance from a triple disk to the second disk of another
# chain at the same vertex, at zero separation
TRIPLE_CROSS_DISTANCE = 2.0 * math.sqrt(13.0 / 3.0) - 2.0

_GAP_TOL = 1e-9
_MIN_SPREAD = 2.5


class GadgetError(ValueError):
    """A gadget layout violates its required separation constraints."""


@dataclass
class GadgetParams:
    """Shared inputs of the vertex-cover gadget generators.

    edges: the graph, as (u, v) pairs over integer vertices.
    k: the vertex-cover budget the instance encodes.
    eps_shrink: how much each segment loses at both ends.
    delta_sep: boundary separation of the near-touching disk triples.
    n_per_edge: odd number (> 1) of disks per edge; an int applies to
        every edge, a dict maps edge pairs to counts.
    positions: optional vertex embedding; computed for trees and simple
        cycles when omitted.
    """

    edges: list
    k: int
    eps_shrink: float = 0.01
    delta_sep: float = 1e-4
    n_per_edge: object = 3
    positions: dict | None = None
    _adj: dict = field(init=False, repr=False)

    def __post_init__(self):
        seen = set()
        adj: dict[int, list[int]] = {}
        norm = []
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GadgetError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GadgetError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        if not norm:
            raise GadgetError("graph has no edges")
        self.edges = norm
        for v in adj:
            adj[v] = sorted(adj[v])
        self._adj = adj
        if self.k < 0:
            raise GadgetError(f"cover budget must be nonnegative, got {self.k}")

    def edge_count(self, e) -> int:
        key = (min(e), max(e))
        if isinstance(self.n_per_edge, dict):
            n = int(self.n_per_edge[key])
        else:
            n = int(self.n_per_edge)
        if n < 3 or n % 2 == 0:
            raise GadgetError(f"edge {key} needs an odd disk count >= 3, got {n}")
        return n

    @property
    def adjacency(self) -> dict:
        return self._adj


def _rot(vec: np.ndarray, angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([c * vec[0] - s * vec[1], s * vec[0] + c * vec[1]])


def _is_forest(adj: dict, edges) -> bool:
    return len(edges) < sum(1 for _ in adj)


def _tree_layout(params: GadgetParams, length_of) -> dict:
    """Straight-line embedding of a forest.

    Children leave a vertex at 120-degree turns from the incoming
    direction so a degree-3 vertex has pairwise 120-degree incident
    edges and a degree-2 vertex continues straight.  Components are
    spread along the x axis far enough apart that they cannot interact.
    """
    adj = params.adjacency
    for v, nbrs in adj.items():
        if len(nbrs) > 3:
            raise GadgetError(
                f"vertex {v} has degree {len(nbrs)}; the 120-degree fan "
                "layout needs degree <= 3 (pass explicit positions)"
            )
    total_span = sum(length_of(u, v) for u, v in params.edges)
    pos: dict[int, np.ndarray] = {}
    component = 0
    for root in sorted(adj):
        if root in pos:
            continue
        pos[root] = np.array([component * (2.0 * total_span + 10.0), 0.0])
        component += 1
        base = [np.array([1.0, 0.0]), _rot(np.array([1.0, 0.0]), 2 * math.pi / 3),
                _rot(np.array([1.0, 0.0]), -2 * math.pi / 3)]
        queue = deque()
        for d, nb in zip(base, adj[root]):
            queue.append((root, nb, d))
        while queue:
            parent, v, direction = queue.popleft()
            if v in pos:
                raise GadgetError(
                    "graph contains a cycle; the tree layout cannot embed it "
                    "(pass explicit positions)"
                )
            pos[v] = pos[parent] + length_of(parent, v) * direction
            children = [nb for nb in adj[v] if nb != parent]
            toward_parent = -direction
            if len(children) == 1:
                queue.append((v, children[0], direction))
            elif len(children) == 2:
                queue.append((v, children[0], _rot(toward_parent, 2 * math.pi / 3)))
                queue.append((v, children[1], _rot(toward_parent, -2 * math.pi / 3)))
            elif len(children) > 2:
                raise GadgetError(f"vertex {v} has degree > 3")
    return pos


def _cycle_layout(params: GadgetParams, side: float) -> dict:
    """Regular polygon embedding of a single cycle."""
    adj = params.adjacency
    verts = sorted(adj)
    n = len(verts)
    if any(len(adj[v]) != 2 for v in verts) or len(params.edges) != n:
        raise GadgetError("not a simple cycle")
    order = [verts[0]]
    prev = None
    while len(order) < n:
        cur = order[-1]
        nxt = [w for w in adj[cur] if w != prev]
        prev = cur
        order.append(nxt[0])
    radius = side / (2.0 * math.sin(math.pi / n))
    pos = {}
    for idx, v in enumerate(order):
        ang = 2.0 * math.pi * idx / n
        pos[v] = radius * np.array([math.cos(ang), math.sin(ang)])
    return pos


def _positions_for(params: GadgetParams, length_of) -> dict:
    if params.positions is not None:
        return {v: np.asarray(p, dtype=np.float64) for v, p in params.positions.items()}
    if _is_forest(params.adjacency, params.edges):
        return _tree_layout(params, length_of)
    try:
        return _cycle_layout(params, length_of(*params.edges[0]))
    except GadgetError:
        raise GadgetError(
            "automatic layout handles forests and simple cycles only; "
            "pass explicit positions"
        )


def gen_vc_segments(params: GadgetParams):
    """Edge segments shrunk at both ends, and the companion budget k.

    A set of k points stabs every shrunk segment at radius ~0 exactly
    when the graph has a vertex cover of size k, because points near a
    vertex reach precisely the segments of its incident edges.
    """
    eps = float(params.eps_shrink)
    if eps <= 0.0:
        raise GadgetError(f"eps_shrink must be positive, got {eps}")
    pos = _positions_for(params, lambda u, v: 1.0)

    lengths = {}
    for u, v in params.edges:
        l = float(np.linalg.norm(pos[v] - pos[u]))
        if eps >= l / 2.0:
            raise GadgetError(
                f"eps_shrink {eps} >= half the length {l} of edge {(u, v)}"
            )
        lengths[(u, v)] = l

    full = {
        e: Segment(pos[e[0]], pos[e[1]]) for e in params.edges
    }
    non_adjacent_d = math.inf
    edge_list = params.edges
    for i in range(len(edge_list)):
        for j in range(i + 1, len(edge_list)):
            if set(edge_list[i]) & set(edge_list[j]):
                continue
            non_adjacent_d = min(
                non_adjacent_d, dist_objects(full[edge_list[i]], full[edge_list[j]])
            )
    if eps >= non_adjacent_d / 2.0:
        raise GadgetError(
            f"eps_shrink {eps} >= half the minimum non-adjacent edge "
            f"distance {non_adjacent_d}"
        )

    segments = []
    for u, v in params.edges:
        d = (pos[v] - pos[u]) / lengths[(u, v)]
        segments.append(Segment(pos[u] + eps * d, pos[v] - eps * d))

    for i in range(len(segments)):
        for j in range(i + 1, len(segments)):
            if dist_objects(segments[i], segments[j]) <= 0.0:
                raise GadgetError(
                    f"shrunk segments of edges {edge_list[i]} and "
                    f"{edge_list[j]} are not disjoint"
                )
    return segments, params.k


def gen_vc_disks(params: GadgetParams):
    """Unit-disk chains encoding vertex cover; returns (disks, kappa).

    Each edge carries an odd chain of unit disks with consecutive
    boundary gaps exactly 2(2/sqrt(3) - 1).  A degree-3 vertex holds the
    first disks of its three edges as a near-equilateral triple with
    boundary separation delta_sep; a degree-2 vertex continues a chain
    straight through.  kappa = k + (total disks - edge count) / 2
    centers cover at radius 2/sqrt(3) - 1 (+ a delta_sep term) exactly
    when the graph has a vertex cover of size k.
    """
    if params.delta_sep <= 0.0:
        raise GadgetError(f"delta_sep must be positive, got {params.delta_sep}")
    counts = {e: params.edge_count(e) for e in params.edges}

    # edge lengths are dictated by the chain geometry
    off_holder: dict = {}

    def edge_length(u, v):
        key = (min(u, v), max(u, v))
        return off_holder[u] + (counts[key] - 1) * CHAIN_SPACING + off_holder[v]

    # offsets depend only on degrees, so compute them before layout
    for v, nbrs in params.adjacency.items():
        deg = len(nbrs)
        if deg > 3:
            raise GadgetError(f"vertex {v} has degree {deg} > 3")
    rho = (2.0 + params.delta_sep) / math.sqrt(3.0)
    for v, nbrs in params.adjacency.items():
        off_holder[v] = {1: 0.0, 2: CHAIN_SPACING / 2.0, 3: rho}[len(nbrs)]

    pos = _positions_for(params, edge_length)

    disks = []
    owner = []  # (edge, index along chain)
    for u, v in params.edges:
        direction = pos[v] - pos[u]
        length = float(np.linalg.norm(direction))
        expect = edge_length(u, v)
        if abs(length - expect) > 1e-6:
            raise GadgetError(
                f"edge {(u, v)} embedded at length {length}, chain needs {expect}"
            )
        direction = direction / length
        n_e = counts[(u, v)]
        for t in range(n_e):
            c = pos[u] + (off_holder[u] + t * CHAIN_SPACING) * direction
            disks.append(Disk((float(c[0]), float(c[1])), 1.0))
            owner.append(((u, v), t))

    _validate_vc_disks(params, disks, owner, counts)

    total = sum(counts.values())
    kappa = params.k + (total - len(params.edges)) // 2
    return disks, kappa


def _validate_vc_disks(params: GadgetParams, disks, owner, counts):
    """Pairwise separation audit of a generated chain layout.

    Consecutive chain disks (including pairs meeting across a degree-2
    vertex) must sit at the exact boundary gap; triple disks at a
    degree-3 vertex at exactly delta_sep; the triple-to-second-disk
    cross pairs at no less than their closed-form distance; every other
    pair must clear 2.5.
    """
    adj = params.adjacency
    n = len(disks)

    def chain_pos(i):
        (u, v), t = owner[i]
        return (u, v), t

    def vertex_end(i):
        # the vertex this disk sits at, when it is first or last in its chain
        (u, v), t = owner[i]
        if t == 0:
            return u
        if t == counts[(u, v)] - 1:
            return v
        return None

    for i in range(n):
        for j in range(i + 1, n):
            gap = dist_objects(disks[i], disks[j])
            e_i, t_i = chain_pos(i)
            e_j, t_j = chain_pos(j)
            if e_i == e_j:
                if abs(t_i - t_j) == 1:
                    if abs(gap - CHAIN_GAP) > _GAP_TOL:
                        raise GadgetError(
                            f"consecutive disks {i},{j} have gap {gap}"
                        )
                elif gap <= _MIN_SPREAD:
                    raise GadgetError(
                        f"non-consecutive same-chain disks {i},{j} at {gap} <= 2.5"
                    )
                continue
            vi, vj = vertex_end(i), vertex_end(j)
            shared = None
            if vi is not None and vi == vj:
                shared = vi
            if shared is not None:
                deg = len(adj[shared])
                if deg == 2:
                    if abs(gap - CHAIN_GAP) > _GAP_TOL:
                        raise GadgetError(
                            f"chain pair across degree-2 vertex {shared} has gap {gap}"
                        )
                elif deg == 3:
                    if abs(gap - params.delta_sep) > _GAP_TOL:
                        raise GadgetError(
                            f"triple pair at vertex {shared} has gap {gap}, "
                            f"wanted {params.delta_sep}"
                        )
                continue
            # cross pair: an end disk at a degree-3 vertex against the
            # second disk of a sibling chain
            cross = False
            for v_end, other_e, other_t in ((vi, e_j, t_j), (vj, e_i, t_i)):
                if v_end is None or len(adj[v_end]) != 3:
                    continue
                if v_end in other_e:
                    u2, v2 = other_e
                    second = 1 if v_end == u2 else counts[other_e] - 2
                    if other_t == second:
                        cross = True
            if cross:
                if gap < TRIPLE_CROSS_DISTANCE - _GAP_TOL:
                    raise GadgetError(
                        f"triple cross pair {i},{j} at {gap} below "
                        f"{TRIPLE_CROSS_DISTANCE}"
                    )
                continue
            if gap <= _MIN_SPREAD:
                raise GadgetError(
                    f"disks {i},{j} of different chains at {gap} <= 2.5; "
                    "layout too tight for the requested chain counts"
                )


def random_disjoint_disks(n: int, seed, box: float = 10.0, min_gap: float = 0.05,
                          radius_range=(0.2, 1.0)):
    """n pairwise disjoint disks by rejection sampling in a square box."""
    rng = np.random.default_rng(seed)
    disks: list[Disk] = []
    attempts = 0
    while len(disks) < n:
        attempts += 1
        if attempts > 20000 * max(1, n):
            raise ValueError(
                "rejection sampling stalled; enlarge the box or shrink radii"
            )
        r = float(rng.uniform(*radius_range))
        c = rng.uniform(r, box - r, size=2)
        d = Disk((float(c[0]), float(c[1])), r)
        if all(dist_objects(d, other) > min_gap for other in disks):
            disks.append(d)
    return disks


def random_unit_disks(n: int, seed, box: float | None = None, min_gap: float = 0.05):
    """n pairwise disjoint unit disks in a box sized to fit them."""
    if box is None:
        box = max(8.0, 3.2 * math.sqrt(n) + 2.0)
    rng = np.random.default_rng(seed)
    disks: list[Disk] = []
    attempts = 0
    while len(disks) < n:
        attempts += 1
        if attempts > 20000 * max(1, n):
            raise ValueError(
                "rejection sampling stalled; enlarge the box"
            )
        c = rng.uniform(1.0, box - 1.0, size=2)
        d = Disk((float(c[0]), float(c[1])), 1.0)
        if all(dist_objects(d, other) > min_gap for other in disks):
            disks.append(d)
    return disks


def random_intervals(n: int, seed, span: float = 20.0, max_len: float = 3.0):
    """n closed intervals on the line; overlaps are allowed."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        lo = float(rng.uniform(0.0, span))
        out.append(Interval(lo, lo + float(rng.uniform(0.0, max_len))))
    return out


def random_balls(n: int, dim: int, seed, box: float = 10.0, min_gap: float = 0.05,
                 radius_range=(0.2, 1.0)):
    """n pairwise disjoint balls in dimension dim, rejection sampled."""
    if dim < 2:
        raise ValueError(f"dimension must be >= 2, got {dim}")
    rng = np.random.default_rng(seed)
    balls: list[Ball] = []
    attempts = 0
    while len(balls) < n:
        attempts += 1
        if attempts > 20000 * max(1, n):
            raise ValueError(
                "rejection sampling stalled; enlarge the box or shrink radii"
            )
        r = float(rng.uniform(*radius_range))
        c = rng.uniform(r, box - r, size=dim)
        b = Ball(tuple(float(x) for x in c), r)
        if all(dist_objects(b, other) > min_gap for other in balls):
            balls.append(b)
    return balls
