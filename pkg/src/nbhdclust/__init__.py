"""Clustering with convex neighborhoods.

Cover n disjoint convex objects (disks, balls, segments, intervals)
with k balls of minimum radius: constant-factor deciders and solvers,
a size PTAS, an approximation scheme for equal disks, exact interval
clustering, exhaustive oracles, and hardness-gadget generators.
"""

from ._backend import implementation as backend_implementation
from .canonical import CandidatePoint, CandidateSets, canonical_candidates
from .decider import (
    COVER_FACTOR,
    SWEEP_RADIUS_FACTOR,
    TRIPLE_CONTACT_RATIO,
    DeciderVerdict,
    ProximityGraph,
    decide,
    min_edge_cover,
    packing_admits_three,
    proximity_graph,
)
from .fptas import (
    FptasConfig,
    exact_kcenter_points,
    gonzalez,
    kcenter_points,
    solve_unit_disks_small_k,
)
from .generators import (
    GadgetError,
    GadgetParams,
    gen_vc_disks,
    gen_vc_segments,
    random_balls,
    random_disjoint_disks,
    random_intervals,
    random_unit_disks,
)
from .geometry import (
    Ball,
    Bisector,
    DimensionMismatchError,
    Disk,
    GeometryError,
    Interval,
    Segment,
    bisector_events,
    disk_bisector,
    dist_objects,
    dist_point_object,
    equidistant_point_on_bisector,
    hits,
)
from .instance_io import (
    Instance,
    instance_from_json,
    instance_to_json,
    solution_from_json,
    solution_to_json,
)
from .matching import max_cardinality_matching
from .oned import (
    IntervalSet,
    NonMonotoneError,
    OneDVerdict,
    SortedMatrix,
    build_sorted_matrix,
    decide_1d,
    msearch,
    solve_1d,
)
from .optimizer import Solution, solution_radius, solve_balls_dd, solve_disks
from .oracle import OracleError, brute_force_opt
from .size_ptas import InflatedRegion, hitting_set_local_search, solve_size
from .svg import render_svg, write_svg

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_implementation",
    # geometry
    "Disk",
    "Ball",
    "Segment",
    "Interval",
    "Bisector",
    "GeometryError",
    "DimensionMismatchError",
    "dist_objects",
    "dist_point_object",
    "hits",
    "disk_bisector",
    "bisector_events",
    "equidistant_point_on_bisector",
    # canonical candidates
    "CandidatePoint",
    "CandidateSets",
    "canonical_candidates",
    # decider and optimizer
    "COVER_FACTOR",
    "SWEEP_RADIUS_FACTOR",
    "TRIPLE_CONTACT_RATIO",
    "DeciderVerdict",
    "ProximityGraph",
    "proximity_graph",
    "decide",
    "packing_admits_three",
    "min_edge_cover",
    "max_cardinality_matching",
    "Solution",
    "solution_radius",
    "solve_disks",
    "solve_balls_dd",
    # size PTAS
    "InflatedRegion",
    "hitting_set_local_search",
    "solve_size",
    # equal-disk scheme
    "FptasConfig",
    "gonzalez",
    "exact_kcenter_points",
    "kcenter_points",
    "solve_unit_disks_small_k",
    # one dimension
    "IntervalSet",
    "OneDVerdict",
    "decide_1d",
    "SortedMatrix",
    "build_sorted_matrix",
    "msearch",
    "NonMonotoneError",
    "solve_1d",
    # harness
    "brute_force_opt",
    "OracleError",
    "GadgetParams",
    "GadgetError",
    "gen_vc_segments",
    "gen_vc_disks",
    "random_disjoint_disks",
    "random_unit_disks",
    "random_intervals",
    "random_balls",
    "Instance",
    "instance_to_json",
    "instance_from_json",
    "solution_to_json",
    "solution_from_json",
    "render_svg",
    "write_svg",
]
