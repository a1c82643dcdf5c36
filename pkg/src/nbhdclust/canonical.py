"""Canonical candidate centers and radii for disjoint planar disks.

For any number of centers k, some optimal solution can be moved, center
by center and without increasing the covering radius, onto a finite
candidate set built from the input disks alone:

* one point per object (its center), covering centers that touch a
  single disk at distance zero;
* for every pair of disks, the points of their bisector equidistant to
  some third disk ("events"), and one distance-minimizing point per
  maximal event-free stretch of the curve.

The optimal radius is then either zero or the defining-pair distance of
one of the bisector points, which gives the candidate radius set.  Both
sets have size O(n^3).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import (
    EQ_TOL,
    Disk,
    GeometryError,
    bisector_events,
    disk_bisector,
    dist_objects,
)

__all__ = ["CandidatePoint", "CandidateSets", "canonical_candidates"]

PROV_OBJECT = "object-point"
PROV_EVENT = "bisector-event"
PROV_MINIMUM = "interval-minimum"


@dataclass
class CandidatePoint:
    """A candidate center with its provenance.

    distance is the common distance to the defining disks for bisector
    points, and 0.0 for object points.  pair/u identify where on which
    bisector the point sits (None for object points).
    """

    point: np.ndarray
    provenance: str
    pair: tuple | None = None
    u: float | None = None
    distance: float = 0.0


@dataclass
class CandidateSets:
    """Candidate centers plus the sorted, deduplicated candidate radii."""

    points: list
    radii: np.ndarray

    def coords(self) -> np.ndarray:
        return np.array([cp.point for cp in self.points])


def _dedupe_sorted(values, rel: float = 1e-9) -> np.ndarray:
    out = [values[0]]
    for v in values[1:]:
        if v - out[-1] > rel * max(1.0, abs(v)):
            out.append(v)
    return np.asarray(out)


def validate_disjoint(disks) -> None:
    """Raise GeometryError unless all disks are pairwise disjoint."""
    for i, a in enumerate(disks):
        for j in range(i + 1, len(disks)):
            if dist_objects(a, disks[j]) <= 0.0:
                raise GeometryError(f"objects {i} and {j} intersect or touch")


def canonical_candidates(disks, tol: float = EQ_TOL) -> CandidateSets:
    """Candidate centers and radii containing an optimum for every k.

    disks must be at least one pairwise disjoint planar disk.  The
    returned radii start at 0.0 and are deduplicated at relative
    tolerance 1e-9.
    """
    disks = list(disks)
    if not disks:
        raise GeometryError("need at least one disk")
    for d in disks:
        if not isinstance(d, Disk):
            raise GeometryError("canonical candidates are defined for planar disks")
    validate_disjoint(disks)

    points: list[CandidatePoint] = [
        CandidatePoint(point=d.center.copy(), provenance=PROV_OBJECT) for d in disks
    ]
    radii: list[float] = [0.0]

    n = len(disks)
    for i in range(n):
        for j in range(i + 1, n):
            bis = disk_bisector(disks[i], disks[j], pair=(i, j))
            thirds = [disks[t] for t in range(n) if t != i and t != j]
            events = bisector_events(bis, thirds)
            u_scale = max(1.0, abs(events[0][0]) if events else 1.0)
            for u, dist in events:
                points.append(
                    CandidatePoint(
                        point=bis.point(u),
                        provenance=PROV_EVENT,
                        pair=(i, j),
                        u=u,
                        distance=dist,
                    )
                )
                radii.append(dist)
            # one minimum per event-free stretch: interior stretches end at
            # an event (already a candidate), so the only new minimum is the
            # vertex of the stretch containing u = 0
            if not any(abs(u) <= 1e-9 * u_scale for u, _ in events):
                vdist = bis.vertex_distance
                points.append(
                    CandidatePoint(
                        point=bis.point(0.0),
                        provenance=PROV_MINIMUM,
                        pair=(i, j),
                        u=0.0,
                        distance=vdist,
                    )
                )
                radii.append(vdist)

    radii.sort()
    return CandidateSets(points=points, radii=_dedupe_sorted(radii))
