"""JSON encoding of instances and solutions.

The document layout is fixed (sorted keys, no extra whitespace) so that
serialize -> parse -> serialize is byte-identical; files are auditable
and diffable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .geometry import Ball, Disk, Interval, Segment
from .optimizer import Solution

__all__ = [
    "Instance",
    "object_to_dict",
    "object_from_dict",
    "instance_to_json",
    "instance_from_json",
    "solution_to_json",
    "solution_from_json",
]


@dataclass
class Instance:
    objects: list
    k: int
    dimension: int


def _coords(point) -> list:
    return [float(x) for x in np.asarray(point, dtype=np.float64)]


def object_to_dict(obj) -> dict:
    if isinstance(obj, Disk):
        return {"type": "disk", "center": _coords(obj.center), "radius": float(obj.radius)}
    if isinstance(obj, Ball):
        return {"type": "ball", "center": _coords(obj.center), "radius": float(obj.radius)}
    if isinstance(obj, Segment):
        return {"type": "segment", "p": _coords(obj.p), "q": _coords(obj.q)}
    if isinstance(obj, Interval):
        return {"type": "interval", "lo": float(obj.lo), "hi": float(obj.hi)}
    raise ValueError(f"cannot serialize object of type {type(obj).__name__}")


def object_from_dict(d: dict):
    try:
        kind = d["type"]
    except (TypeError, KeyError):
        raise ValueError("object entry lacks a 'type' field") from None
    if kind == "disk":
        center = d["center"]
        if len(center) != 2:
            raise ValueError("disk center must have 2 coordinates")
        return Disk(tuple(float(x) for x in center), float(d["radius"]))
    if kind == "ball":
        return Ball(tuple(float(x) for x in d["center"]), float(d["radius"]))
    if kind == "segment":
        return Segment([float(x) for x in d["p"]], [float(x) for x in d["q"]])
    if kind == "interval":
        return Interval(float(d["lo"]), float(d["hi"]))
    raise ValueError(f"unknown object type {kind!r}")


def _object_dimension(obj) -> int:
    if isinstance(obj, Interval):
        return 1
    return obj.dimension


def instance_to_json(objects, k: int) -> str:
    objects = list(objects)
    dims = {_object_dimension(o) for o in objects}
    if len(dims) > 1:
        raise ValueError(f"mixed object dimensions {sorted(dims)}")
    dim = dims.pop() if dims else 2
    doc = {
        "dimension": dim,
        "k": int(k),
        "objects": [object_to_dict(o) for o in objects],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def instance_from_json(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("instance document must be a JSON object")
    for key in ("dimension", "k", "objects"):
        if key not in doc:
            raise ValueError(f"instance document lacks {key!r}")
    objects = [object_from_dict(d) for d in doc["objects"]]
    k = int(doc["k"])
    dim = int(doc["dimension"])
    for o in objects:
        actual = _object_dimension(o)
        if actual != dim:
            raise ValueError(
                f"object {object_to_dict(o)} has dimension {actual}, "
                f"document says {dim}"
            )
    return Instance(objects, k, dim)


def _center_entry(c):
    arr = np.asarray(c, dtype=np.float64)
    if arr.ndim == 0:
        return float(arr)
    return [float(x) for x in arr]


def solution_to_json(sol: Solution) -> str:
    doc = {
        "algorithm": sol.algorithm,
        "centers": [_center_entry(c) for c in sol.centers],
        "decider_calls": int(sol.decider_calls),
        "radius": float(sol.radius),
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def solution_from_json(text: str) -> Solution:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    for key in ("centers", "radius", "algorithm", "decider_calls"):
        if key not in doc:
            raise ValueError(f"solution document lacks {key!r}")
    centers = [
        float(c) if not isinstance(c, list) else np.asarray(c, dtype=np.float64)
        for c in doc["centers"]
    ]
    return Solution(
        centers, float(doc["radius"]), str(doc["algorithm"]), int(doc["decider_calls"])
    )
