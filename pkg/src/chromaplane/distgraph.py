"""Finite distance graphs on unions of concentric circles.

A configuration is a union of evenly spaced circle point sets; the graph
joins two points when their distance falls in [1, b]. Point k of an
n-point circle of radius r sits at (r sin(2 pi k / n), r cos(2 pi k / n)),
so every circle has one point on the upward vertical half-line.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .geom import Point2

# Edge rule: distance in [1 - BOUNDARY_TOL, b + BOUNDARY_TOL]. The point
# configurations keep all pairwise distances safely off the interval
# boundary for generic eps; the tolerance only absorbs float noise.
BOUNDARY_TOL = 1e-12

DEFAULT_EPS_SCALE = 1e-6

# Thresholds derived from these graphs must be stable across these
# eps scales (relative to b - 1) before being reported.
EPS_STABILITY_SCALES = (1e-5, 1e-6, 1e-7)


def default_eps(b: float) -> float:
    """Radial inset used when the caller does not pick one."""
    return (b - 1.0) * DEFAULT_EPS_SCALE


class CircleSpec(NamedTuple):
    n: int
    r: float


@dataclass(frozen=True)
class PointConfig:
    """Union of evenly spaced circle point sets around a common center."""

    circles: tuple[CircleSpec, ...]
    center: Point2 = Point2(0.0, 0.0)

    def __post_init__(self):
        if not self.circles:
            raise ValueError("config needs at least one circle")
        circles = tuple(CircleSpec(int(n), float(r)) for n, r in self.circles)
        for n, r in circles:
            if n < 1:
                raise ValueError(f"circle point count must be >= 1, got {n}")
            if r <= 0:
                raise ValueError(f"circle radius must be positive, got {r}")
        radii = [r for _, r in circles]
        if len(set(radii)) != len(radii):
            raise ValueError("circles must have pairwise distinct radii")
        object.__setattr__(self, "circles", circles)

    @property
    def point_count(self) -> int:
        return sum(n for n, _ in self.circles)


@dataclass(frozen=True)
class DistanceGraph:
    """Immutable graph: points plus index-pair edges for distances in [1, b]."""

    points: tuple[Point2, ...]
    edges: tuple[tuple[int, int], ...]
    b: float
    eps: float = 0.0

    @property
    def n(self) -> int:
        return len(self.points)

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor bitmasks (vertex j set in mask i iff edge ij)."""
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return masks

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


def circle_points(n: int, r: float, center: Point2 = Point2(0.0, 0.0)) -> list[Point2]:
    """n points evenly spaced on the radius-r circle, point 0 at the top."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if r <= 0:
        raise ValueError(f"need r > 0, got {r}")
    cx, cy = center
    return [
        Point2(cx + r * math.sin(2.0 * math.pi * k / n), cy + r * math.cos(2.0 * math.pi * k / n))
        for k in range(n)
    ]


def _edges_for_points(points: list[Point2], b: float) -> tuple[tuple[int, int], ...]:
    arr = np.asarray(points, dtype=float)
    diff = arr[:, None, :] - arr[None, :, :]
    d = np.sqrt((diff * diff).sum(axis=2))
    lo = 1.0 - BOUNDARY_TOL
    hi = b + BOUNDARY_TOL
    ii, jj = np.nonzero((d >= lo) & (d <= hi))
    return tuple((int(i), int(j)) for i, j in zip(ii, jj) if i < j)


def build_graph(config: PointConfig, b: float, eps: float | None = None) -> DistanceGraph:
    """Distance graph on the configuration's points for the interval [1, b].

    The configuration's radii are taken as given (any eps shifts are the
    caller's responsibility); eps is validated against the annulus being
    nonempty and recorded on the graph.
    """
    if b <= 1.0:
        raise ValueError(f"need b > 1, got {b}")
    if eps is None:
        eps = default_eps(b)
    if not 0.0 <= eps < (b - 1.0) / 2.0:
        raise ValueError(f"need 0 <= eps < (b-1)/2, got eps={eps} for b={b}")
    points: list[Point2] = []
    for n, r in config.circles:
        points.extend(circle_points(n, r, config.center))
    return DistanceGraph(tuple(points), _edges_for_points(points, b), b, eps)


def graph_from_points(points, b: float, eps: float = 0.0) -> DistanceGraph:
    """Distance graph on arbitrary points, same [1, b] edge rule.

    Escape hatch for fixed embeddings (unit-distance gadgets and test
    graphs); the annulus pipelines always go through PointConfig.
    """
    pts = tuple(Point2(float(p[0]), float(p[1])) for p in points)
    return DistanceGraph(pts, _edges_for_points(list(pts), b), b, eps)


def export_dimacs(g: DistanceGraph) -> str:
    """DIMACS graph format, 1-indexed, edges sorted (i asc, then j asc)."""
    lines = [f"p edge {g.n} {len(g.edges)}"]
    for i, j in sorted(g.edges):
        lines.append(f"e {i + 1} {j + 1}")
    return "\n".join(lines) + "\n"


def config_to_json(config: PointConfig, b: float, eps: float) -> str:
    payload = {
        "circles": [{"n": n, "r": r} for n, r in config.circles],
        "b": b,
        "eps": eps,
    }
    return json.dumps(payload, indent=2) + "\n"


def config_from_json(text: str) -> tuple[PointConfig, float, float]:
    payload = json.loads(text)
    circles = tuple(CircleSpec(c["n"], c["r"]) for c in payload["circles"])
    return PointConfig(circles), float(payload["b"]), float(payload["eps"])
