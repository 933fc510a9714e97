"""Plane colorings from the hexagonal tiling.

Tiles are regular hexagons of diameter 1 with two vertical sides; tile
(i, j) is the base tile shifted by i*S1 + j*S2. A (p, q) scheme colors
tile (i, j) by its coset modulo the index-N sublattice generated by
(p, q) and (p+q, -p), where N = p^2 + pq + q^2; same-colored tile centers
form a triangular lattice spanned by v = p*S1 + q*S2 and its 60-degree
rotation. The largest b for which the scheme properly colors the
interval-distance graph G_[1,b] is the minimum distance between distinct
same-colored tiles.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .geom import ConvexPolygon, Point2, polygon_min_distance

SQRT3 = math.sqrt(3.0)

S1 = Point2(SQRT3 / 2.0, 0.0)
S2 = Point2(SQRT3 / 4.0, -0.75)

TILE_DIAMETER = 1.0

# circumradius 1/2, vertices at 30 + 60k degrees: two sides vertical
BASE_TILE = ConvexPolygon(
    [
        (0.5 * math.cos(math.radians(a)), 0.5 * math.sin(math.radians(a)))
        for a in (30, 90, 150, 210, 270, 330)
    ]
)

# equality slack when comparing scheme distances against requested b values
B_TOL = 1e-9


@dataclass(frozen=True)
class HexScheme:
    """(p, q) coloring of the hexagonal tiling; p, q >= 0, not both zero."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or (self.p == 0 and self.q == 0):
            raise ValueError(f"need p, q >= 0 and (p, q) != (0, 0), got ({self.p}, {self.q})")

    @property
    def color_count_formula(self) -> int:
        return self.p * self.p + self.p * self.q + self.q * self.q

    @property
    def v(self) -> Point2:
        return Point2(self.p * S1.x + self.q * S2.x, self.p * S1.y + self.q * S2.y)

    @property
    def vbar(self) -> Point2:
        return Point2(
            (self.p + self.q) * S1.x - self.p * S2.x,
            (self.p + self.q) * S1.y - self.p * S2.y,
        )


def tile_center(i: int, j: int) -> Point2:
    return Point2(i * S1.x + j * S2.x, i * S1.y + j * S2.y)


def hex_tile(i: int, j: int) -> ConvexPolygon:
    c = tile_center(i, j)
    return BASE_TILE.translated(c.x, c.y)


def point_to_tile(p) -> tuple[int, int]:
    """Tile index (i, j) owning the point.

    The tiling is the Voronoi partition of the tile centers, so the owner
    is the nearest center; exact boundary ties break to the
    lexicographically smallest index, which keeps the assignment a
    partition (every point gets exactly one tile).
    """
    x, y = float(p[0]), float(p[1])
    j0 = -y / 0.75
    i0 = (x - j0 * S2.x) / S1.x
    bi, bj = round(i0), round(j0)
    best = None
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            i, j = bi + di, bj + dj
            c = tile_center(i, j)
            d2 = (x - c.x) ** 2 + (y - c.y) ** 2
            key = (d2, i, j)
            if best is None or key < best:
                best = key
    return best[1], best[2]


def _coset_key(p: int, q: int, n_colors: int, i: int, j: int) -> tuple[int, int]:
    # (di, dj) lies in the scheme's sublattice iff both forms vanish mod N
    return (p * i + (p + q) * j) % n_colors, (q * i - p * j) % n_colors


@lru_cache(maxsize=None)
def _color_table(p: int, q: int) -> dict[tuple[int, int], int]:
    """Coset key -> color index, built by enumerating a bounded tile window.

    Representatives are the lexicographically first tiles of each coset in
    the window; indices follow the sorted representatives. The window is
    checked to expose every coset.
    """
    n_formula = p * p + p * q + q * q
    w = 4 * (p + q)
    reps: dict[tuple[int, int], tuple[int, int]] = {}
    for i in range(w):
        for j in range(w):
            key = _coset_key(p, q, n_formula, i, j)
            if key not in reps:
                reps[key] = (i, j)
    if len(reps) != n_formula:
        raise RuntimeError(
            f"window enumeration found {len(reps)} cosets for ({p}, {q}), "
            f"formula says {n_formula}"
        )
    order = sorted(reps, key=reps.get)
    return {key: idx for idx, key in enumerate(order)}


def enumerated_color_count(p: int, q: int, window: int | None = None) -> int:
    """Distinct colors seen on a window of tiles, by pure orbit enumeration.

    Independent of the closed-form count: tiles are classed together only
    via the sublattice membership test.
    """
    n_formula = p * p + p * q + q * q
    w = window if window is not None else 4 * (p + q)
    keys = {_coset_key(p, q, n_formula, i, j) for i in range(w) for j in range(w)}
    return len(keys)


def color_of_tile(scheme: HexScheme, i: int, j: int) -> int:
    table = _color_table(scheme.p, scheme.q)
    return table[_coset_key(scheme.p, scheme.q, scheme.color_count_formula, i, j)]


def color_count(scheme: HexScheme) -> int:
    """Number of colors the scheme uses (cross-checked against enumeration)."""
    _color_table(scheme.p, scheme.q)  # raises if enumeration disagrees
    return scheme.color_count_formula


def min_same_color_distance(p: int, q: int) -> float:
    """Minimum distance between distinct same-colored tiles.

    Enumerates same-color center offsets k*v + l*vbar in expanding rings;
    a ring whose smallest center distance exceeds the running minimum + 1
    cannot improve it (tile diameter is 1), so the search stops there.
    """
    scheme = HexScheme(p, q)
    v, vb = scheme.v, scheme.vbar
    vlen = math.hypot(v.x, v.y)
    base = BASE_TILE
    best = math.inf
    ring = 1
    while True:
        # k^2 + kl + l^2 >= 3/4 * max(|k|,|l|)^2 bounds the ring's center distances
        if vlen * (SQRT3 / 2.0) * ring > best + TILE_DIAMETER:
            break
        for k in range(-ring, ring + 1):
            for l in range(-ring, ring + 1):
                if max(abs(k), abs(l)) != ring:
                    continue
                ox = k * v.x + l * vb.x
                oy = k * v.y + l * vb.y
                if math.hypot(ox, oy) > best + TILE_DIAMETER:
                    continue
                d = polygon_min_distance(base, base.translated(ox, oy))
                if d < best:
                    best = d
        ring += 1
    return best


def hex_b_max(p: int, q: int) -> float | None:
    """Largest b for which the (p, q) coloring is proper for G_[1,b].

    None when the scheme has a single color or its same-color tile
    distance drops below 1 (no valid b exists).
    """
    scheme = HexScheme(p, q)
    if scheme.color_count_formula < 2:
        return None
    d = min_same_color_distance(p, q)
    return d if d >= 1.0 else None


@dataclass(frozen=True)
class SchemeRow:
    b: float
    n_colors: int
    p: int
    q: int


def sweep_pairs(p_max: int, q_max: int) -> list[tuple[int, int]]:
    """The (p, q) sweep with p <= q (the reflected schemes are identical)."""
    if p_max < 0 or q_max < 0:
        raise ValueError("bounds must be >= 0")
    return [
        (p, q)
        for q in range(q_max + 1)
        for p in range(min(p_max, q) + 1)
        if (p, q) != (0, 0)
    ]


def pareto_table(
    p_max: int = 10,
    q_max: int = 10,
    b_values: dict[tuple[int, int], float | None] | None = None,
) -> list[SchemeRow]:
    """Pareto-optimal (b_max, colors) schemes over p <= q (reflection symmetry).

    A row survives unless some other scheme reaches at least as far
    (b' >= b, up to float slack) with strictly fewer colors. Sorted by b.
    b_values may carry precomputed hex_b_max results (e.g. from a worker
    pool); missing pairs are computed here.
    """
    pairs = sweep_pairs(p_max, q_max)
    rows: list[SchemeRow] = []
    for p, q in pairs:
        b = b_values[(p, q)] if b_values is not None else hex_b_max(p, q)
        if b is not None:
            rows.append(SchemeRow(b, p * p + p * q + q * q, p, q))
    keep = [
        r
        for r in rows
        if not any(o.b >= r.b - B_TOL and o.n_colors < r.n_colors for o in rows)
    ]
    keep.sort(key=lambda r: (r.b, r.n_colors, r.p, r.q))
    return keep


def best_scheme_for_b(b: float, search_max: int = 10) -> tuple[int, int, int] | None:
    """Scheme with the fewest colors whose reach covers b, or None.

    Ties break to the lexicographically smallest (p, q).
    """
    if b <= 1.0:
        raise ValueError(f"need b > 1, got {b}")
    best: tuple[int, int, int] | None = None  # (n_colors, p, q)
    for q in range(search_max + 1):
        for p in range(q + 1):
            if p == 0 and q == 0:
                continue
            reach = hex_b_max(p, q)
            if reach is None or reach < b - B_TOL:
                continue
            key = (p * p + p * q + q * q, p, q)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return best[1], best[2], best[0]


FAMILIES = ("exoo", "lonc", "gjssw")


def named_family(family: str, r: int) -> HexScheme:
    """The classic one-parameter scheme families: (r, r+1), (r, r), (r, 0)."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if family == "exoo":
        return HexScheme(r, r + 1)
    if family == "lonc":
        return HexScheme(r, r)
    if family == "gjssw":
        return HexScheme(r, 0)
    raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")


def family_bound(family: str, r: int) -> float:
    """The b reach each family is known to achieve at parameter r."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if family == "exoo":
        return math.sqrt(9 * r * r - 3 * r + 1) / 2.0
    if family == "lonc":
        return 1.5 * r - 1.0
    if family == "gjssw":
        return SQRT3 / 2.0 * (r - 1)
    raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")


def _tile_indices_vectorized(xs: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    j0 = -ys / 0.75
    i0 = (xs - j0 * S2.x) / S1.x
    bi = np.rint(i0).astype(np.int64)
    bj = np.rint(j0).astype(np.int64)
    best_d2 = np.full(xs.shape, np.inf)
    best_i = np.zeros(xs.shape, dtype=np.int64)
    best_j = np.zeros(xs.shape, dtype=np.int64)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            ii = bi + di
            jj = bj + dj
            cx = ii * S1.x + jj * S2.x
            cy = ii * S1.y + jj * S2.y
            d2 = (xs - cx) ** 2 + (ys - cy) ** 2
            closer = d2 < best_d2
            best_d2 = np.where(closer, d2, best_d2)
            best_i = np.where(closer, ii, best_i)
            best_j = np.where(closer, jj, best_j)
    return best_i, best_j


def _colors_of_points(scheme: HexScheme, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    n = scheme.color_count_formula
    table = _color_table(scheme.p, scheme.q)
    lut = np.full(n * n, -1, dtype=np.int64)
    for (k1, k2), idx in table.items():
        lut[k1 * n + k2] = idx
    ii, jj = _tile_indices_vectorized(xs, ys)
    k1 = (scheme.p * ii + (scheme.p + scheme.q) * jj) % n
    k2 = (scheme.q * ii - scheme.p * jj) % n
    return lut[k1 * n + k2]


def _boundary_strata(points_per_edge: int = 30, pull: float = 1e-7) -> np.ndarray:
    """Points along the base tile's boundary, pulled strictly inside.

    The pull keeps every point owned by its own tile regardless of the
    boundary convention, so cross-tile strata pairs are genuinely
    same-colored whenever their tiles share a coset.
    """
    vs = BASE_TILE.vertices
    pts = []
    for i in range(6):
        a = np.array(vs[i])
        c = np.array(vs[(i + 1) % 6])
        t = np.linspace(0.0, 1.0, points_per_edge, endpoint=False)[:, None]
        pts.append(a + t * (c - a))
    return np.vstack(pts) * (1.0 - pull)


def _strata_violation(scheme: HexScheme, b: float, band: float) -> bool:
    """Check same-color tile pairs at their closest approach.

    Same-colored tiles sit at offsets k*v + l*vbar; near-boundary point
    pairs across such tiles realize the extreme distances, so a scheme
    invalid at width b shows up here without luck.
    """
    pts = _boundary_strata()
    v, vb = scheme.v, scheme.vbar
    vlen = math.hypot(v.x, v.y)
    ring = 1
    while vlen * (SQRT3 / 2.0) * ring <= b + TILE_DIAMETER:
        for k in range(-ring, ring + 1):
            for l in range(-ring, ring + 1):
                if max(abs(k), abs(l)) != ring:
                    continue
                ox = k * v.x + l * vb.x
                oy = k * v.y + l * vb.y
                if math.hypot(ox, oy) > b + TILE_DIAMETER:
                    continue
                shifted = pts + np.array([ox, oy])
                d = np.sqrt(
                    ((pts[:, None, :] - shifted[None, :, :]) ** 2).sum(axis=2)
                )
                if np.any((d > 1.0 + band) & (d < b - band)):
                    return True
        ring += 1
    return False


def verify_scheme_sampled(
    scheme: HexScheme, b: float, samples: int = 1_000_000, seed: int = 0
) -> bool:
    """Soundness check of the scheme at width b by point sampling.

    Deterministic near-boundary strata probe every same-color tile pair at
    its closest approach (where violations first open up); seeded random
    pairs at forbidden distances (in (1, b), inset by 1e-9) sweep the rest
    of the window. False as soon as any same-colored pair at a forbidden
    distance appears. Deterministic for a fixed seed.
    """
    if b <= 1.0:
        raise ValueError(f"need b > 1, got {b}")
    band = 1e-9
    if _strata_violation(scheme, b, band):
        return False
    rng = np.random.default_rng(seed)
    v, vb = scheme.v, scheme.vbar
    span = abs(v.x) + abs(vb.x) + abs(v.y) + abs(vb.y) + b + 2.0
    chunk = 200_000
    remaining = samples
    while remaining > 0:
        m = min(chunk, remaining)
        remaining -= m
        x1 = rng.uniform(-span, span, m)
        y1 = rng.uniform(-span, span, m)
        d = rng.uniform(1.0 + band, b - band, m)
        phi = rng.uniform(0.0, 2.0 * math.pi, m)
        x2 = x1 + d * np.cos(phi)
        y2 = y1 + d * np.sin(phi)
        c1 = _colors_of_points(scheme, x1, y1)
        c2 = _colors_of_points(scheme, x2, y2)
        if np.any(c1 == c2):
            return False
    return True


def scheme_json(scheme: HexScheme) -> str:
    return json.dumps(
        {
            "p": scheme.p,
            "q": scheme.q,
            "N": color_count(scheme),
            "b_max": hex_b_max(scheme.p, scheme.q),
        },
        indent=2,
    ) + "\n"


def pareto_table_csv(rows: list[SchemeRow]) -> str:
    lines = ["b,n_colors,p,q"]
    for r in rows:
        lines.append(f"{r.b:.9g},{r.n_colors},{r.p},{r.q}")
    return "\n".join(lines) + "\n"


def min_colors_curve(b_values, search_max: int = 10) -> list[tuple[float, int | None]]:
    """Fewest colors reachable at each b of the grid (None when out of range)."""
    out = []
    for b in b_values:
        choice = best_scheme_for_b(b, search_max)
        out.append((b, choice[2] if choice is not None else None))
    return out


def min_colors_csv(rows) -> str:
    lines = ["b,min_colors"]
    for b, n in rows:
        lines.append(f"{b:.9g},{'' if n is None else n}")
    return "\n".join(lines) + "\n"
