"""Annulus colorings and bounds.

Two directions meet here. Upper bounds come from radial colorings: split
the annulus A_b (inner radius 1, outer radius b) into s equal angular
sectors and cycle k colors through them. Lower bounds come from finite
point configurations on circles inside the annulus whose induced distance
graph provably needs many colors; any annulus lower bound k lifts to a
plane lower bound k + 3 because some closed eps-ball already shows three
colors that the annulus around it cannot reuse.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distgraph import (
    EPS_STABILITY_SCALES,
    DistanceGraph,
    PointConfig,
    CircleSpec,
    build_graph,
    default_eps,
)
from .geom import chord, mixed_chord
from .solver import ColoringOutcome, KColorQuery, NOT_COLORABLE, k_colorable

TWO_PI = 2.0 * math.pi

# Largest b each finite-configuration case certifies colors for: above the
# case threshold the configuration's graph needs the case's color count.
CASE_THRESHOLDS = {
    1: math.sqrt(2.0 - 2.0 * math.sin(18.0 * math.pi / 325.0)),
    2: math.sqrt(2.0 + 2.0 * math.sin(math.pi / 38.0)),
    3: math.sqrt(2.0 + 2.0 * math.sin(7.0 * math.pi / 45.0)),
    4: 2.0 * math.sqrt(2.0) - 1.0,
    5: (5.0 - math.sqrt(2.0) + math.sqrt(6.0)) / 3.0,
}

# Colors the case's configuration forces on the annulus, and the circle
# layout: (points per circle, number of circles). Three-circle cases put
# the middle circle at radius (1 + b) / 2.
CASE_ANNULUS_COLORS = {1: 4, 2: 5, 3: 6, 4: 7, 5: 8}
CASE_CIRCLE_COUNTS = {1: (1300, 2), 2: (190, 2), 3: (180, 3), 4: (120, 3), 5: (120, 3)}

# Sector counts of the reference radial schemes per color count.
RADIAL_SECTORS = {3: 9, 4: 12, 5: 10, 6: 12, 7: 14, 8: 16}


class BracketInvalid(Exception):
    """Bisection bracket endpoints do not straddle the verdict change."""


class NonMonotoneDetected(Exception):
    """Verdict at the returned threshold fails the two-sided re-check."""


class EpsInstability(Exception):
    """Threshold moved by more than 1e-6 across the mandated eps scales."""


@dataclass(frozen=True)
class RadialScheme:
    """k colors cycled around s equal sectors of the annulus A_b."""

    k: int
    s: int
    b: float

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"need k >= 2, got {self.k}")
        if self.s % self.k != 0 or self.s < 2 * self.k:
            raise ValueError(f"need s a multiple of k with s >= 2k, got k={self.k}, s={self.s}")
        if self.b <= 1.0:
            raise ValueError(f"need b > 1, got {self.b}")

    @property
    def alpha(self) -> float:
        return TWO_PI / self.s


@dataclass(frozen=True)
class RadialConstraints:
    """The three distances that decide whether a radial scheme is proper.

    d1: within-sector outer-outer diameter (must stay below 1),
    d2: within-sector outer-inner diameter (must stay below 1),
    gap: inner-circle chord between nearest same-color sectors (must
    exceed b).
    """

    d1: float
    d2: float
    gap: float


def radial_color(scheme: RadialScheme, angle: float) -> int:
    """Color of the sector containing `angle` (angle in [0, 2*pi))."""
    if not 0.0 <= angle < TWO_PI:
        raise ValueError(f"angle must lie in [0, 2*pi), got {angle}")
    sector = min(int(angle / scheme.alpha), scheme.s - 1)
    return sector % scheme.k


def radial_constraints(k: int, s: int, b: float) -> RadialConstraints:
    scheme = RadialScheme(k, s, b)
    a = scheme.alpha
    return RadialConstraints(
        d1=chord(b, a),
        d2=mixed_chord(b, 1.0, a),
        gap=chord(1.0, (k - 1) * a),
    )


def radial_max_b_detail(k: int, s: int) -> tuple[float | None, dict[str, float], str]:
    """Largest proper b for the (k, s) radial scheme, with the per-constraint caps.

    Each constraint caps b in closed form: d1 = 1 at b = 1/chord(1, alpha),
    d2 = 1 at b = 2 cos(alpha), and gap = b at b = chord(1, (k-1) alpha).
    Returns (b or None when the cap is <= 1, all three caps, binding name).
    """
    RadialScheme(k, s, 1.5)  # validate (k, s) only
    a = TWO_PI / s
    caps = {
        "d1": 1.0 / chord(1.0, a),
        "d2": 2.0 * math.cos(a),
        "gap": chord(1.0, (k - 1) * a),
    }
    binding = min(caps, key=lambda name: (caps[name], name))
    b = caps[binding]
    return (b if b > 1.0 else None), caps, binding


def radial_max_b(k: int, s: int) -> float | None:
    return radial_max_b_detail(k, s)[0]


def radial_best(k: int, s_max: int) -> tuple[int, float] | None:
    """Sector count s <= s_max (k | s) maximizing radial_max_b; ties to smaller s."""
    if s_max < 2 * k:
        raise ValueError(f"need s_max >= 2k, got {s_max}")
    best: tuple[int, float] | None = None
    for s in range(2 * k, s_max + 1, k):
        b = radial_max_b(k, s)
        if b is not None and (best is None or b > best[1]):
            best = (s, b)
    return best


def lift_lower_bound(annulus_colors: int) -> int:
    """Plane lower bound from an annulus lower bound: k colors become k + 3."""
    if annulus_colors < 1:
        raise ValueError(f"need annulus_colors >= 1, got {annulus_colors}")
    return annulus_colors + 3


def lower_bound_config(
    case: int, b: float, eps: float | None = None, n_override: int | None = None
) -> PointConfig:
    """Point configuration of the given lower-bound case at width b.

    Cases 1-2 use two circles at radii 1 + eps and b - eps; cases 3-5 add
    a middle circle at (1 + b) / 2. n_override scales every circle down
    for desk-size runs (divisors of the full count keep the subset
    property). The case threshold is deliberately not enforced so the
    same configs can be built on both sides of a bisection bracket.
    """
    if case not in CASE_CIRCLE_COUNTS:
        raise ValueError(f"case must be 1..5, got {case}")
    if b <= 1.0:
        raise ValueError(f"need b > 1, got {b}")
    if eps is None:
        eps = default_eps(b)
    if not 0.0 < eps < (b - 1.0) / 2.0:
        raise ValueError(f"need 0 < eps < (b-1)/2, got eps={eps} for b={b}")
    n_full, rings = CASE_CIRCLE_COUNTS[case]
    n = n_full if n_override is None else int(n_override)
    if n < 1:
        raise ValueError(f"need n_override >= 1, got {n_override}")
    radii = [1.0 + eps, b - eps] if rings == 2 else [1.0 + eps, (1.0 + b) / 2.0, b - eps]
    return PointConfig(tuple(CircleSpec(n, r) for r in radii))


def case_graph(
    case: int, b: float, eps: float | None = None, n_override: int | None = None
) -> DistanceGraph:
    if eps is None:
        eps = default_eps(b)
    return build_graph(lower_bound_config(case, b, eps, n_override), b, eps)


def annulus_verdict(
    case: int,
    b: float,
    k: int,
    n_override: int | None = None,
    eps: float | None = None,
    time_budget: float | None = None,
    seed: int = 0,
    progress=None,
) -> ColoringOutcome:
    """Solve (k-1)-colorability of the case config; not_colorable certifies
    that the annulus at this b needs at least k colors."""
    g = case_graph(case, b, eps, n_override)
    return k_colorable(KColorQuery(g, k - 1, time_budget), seed=seed, progress=progress)


def threshold_bisect(
    case: int,
    n_override: int | None,
    k: int,
    b_lo: float,
    b_hi: float,
    tol: float,
    eps_scales: tuple[float, ...] = EPS_STABILITY_SCALES,
    time_budget: float | None = None,
    seed: int = 0,
) -> float:
    """Empirical b* where the case config first needs >= k colors.

    Requires needs-at-least-k false at b_lo and true at b_hi (verified up
    front), bisects to tol, then re-verifies both sides of the returned
    value; the config's radii move with b so monotonicity is empirical,
    not guaranteed. The whole search runs once per eps scale and the
    results must agree to 1e-6.
    """
    if not (1.0 < b_lo < b_hi):
        raise BracketInvalid(f"need 1 < b_lo < b_hi, got [{b_lo}, {b_hi}]")
    if tol <= 0:
        raise ValueError(f"need tol > 0, got {tol}")

    def needs(b: float, scale: float) -> bool:
        out = annulus_verdict(
            case, b, k, n_override, eps=(b - 1.0) * scale, time_budget=time_budget, seed=seed
        )
        return out.status == NOT_COLORABLE

    results: list[float] = []
    for scale in eps_scales:
        if needs(b_lo, scale):
            raise BracketInvalid(f"config already needs >= {k} colors at b_lo = {b_lo}")
        if not needs(b_hi, scale):
            raise BracketInvalid(f"config does not need >= {k} colors at b_hi = {b_hi}")
        lo, hi = b_lo, b_hi
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if needs(mid, scale):
                hi = mid
            else:
                lo = mid
        b_star = 0.5 * (lo + hi)
        if not needs(b_star + tol, scale) or needs(b_star - tol, scale):
            raise NonMonotoneDetected(f"verdict not monotone around b* = {b_star}")
        results.append(b_star)

    if max(results) - min(results) > 1e-6:
        raise EpsInstability(f"thresholds across eps scales spread {results}")
    # report the run at the scale closest to the default 1e-6
    pick = min(range(len(eps_scales)), key=lambda i: abs(math.log10(eps_scales[i]) + 6.0))
    return results[pick]


@dataclass(frozen=True)
class AnnulusBoundsRow:
    """Chromatic bounds for the annulus A_b on one b interval (lo, hi]."""

    b_interval: tuple[float, float]
    lower: int
    upper: int
    source: str


def _breakpoints() -> list[tuple[float, str]]:
    pts = [(radial_max_b(k, s), f"radial-{k}-{s}") for k, s in RADIAL_SECTORS.items()]
    pts += [(CASE_THRESHOLDS[c], f"thm5-case-{c}") for c in (1, 2, 3, 4)]
    pts.sort()
    return pts


def annulus_bounds_rows() -> list[AnnulusBoundsRow]:
    """All annulus bound rows, from b just above 1 up to the last radial cap."""
    radial_caps = sorted((radial_max_b(k, s), k) for k, s in RADIAL_SECTORS.items())
    thresholds = sorted((CASE_THRESHOLDS[c], CASE_ANNULUS_COLORS[c]) for c in (1, 2, 3, 4))
    rows = []
    lo = 1.0
    for hi, source in _breakpoints():
        mid = 0.5 * (lo + hi)
        lower = 3 + sum(1 for t, _ in thresholds if t < mid)
        upper = next(k for cap, k in radial_caps if cap >= mid)
        rows.append(AnnulusBoundsRow((lo, hi), lower, upper, source))
        lo = hi
    return rows


def annulus_bounds(b: float) -> AnnulusBoundsRow:
    """Bounds row whose interval (lo, hi] contains b."""
    rows = annulus_bounds_rows()
    if not rows[0].b_interval[0] < b <= rows[-1].b_interval[1]:
        raise ValueError(f"b = {b} is outside the tabulated range")
    for row in rows:
        if row.b_interval[0] < b <= row.b_interval[1]:
            return row
    raise AssertionError("unreachable")


def annulus_bounds_csv() -> str:
    lines = ["b_lo,b_hi,lower,upper,source"]
    for row in annulus_bounds_rows():
        lo, hi = row.b_interval
        lines.append(f"{lo:.9g},{hi:.9g},{row.lower},{row.upper},{row.source}")
    return "\n".join(lines) + "\n"


def radial_violation_exists(
    k: int,
    s: int,
    b: float,
    n_pairs: int = 100_000,
    seed: int = 0,
    band: float = 1e-9,
) -> bool:
    """Search the radial scheme for a same-color pair at distance inside
    (1 + band, b - band).

    Deterministic strata put points just inside every sector boundary on
    both extreme radii, which is where the scheme's critical pairs live;
    seeded random pairs (second point drawn at a forbidden distance from
    the first) sweep everything else.
    """
    scheme = RadialScheme(k, s, b)
    alpha = scheme.alpha

    def colors_of(angles: np.ndarray) -> np.ndarray:
        sector = np.minimum((angles / alpha).astype(int), s - 1)
        return sector % k

    # strata: both radii, angles a hair on each side of every boundary
    offs = np.array([band, 1e-7, -band, -1e-7])
    boundary = np.add.outer(np.arange(s) * alpha, offs).ravel() % TWO_PI
    radii = np.array([1.0, b])
    ang = np.repeat(boundary, 2)
    rad = np.tile(radii, boundary.size)
    px = rad * np.cos(ang)
    py = rad * np.sin(ang)
    cols = colors_of(ang)
    d = np.hypot(px[:, None] - px[None, :], py[:, None] - py[None, :])
    same = cols[:, None] == cols[None, :]
    if np.any(same & (d > 1.0 + band) & (d < b - band)):
        return True

    rng = np.random.default_rng(seed)
    remaining = n_pairs
    chunk = 200_000
    while remaining > 0:
        m = min(chunk, remaining)
        remaining -= m
        r1 = np.sqrt(rng.uniform(1.0, b * b, m))
        a1 = rng.uniform(0.0, TWO_PI, m)
        dd = rng.uniform(1.0 + band, b - band, m)
        phi = rng.uniform(0.0, TWO_PI, m)
        x2 = r1 * np.cos(a1) + dd * np.cos(phi)
        y2 = r1 * np.sin(a1) + dd * np.sin(phi)
        r2 = np.hypot(x2, y2)
        inside = (r2 >= 1.0) & (r2 <= b)
        if not np.any(inside):
            continue
        a2 = np.arctan2(y2[inside], x2[inside]) % TWO_PI
        c1 = colors_of(a1[inside])
        c2 = colors_of(a2)
        if np.any(c1 == c2):
            return True
    return False


def radial_max_b_numeric(
    k: int,
    s: int,
    b_lo: float = 1.001,
    b_hi: float = 2.5,
    tol: float = 1e-7,
    n_pairs: int = 100_000,
    seed: int = 0,
) -> float:
    """Largest b the sampled checker accepts, found by bisection.

    Independent numerical route to the same quantity as radial_max_b;
    the two must agree to 1e-6.
    """
    if radial_violation_exists(k, s, b_lo, n_pairs, seed):
        raise BracketInvalid(f"scheme already invalid at b_lo = {b_lo}")
    if not radial_violation_exists(k, s, b_hi, n_pairs, seed):
        raise BracketInvalid(f"scheme still valid at b_hi = {b_hi}")
    lo, hi = b_lo, b_hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if radial_violation_exists(k, s, mid, n_pairs, seed):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
