"""The eight-color construction's feasibility system and its optimum.

The construction modifies the classic seven-hexagon pattern by planting a
small triangle of an eighth color at every second corner meeting point,
which lets the hexagons grow. Two shape parameters remain: x (triangle
size) and y (hexagon size). Properness reduces to four inequalities in
(x, y, b); the module evaluates them and maximizes b over the feasible
set.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

SQRT3 = math.sqrt(3.0)

FEASIBLE_TOL = 1e-12


class ToleranceNotReached(Exception):
    """Refinement failed to produce a feasible point at the requested tolerance."""


@dataclass(frozen=True)
class EightParams:
    x: float
    y: float
    b: float

    def __post_init__(self):
        if self.x <= 0 or self.y <= 0 or self.b <= 1:
            raise ValueError(f"need x, y > 0 and b > 1, got {self}")


def constraint_slacks(params: EightParams) -> tuple[float, float, float, float]:
    """Slack of each constraint (nonnegative means satisfied):

    1. y*sqrt(3) + x <= 1
    2. 2*y*sqrt(3) - x >= b
    3. (2y - x/(2*sqrt(3)))^2 + (x/2)^2 <= 1
    4. ((3/2)*y*sqrt(3))^2 + (y/2 + x/sqrt(3))^2 >= b^2
    """
    x, y, b = params.x, params.y, params.b
    return (
        1.0 - (y * SQRT3 + x),
        (2.0 * y * SQRT3 - x) - b,
        1.0 - ((2.0 * y - x / (2.0 * SQRT3)) ** 2 + (x / 2.0) ** 2),
        ((1.5 * y * SQRT3) ** 2 + (y / 2.0 + x / SQRT3) ** 2) - b * b,
    )


def feasible(params: EightParams, tol: float = FEASIBLE_TOL) -> bool:
    """All four constraints hold, non-strictly up to tol."""
    return all(s >= -tol for s in constraint_slacks(params))


def _c2(x: float, y: float) -> float:
    return 2.0 * y * SQRT3 - x


def _c3(x: float, y: float) -> float:
    return (2.0 * y - x / (2.0 * SQRT3)) ** 2 + (x / 2.0) ** 2


def _c4_sqrt(x: float, y: float) -> float:
    return math.hypot(1.5 * y * SQRT3, y / 2.0 + x / SQRT3)


def _bisect(f, lo: float, hi: float, iters: int = 200) -> float | None:
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0) == (fhi < 0):
        return None
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo <= 1e-16 * max(1.0, abs(lo)):
            break
    return 0.5 * (lo + hi)


def _checked_candidate(x: float, y: float):
    """(b, x, y) with b capped by constraints 2/4, or None when 1/3 fail."""
    if not (x > 0 and y > 0):
        return None
    if 1.0 - (y * SQRT3 + x) < -FEASIBLE_TOL:
        return None
    if 1.0 - _c3(x, y) < -FEASIBLE_TOL:
        return None
    b = min(_c2(x, y), _c4_sqrt(x, y))
    if b <= 1.0:
        return None
    return b, x, y


def _candidate_13():
    # constraints 1 and 3 tight: x eliminated along y*sqrt(3) + x = 1,
    # then constraint 3 becomes a scalar equation in y
    def g(y):
        return _c3(1.0 - SQRT3 * y, y) - 1.0

    y = _bisect(g, 1e-9, 1.0 / SQRT3 - 1e-9)
    if y is None:
        return None
    return _checked_candidate(1.0 - SQRT3 * y, y)


def _candidate_124():
    # constraint 1 tight and constraints 2, 4 equal: scalar equation in y
    def h(y):
        x = 1.0 - SQRT3 * y
        return _c2(x, y) - _c4_sqrt(x, y)

    y = _bisect(h, 1e-6, 1.0 / SQRT3 - 1e-9)
    if y is None:
        return None
    return _checked_candidate(1.0 - SQRT3 * y, y)


def _candidate_234(x0: float, y0: float):
    # constraint 3 tight and constraints 2, 4 equal: crude alternating
    # refinement from the grid seed, then y re-solved exactly on c3
    x, y = x0, y0
    for _ in range(80):
        ynew = _bisect(lambda t: _c3(x, t) - 1.0, max(1e-9, y - 0.2), y + 0.2)
        if ynew is None:
            return None
        y = ynew
        xnew = _bisect(lambda t: _c2(t, y) - _c4_sqrt(t, y), 1e-9, 1.0)
        if xnew is None:
            return None
        if abs(xnew - x) < 1e-14:
            x = xnew
            break
        x = xnew
    y = _bisect(lambda t: _c3(x, t) - 1.0, max(1e-9, y - 0.2), y + 0.2)
    if y is None:
        return None
    return _checked_candidate(x, y)


@dataclass(frozen=True)
class EightOptimum:
    b: float
    x: float
    y: float
    active_constraints: tuple[int, ...]
    slacks: tuple[float, float, float, float]


def maximize_b(tol: float = 1e-6) -> EightOptimum:
    """Maximal b admitting a feasible (x, y), to within tol.

    A coarse grid over (0, 1)^2 seeds the search, then each plausible
    active set ({1,3}, {1,2,4}, {2,3,4}) is solved to machine precision
    and the best exactly-feasible candidate wins. The returned pair is
    feasible at b - tol.
    """
    if tol <= 0:
        raise ValueError(f"need tol > 0, got {tol}")
    step = 1e-3
    grid = np.arange(step, 1.0, step)
    X, Y = np.meshgrid(grid, grid)
    ok = (Y * SQRT3 + X <= 1.0) & ((2.0 * Y - X / (2.0 * SQRT3)) ** 2 + (X / 2.0) ** 2 <= 1.0)
    ceiling = np.minimum(
        2.0 * Y * SQRT3 - X,
        np.sqrt((1.5 * Y * SQRT3) ** 2 + (Y / 2.0 + X / SQRT3) ** 2),
    )
    ceiling[~ok] = -np.inf
    flat = int(np.argmax(ceiling))
    x0 = float(X.ravel()[flat])
    y0 = float(Y.ravel()[flat])

    candidates = [_checked_candidate(x0, y0)]
    candidates.append(_candidate_13())
    candidates.append(_candidate_124())
    candidates.append(_candidate_234(x0, y0))
    viable = [c for c in candidates if c is not None]
    if not viable:
        raise ToleranceNotReached("no candidate produced a feasible point")
    b, x, y = max(viable)
    if b - tol <= 1.0 or not feasible(EightParams(x, y, b - tol)):
        raise ToleranceNotReached(f"candidate (b={b}, x={x}, y={y}) fails at b - tol")
    slacks = constraint_slacks(EightParams(x, y, b))
    active = tuple(i + 1 for i, s in enumerate(slacks) if abs(s) <= math.sqrt(tol))
    return EightOptimum(b, x, y, active, slacks)


def optimum_json(opt: EightOptimum) -> str:
    return json.dumps(
        {
            "b": opt.b,
            "x": opt.x,
            "y": opt.y,
            "active_constraints": list(opt.active_constraints),
            "slacks": list(opt.slacks),
        },
        indent=2,
    ) + "\n"
