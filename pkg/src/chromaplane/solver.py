"""Exact k-colorability by branch and bound.

The search is DSATUR-style: always branch on an uncolored vertex with the
most distinctly colored neighbors (ties by degree, then index), try only
colors up to one past the highest color used so far, and fail fast when
any uncolored vertex has every color in its neighborhood. A greedily
found clique is pre-colored with distinct colors to break color symmetry.
All decisions are deterministic for a fixed seed.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .distgraph import DistanceGraph

COLORABLE = "colorable"
NOT_COLORABLE = "not_colorable"

_BUDGET_CHECK_INTERVAL = 2048


class BudgetExhausted(Exception):
    """Time budget ran out before the search reached an exact answer."""

    def __init__(self, search_nodes: int, elapsed: float):
        super().__init__(f"budget exhausted after {search_nodes} nodes ({elapsed:.1f}s)")
        self.search_nodes = search_nodes
        self.elapsed = elapsed


class InconsistentBounds(Exception):
    """Caller-supplied chromatic bounds contradict solver verdicts."""


@dataclass(frozen=True)
class KColorQuery:
    graph: DistanceGraph
    k: int
    time_budget: float | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"need k >= 1, got {self.k}")


@dataclass(frozen=True)
class ColoringOutcome:
    status: str
    assignment: tuple[int, ...] | None
    search_nodes: int
    elapsed: float

    @property
    def colorable(self) -> bool:
        return self.status == COLORABLE


def greedy_clique(adj: list[int], restarts: int = 200, seed: int = 0) -> list[int]:
    """Greedy max clique: extend by highest-degree candidate, many restarts.

    Restart 0 starts from the highest-degree vertex, the rest from random
    vertices drawn from a seeded generator, so the result is reproducible.
    """
    n = len(adj)
    if n == 0:
        return []
    rng = random.Random(seed)
    deg = [a.bit_count() for a in adj]
    start0 = max(range(n), key=lambda v: (deg[v], -v))
    best: list[int] = []
    for it in range(restarts):
        start = start0 if it == 0 else rng.randrange(n)
        clique = [start]
        cand = adj[start]
        while cand:
            pick, pick_deg = -1, -1
            c = cand
            while c:
                v = (c & -c).bit_length() - 1
                c &= c - 1
                if deg[v] > pick_deg:
                    pick, pick_deg = v, deg[v]
            clique.append(pick)
            cand &= adj[pick]
        if len(clique) > len(best):
            best = clique
    return best


def k_colorable(
    query: KColorQuery,
    seed: int = 0,
    use_clique_seed: bool = True,
    progress=None,
    progress_interval: float = 10.0,
) -> ColoringOutcome:
    """Decide whether the graph admits a proper coloring with <= k colors.

    Returns an exact verdict with a certificate assignment when colorable.
    Raises BudgetExhausted if query.time_budget runs out; a budget cut is
    never reported as not_colorable. `progress(nodes, elapsed)` is invoked
    roughly every `progress_interval` seconds when supplied.
    """
    g, k = query.graph, query.k
    n = g.n
    start = time.monotonic()
    if n == 0:
        return ColoringOutcome(COLORABLE, (), 0, 0.0)

    adj = g.adjacency_masks()
    deg = [a.bit_count() for a in adj]
    clique = greedy_clique(adj, seed=seed) if use_clique_seed else []
    if len(clique) > k:
        return ColoringOutcome(NOT_COLORABLE, None, 0, time.monotonic() - start)

    full = (1 << k) - 1
    color = [-1] * n
    sat = [0] * n
    uncolored = set(range(n))
    for idx, v in enumerate(clique):
        color[v] = idx
        uncolored.discard(v)
        bit = 1 << idx
        c = adj[v]
        while c:
            u = (c & -c).bit_length() - 1
            c &= c - 1
            sat[u] |= bit
    # a pre-colored clique can already strand a shared neighbor
    for v in uncolored:
        if sat[v] == full:
            return ColoringOutcome(NOT_COLORABLE, None, 0, time.monotonic() - start)

    nodes = 0
    next_check = _BUDGET_CHECK_INTERVAL
    next_progress = start + progress_interval
    budget = query.time_budget

    def tick():
        nonlocal next_check, next_progress
        next_check = nodes + _BUDGET_CHECK_INTERVAL
        now = time.monotonic()
        if budget is not None and now - start > budget:
            raise BudgetExhausted(nodes, now - start)
        if progress is not None and now >= next_progress:
            progress(nodes, now - start)
            next_progress = now + progress_interval

    def pick() -> int:
        best, best_key = -1, (-1, -1, 0)
        for v in uncolored:
            key = (sat[v].bit_count(), deg[v], -v)
            if key > best_key:
                best, best_key = v, key
        return best

    max_used = len(clique)
    if not uncolored:
        return ColoringOutcome(COLORABLE, tuple(color), 0, time.monotonic() - start)

    # each frame: [vertex, remaining candidate mask, undo list, saved max_used]
    v0 = pick()
    uncolored.discard(v0)
    stack = [[v0, ~sat[v0] & ((1 << min(k, max_used + 1)) - 1), [], max_used]]
    answer = False
    while stack:
        frame = stack[-1]
        v, cand, changed, saved_max = frame
        for u in changed:
            sat[u] &= ~(1 << color[v])
        changed.clear()
        if cand == 0:
            color[v] = -1
            uncolored.add(v)
            stack.pop()
            continue
        bit = cand & -cand
        frame[1] = cand ^ bit
        ci = bit.bit_length() - 1
        color[v] = ci
        nodes += 1
        if nodes >= next_check:
            tick()
        dead = False
        c = adj[v]
        while c:
            u = (c & -c).bit_length() - 1
            c &= c - 1
            if color[u] == -1 and not (sat[u] & bit):
                sat[u] |= bit
                changed.append(u)
                if sat[u] == full:
                    dead = True
        if dead:
            continue
        if not uncolored:
            answer = True
            break
        max_used = max(saved_max, ci + 1)
        w = pick()
        uncolored.discard(w)
        stack.append([w, ~sat[w] & ((1 << min(k, max_used + 1)) - 1), [], max_used])

    elapsed = time.monotonic() - start
    if answer:
        return ColoringOutcome(COLORABLE, tuple(color), nodes, elapsed)
    return ColoringOutcome(NOT_COLORABLE, None, nodes, elapsed)


def verify_coloring(graph: DistanceGraph, assignment) -> bool:
    """True iff the assignment colors every vertex and no edge is monochromatic."""
    if len(assignment) != graph.n:
        return False
    return all(assignment[i] != assignment[j] for i, j in graph.edges)


def chromatic_number(
    graph: DistanceGraph,
    lo: int,
    hi: int,
    time_budget: float | None = None,
    seed: int = 0,
) -> int:
    """Least k in [lo, hi] with the graph k-colorable.

    The caller warrants chi(graph) lies in [lo, hi]; both warrant
    violations surface as InconsistentBounds (including a colorable check
    at lo - 1 when lo > 1).
    """
    if not 1 <= lo <= hi:
        raise InconsistentBounds(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    if lo > 1:
        below = k_colorable(KColorQuery(graph, lo - 1, time_budget), seed=seed)
        if below.colorable:
            raise InconsistentBounds(f"graph is {lo - 1}-colorable, lower bound {lo} is wrong")
    for k in range(lo, hi + 1):
        if k_colorable(KColorQuery(graph, k, time_budget), seed=seed).colorable:
            return k
    raise InconsistentBounds(f"graph is not {hi}-colorable, upper bound {hi} is wrong")


def export_cnf(graph: DistanceGraph, k: int) -> str:
    """DIMACS CNF for k-colorability.

    Variable (i-1)*k + c says vertex i gets color c (both 1-indexed).
    One at-least-one-color clause per vertex and one binary conflict
    clause per (edge, color); at-most-one-per-vertex clauses are omitted
    since extra colors on a vertex never help satisfiability.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    n = graph.n
    edges = sorted(graph.edges)
    lines = [f"p cnf {n * k} {n + len(edges) * k}"]
    for i in range(1, n + 1):
        base = (i - 1) * k
        lines.append(" ".join(str(base + c) for c in range(1, k + 1)) + " 0")
    for i, j in edges:
        for c in range(1, k + 1):
            lines.append(f"-{i * k + c} -{j * k + c} 0")
    return "\n".join(lines) + "\n"


def export_lp(graph: DistanceGraph, k: int) -> str:
    """CPLEX-LP feasibility model for k-colorability.

    Binary x_i_c picks vertex i's color, binary y_c flags color c as used;
    the y objective breaks color-permutation symmetry. Constraint families:
    cover (each vertex needs a color), conflict (edge endpoints cannot
    share a color), link (a used color turns its flag on).
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    n = graph.n
    edges = sorted(graph.edges)
    out = ["Minimize", " obj: " + " + ".join(f"{c} y{c}" for c in range(1, k + 1))]
    out.append("Subject To")
    for i in range(1, n + 1):
        terms = " + ".join(f"x_{i}_{c}" for c in range(1, k + 1))
        out.append(f" cover_{i}: {terms} >= 1")
    for i, j in edges:
        for c in range(1, k + 1):
            out.append(f" conflict_{i + 1}_{j + 1}_{c}: x_{i + 1}_{c} + x_{j + 1}_{c} <= 1")
    for i in range(1, n + 1):
        for c in range(1, k + 1):
            out.append(f" link_{i}_{c}: x_{i}_{c} - y{c} <= 0")
    out.append("Binary")
    for i in range(1, n + 1):
        for c in range(1, k + 1):
            out.append(f" x_{i}_{c}")
    for c in range(1, k + 1):
        out.append(f" y{c}")
    out.append("End")
    return "\n".join(out) + "\n"
