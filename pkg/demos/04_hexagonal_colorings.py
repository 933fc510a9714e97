"""(p, q) colorings of the hexagonal tiling and how far each one reaches.

Tile the plane with regular hexagons of diameter 1 and color tile (i, j)
by its coset modulo the lattice generated by (p, q) and (p+q, -p). The
scheme uses exactly p^2 + pq + q^2 colors, and it properly colors
G_[1,b] up to the minimum distance between distinct same-colored tiles.

Sweeping p <= q <= 10 and keeping the Pareto-optimal (reach, colors)
pairs reproduces the known staircase of upper bounds, including three
rows that older tabulations of this family missed: (3,5) with 49 colors,
(1,8) with 73 colors at reach 13/2, and (1,9) with 91 colors at reach
sqrt(217)/2 — the latter two strictly dominate the (5,5) and (4,7)
schemes usually quoted at those widths.
"""
import math

from chromaplane.hexcolor import (
    HexScheme,
    best_scheme_for_b,
    color_count,
    color_of_tile,
    hex_b_max,
    named_family,
    point_to_tile,
    pareto_table,
    pareto_table_csv,
    verify_scheme_sampled,
)

print("=== the seven-color scheme (p, q) = (1, 2) ===")
s = HexScheme(1, 2)
print("colors used:", color_count(s))
print("same-color triple:", [color_of_tile(s, *ij) for ij in [(0, 0), (1, 2), (3, -1)]])
print(f"reach: b_max = {hex_b_max(1, 2):.9f}  (sqrt(7)/2 = {math.sqrt(7) / 2:.9f})")
print("point (0.2, 0.4) lives in tile", point_to_tile((0.2, 0.4)))

print()
print("=== sampled soundness check around the reach ===")
for b in (1.31, 1.33):
    ok = verify_scheme_sampled(s, b, samples=200_000)
    print(f"proper at b = {b}? {ok}")

print()
print("=== named one-parameter families ===")
for family, r in [("exoo", 1), ("exoo", 2), ("lonc", 2), ("lonc", 4), ("gjssw", 3)]:
    sch = named_family(family, r)
    print(f"{family} r={r}: scheme ({sch.p},{sch.q}), {color_count(sch)} colors, "
          f"reach {hex_b_max(sch.p, sch.q):.6f}")

print()
print("=== fewest colors needed at sample widths ===")
for b in (1.3, 1.5, 2.0, 3.0, 5.0, 10.0):
    p, q, n = best_scheme_for_b(b)
    print(f"b = {b:>4}: {n:>3} colors via ({p},{q})")

print()
print("=== the full Pareto table for p <= q <= 10 ===")
print(pareto_table_csv(pareto_table(10, 10)))
