"""Optimizing the eight-coloring's shape parameters.

Growing the hexagons of the classic seven-color pattern and patching
every second corner meeting point with a small triangle of an eighth
color keeps the coloring proper for wider distance intervals. Two shape
parameters remain: the triangle size x and the hexagon size y. Four
inequalities in (x, y, b) capture properness; maximizing b over them
gives the widest interval this construction can handle.
"""
from chromaplane.eightcol import EightParams, constraint_slacks, feasible, maximize_b

opt = maximize_b(tol=1e-6)
print(f"optimal width: b = {opt.b:.6f}")
print(f"at x = {opt.x:.6f}, y = {opt.y:.6f}")
print("active constraints:", opt.active_constraints)
print("slacks:", [f"{s:.6g}" for s in opt.slacks])
print()
print("constraint 2 stays comfortably slack "
      f"({opt.slacks[1]:.3f}); constraints 1 and 3 pin the shape and "
      "constraint 4 then pins b.")

print()
print("=== the feasible set shrinks as b grows ===")
for b in (1.30, 1.37, opt.b, 1.38):
    p = EightParams(opt.x, opt.y, b)
    print(f"b = {b:.5f}: feasible? {feasible(p, tol=1e-9)}  slacks "
          + str([f"{s:.4f}" for s in constraint_slacks(p)]))
