"""chromaplane: bounds and exact colorings for interval-distance graphs of the plane.

The package studies colorings of the plane in which no two points at
distance in [1, b] share a color. It provides:

- geom: points, chords, convex polygons and polygon distances;
- distgraph: finite distance graphs on circle point configurations;
- solver: exact k-colorability plus DIMACS/CNF/LP exports;
- annulus: radial annulus colorings, lower-bound configurations,
  threshold bisection and the annulus bounds table;
- hexcolor: (p, q) colorings of the hexagonal tiling and their reach;
- eightcol: the eight-coloring's constraint system and optimum;
- cli: deterministic command-line front end.
"""

from . import annulus, distgraph, eightcol, geom, hexcolor, solver
from .geom import ConvexPolygon, Point2, chord, dist, mixed_chord, polygon_diameter, polygon_min_distance
from .distgraph import (
    CircleSpec,
    DistanceGraph,
    PointConfig,
    build_graph,
    circle_points,
    export_dimacs,
    graph_from_points,
)
from .solver import (
    COLORABLE,
    NOT_COLORABLE,
    BudgetExhausted,
    ColoringOutcome,
    KColorQuery,
    chromatic_number,
    export_cnf,
    export_lp,
    k_colorable,
    verify_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "COLORABLE",
    "CircleSpec",
    "ColoringOutcome",
    "ConvexPolygon",
    "DistanceGraph",
    "KColorQuery",
    "NOT_COLORABLE",
    "Point2",
    "PointConfig",
    "build_graph",
    "chord",
    "chromatic_number",
    "circle_points",
    "dist",
    "export_cnf",
    "export_dimacs",
    "export_lp",
    "graph_from_points",
    "k_colorable",
    "mixed_chord",
    "polygon_diameter",
    "polygon_min_distance",
    "verify_coloring",
]
