#!/usr/bin/env python3
"""Matchings from a constant direction field transverse to a triangulation.

With exact rational coordinates, transversality is a sign test on the
derivatives of barycentric coordinates. Every simplex off the exiting
boundary has a unique downstream top simplex; choosing a base vertex in
the common face of each top simplex's unstable hyperfaces induces the
matching: drop the base vertex when present, join it when absent.
"""

from fractions import Fraction

from cellmatch import (
    GeometricComplex,
    NotTransverseError,
    SubcomplexPair,
    check_transverse,
    euler_characteristic,
    flow_matching,
    flow_structure,
    from_simplices,
    validate_matching,
)
from cellmatch.generators import grid_square, interval

# The slanted triangle A=(0,0), B=(1,0), C=(1/2,1) under straight-down flow.
coords = {
    0: (Fraction(0), Fraction(0)),
    1: (Fraction(1), Fraction(0)),
    2: (Fraction(1, 2), Fraction(1)),
}
triangle = GeometricComplex(from_simplices([[0, 1, 2]], coordinates=coords))
split = check_transverse(triangle, (0, -1))
print("flow exits through:", sorted(split.exiting_hyperfaces))
print("flow enters through:", sorted(split.entering_hyperfaces))

fs = flow_structure(triangle, (0, -1))
print("base vertex of the triangle:", fs.base_vertex["0.1.2"])
m = flow_matching(fs)
print("matching rel exiting boundary:", m.sorted_pairs())

# An interval flowing left: every edge pairs with its right endpoint, and
# only the leftmost vertex is left out (it is the exiting boundary).
geom = GeometricComplex(interval(5))
fs = flow_structure(geom, (-1,))
print("\ninterval pairs:", flow_matching(fs).sorted_pairs())

# A diagonal grid under the field (1, -3): exits through bottom and right.
geom = GeometricComplex(grid_square(4))
fs = flow_structure(geom, (1, -3))
m = flow_matching(fs)
pair = SubcomplexPair(geom.complex, fs.rel_base())
print("\ngrid matching size:", len(m), "validates:",
      validate_matching(pair, m).ok)
print("chi rel exiting boundary:", euler_characteristic(pair))

# A field parallel to the vertical edges is rejected exactly, naming them.
try:
    check_transverse(geom, (0, -1))
except NotTransverseError as err:
    print("\ndegenerate field: parallel to", len(err.simplices), "edges")

# Random base vertices (seeded) give other, equally valid matchings.
fs7 = flow_structure(geom, (1, -3), base_rule="random", seed=7)
m7 = flow_matching(fs7)
print("seed 7 differs from lowest-id:", m7.pairs != m.pairs,
      "| validates:", validate_matching(pair, m7).ok)
