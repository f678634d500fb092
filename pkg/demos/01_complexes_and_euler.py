#!/usr/bin/env python3
"""Build cell complexes, take subcomplex pairs, and read off Euler counts.

A complex is a ranked poset of cells; simplicial ones come from maximal
vertex sets, general polyhedral ones from explicit (id, dim, hyperfaces)
records. A subcomplex pair distinguishes the cells a matching must cover.
"""

from cellmatch import (
    SubcomplexPair,
    build_cw,
    dual_graph,
    euler_characteristic,
    from_simplices,
)
from cellmatch.generators import sphere_boundary, torus7

# A triangle boundary: three vertices, three edges.
circle3 = from_simplices([[0, 1], [1, 2], [0, 2]])
print("circle:", circle3)
print("cells:", circle3.cells())

# The same front-end closes faces automatically: one maximal tetrahedron
# yields all 15 faces.
solid = from_simplices([[0, 1, 2, 3]])
print("\nsolid tetrahedron:", solid)

# General polyhedral cells are given by hyperface lists. A square disk:
square = build_cw([
    ("a", 0, []), ("b", 0, []), ("c", 0, []), ("d", 0, []),
    ("ab", 1, ["a", "b"]), ("bc", 1, ["b", "c"]),
    ("cd", 1, ["c", "d"]), ("da", 1, ["d", "a"]),
    ("face", 2, ["ab", "bc", "cd", "da"]),
])
print("\nsquare disk:", square)
print("chi(square) =", euler_characteristic(SubcomplexPair(square)))

# Relative Euler characteristic of a pair: cells outside the subcomplex,
# counted with alternating signs. It must vanish for a matching to exist.
pair = SubcomplexPair(solid, solid.closure(["0.1.2"]))
print("\nchi(solid rel closed face 012) =", euler_characteristic(pair))
print("cells to match:", pair.rel_cells)

# The dual graph has one node per top cell and one edge per interior
# codimension-1 cell. For the tetrahedron boundary it is complete.
g = dual_graph(sphere_boundary(3))
print("\ndual graph of the 2-sphere:", len(g.nodes), "nodes,", g.edge_count, "edges")

g7 = dual_graph(torus7())
print("dual graph of the 7-vertex torus:", len(g7.nodes), "nodes,", g7.edge_count, "edges")
print("boundary cells:", sorted(g7.boundary) or "none")
