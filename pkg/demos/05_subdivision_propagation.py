#!/usr/bin/env python3
"""Barycentric subdivision with carriers, and matching propagation.

The subdivision puts one vertex at the barycenter of every cell and one
simplex on every chain of nested cells; the carrier map remembers the
smallest original cell containing each new one. A matching on the original
pair propagates block by block: the subdivided closed cell of each matched
pair, relative to the closure of its unmatched hyperfaces, is an acyclic
pair in its own right.
"""

from cellmatch import (
    HallCertificate,
    SubcomplexPair,
    complete_matching,
    euler_characteristic,
    match_dual_cycle,
    spanning_dual_loop,
    validate_matching,
)
from cellmatch.generators import circle, simplex, wedge
from cellmatch.subdivision import barycentric, propagate_matching

smap = barycentric(simplex(2))
print("triangle subdivides to:", smap.subdivided)
print("carrier of b0.1.2:", smap.carrier["b0.1.2"])
print("chi preserved:",
      euler_characteristic(SubcomplexPair(smap.source)),
      "->",
      euler_characteristic(SubcomplexPair(smap.subdivided)))

# Carry a cycle matching down one subdivision.
X = circle(3)
pair = SubcomplexPair(X)
m = match_dual_cycle(X, spanning_dual_loop(X), 0)
smap = barycentric(X)
pm = propagate_matching(smap, pair, m)
print("\npropagated matching:", pm.sorted_pairs())
print("validates:", validate_matching(SubcomplexPair(smap.subdivided), pm).ok)

# Unmatchability also survives subdivision: the wedge counterexample keeps
# producing a deficiency-1 certificate, round after round.
X = wedge()
for depth in range(3):
    cert = complete_matching(SubcomplexPair(X))
    assert isinstance(cert, HallCertificate)
    print(f"wedge depth {depth}: {len(X)} cells, deficiency {cert.deficiency}")
    if depth < 2:
        X = barycentric(X).subdivided
