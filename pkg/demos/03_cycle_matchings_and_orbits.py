#!/usr/bin/env python3
"""Dual loops, the two matchings of a cycle, and orbit analysis.

A simple loop in the dual graph alternates top cells and their shared
hyperfaces. Pairing each hyperface with the cell ahead or behind gives two
disjoint complete matchings of the loop cells. Orbit analysis then tells a
collapse apart from a matching that circulates.
"""

from cellmatch import (
    SubcomplexPair,
    match_acyclic_pair,
    match_dual_cycle,
    orbit_analysis,
    spanning_dual_loop,
)
from cellmatch.generators import circle, cone, apex_of

X = circle(3)
loop = spanning_dual_loop(X)
print("dual loop:", loop.cells)

fwd = match_dual_cycle(X, loop, 0)
bwd = match_dual_cycle(X, loop, 1)
print("orientation 0:", fwd.sorted_pairs())
print("orientation 1:", bwd.sorted_pairs())
print("shared pairs:", fwd.pairs & bwd.pairs or "none")

# Both matchings circulate: no free face ever appears, and the analysis
# reports the closed alternating orbit.
pair = SubcomplexPair(X)
report = orbit_analysis(pair, fwd)
print("\nclassification:", report.classification)
print("orbit:", report.orbit)

# A cone relative to its apex is collapsible; the matching found by the
# acyclic-pair construction replays as a sequence of free-face removals.
C = cone(circle(4))
pair_c = SubcomplexPair(C, [apex_of(C)])
m = match_acyclic_pair(pair_c)
report_c = orbit_analysis(pair_c, m)
print("\ncone matching classification:", report_c.classification)
if report_c.collapse_order:
    print("collapse order:")
    for free_face, coface in report_c.collapse_order:
        print(f"  remove {free_face} inside {coface}")
