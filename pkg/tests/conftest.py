"""Shared oracles for the test suite.

These helpers stay independent of the library code paths they check: the
matching counter enumerates permutations directly, and the collapse replay
rebuilds coface data from the raw hyperface tables.
"""

from __future__ import annotations

from itertools import permutations

from cellmatch import SubcomplexPair, incidence_graph


def count_matchings_by_permutations(pair: SubcomplexPair) -> int:
    """Independent perfect-matching count: try every assignment of the odd
    cells to the even cells. Factorial; only for small instances."""
    graph = incidence_graph(pair)
    left, right = graph.even, graph.odd
    if len(left) != len(right):
        return 0
    count = 0
    adj = {u: set(graph.adjacency[u]) for u in left}
    for perm in permutations(right):
        if all(v in adj[u] for u, v in zip(left, perm)):
            count += 1
    return count


def transitive_cofaces(complex, cid: str) -> set[str]:
    """Proper cofaces recomputed from the hyperface table alone."""
    out: set[str] = set()
    frontier = [c for c in complex.cells() if cid in complex.hyperfaces(c)]
    while frontier:
        c = frontier.pop()
        if c in out:
            continue
        out.add(c)
        frontier.extend(
            d for d in complex.cells() if c in complex.hyperfaces(d)
        )
    return out


def replay_collapse(pair: SubcomplexPair, order) -> None:
    """Assert that a collapse order performs only free-face removals and
    empties the cells outside the base."""
    complex = pair.complex
    remaining = set(pair.rel_cells)
    for lower, upper in order:
        assert lower in remaining and upper in remaining
        live = {c for c in transitive_cofaces(complex, lower) if c in remaining}
        assert live == {upper}, (
            f"removing ({lower}, {upper}) is not a free-face removal; "
            f"live cofaces {sorted(live)}"
        )
        remaining -= {lower, upper}
    assert not remaining, f"collapse left cells behind: {sorted(remaining)[:5]}"
