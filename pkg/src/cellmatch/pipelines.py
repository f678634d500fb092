"""Composite matching pipelines: odd-dimensional rational homology
spheres, loop-based constructions, and bounded dual-loop search."""

from __future__ import annotations

from .complexes import (
    CellComplex,
    DualLoop,
    SubcomplexPair,
    complement_of_dual_loop,
    dual_graph,
    spanning_dual_loop,
    star_cycle,
)
from .errors import (
    HomologyNonzeroError,
    PreconditionError,
    SearchBudgetExceededError,
)
from .homology import betti_numbers, match_acyclic_pair
from .matching import Matching, compose_matchings, match_dual_cycle, validate_matching


def _sphere_betti(n: int) -> tuple[int, ...]:
    betti = [0] * (n + 1)
    betti[0] += 1
    betti[n] += 1
    return tuple(betti)


def match_sphere_pipeline(complex: CellComplex) -> Matching:
    """Complete matching of an odd-dimensional rational-homology-sphere
    cellulation.

    Around the lowest codimension-2 cell of the lowest codimension-1 cell,
    the cells containing it form an alternating cycle and get the cycle
    matching; the rest of the complex relative to that cell's boundary is
    an acyclic pair; the boundary sphere recurses, down to the circle.
    """
    n = complex.dim
    if n % 2 == 0:
        raise PreconditionError("odd dimension required")
    bv = betti_numbers(SubcomplexPair(complex))
    if bv.betti != _sphere_betti(n):
        raise HomologyNonzeroError(
            f"not a rational homology sphere: betti {bv.betti}", betti=bv
        )
    if n == 1:
        loop = spanning_dual_loop(complex)
        return match_dual_cycle(complex, loop, 0)

    sigma = complex.cells_of_dim(n - 1)[0]
    tau = min(complex.hyperfaces(sigma), key=complex.sort_key)
    loop = star_cycle(complex, tau)
    around_pair = complement_of_dual_loop(complex, loop)
    cycle_part = match_dual_cycle(complex, loop, 0)

    rest = complex.restrict(around_pair.sub)
    rim = complex.faces(sigma)
    middle_part = match_acyclic_pair(SubcomplexPair(rest, rim))

    boundary_sphere = complex.restrict(rim)
    boundary_part = match_sphere_pipeline(boundary_sphere)

    result = compose_matchings([cycle_part, middle_part, boundary_part])
    report = validate_matching(SubcomplexPair(complex), result)
    assert report.ok, f"sphere pipeline output invalid: {report.violations[:3]}"
    return result


def _validate_circle_subcomplex(complex: CellComplex, cells: frozenset[str]) -> None:
    if not complex.is_closed(cells):
        raise PreconditionError("circle subcomplex is not closed under hyperfaces")
    edges = [c for c in cells if complex.dim_of(c) == 1]
    vertices = [c for c in cells if complex.dim_of(c) == 0]
    if not edges or len(cells) != len(edges) + len(vertices):
        raise PreconditionError("circle subcomplex must consist of vertices and edges")
    if len(edges) != len(vertices):
        raise PreconditionError("circle subcomplex must close up (equal cell counts)")
    degree = {v: 0 for v in vertices}
    for e in edges:
        for v in complex.hyperfaces(e):
            if v not in degree:
                raise PreconditionError("circle subcomplex is not closed")
            degree[v] += 1
    if any(d != 2 for d in degree.values()):
        raise PreconditionError("circle subcomplex must be a single cycle")


def match_loop_pipeline(
    complex: CellComplex,
    loop: DualLoop,
    base=(),
    circle_cells=None,
) -> Matching:
    """Complete matching relative to ``base`` built from a dual loop.

    The loop cells get the cycle matching; the complement relative to the
    base together with the optional circle subcomplex must be acyclic (the
    Betti vector travels with the error when not); the circle, when given,
    gets its own cycle matching.
    """
    pair = complement_of_dual_loop(complex, loop)
    loop_cells = set(loop.cells)
    base_set = frozenset(base)
    if not complex.is_closed(base_set):
        raise PreconditionError("base is not a subcomplex")
    if base_set & loop_cells:
        raise PreconditionError("base must be disjoint from the loop cells")
    circle_set = frozenset(circle_cells) if circle_cells is not None else None
    if circle_set is not None:
        _validate_circle_subcomplex(complex, circle_set)
        if circle_set & loop_cells:
            raise PreconditionError("circle must be disjoint from the loop cells")
        if circle_set & base_set:
            raise PreconditionError("circle must be disjoint from the base")

    cycle_part = match_dual_cycle(complex, loop, 0)

    inner_base = base_set | circle_set if circle_set is not None else base_set
    rest = complex.restrict(pair.sub)
    inner_pair = SubcomplexPair(rest, inner_base)
    bv = betti_numbers(inner_pair)
    if not bv.is_zero():
        raise HomologyNonzeroError(
            f"loop complement is not acyclic relative to the base: betti {bv.betti}",
            betti=bv,
        )
    middle_part = match_acyclic_pair(inner_pair)

    parts = [cycle_part, middle_part]
    if circle_set is not None:
        circle_complex = complex.restrict(circle_set)
        circle_loop = spanning_dual_loop(circle_complex)
        parts.append(match_dual_cycle(circle_complex, circle_loop, 0))

    result = compose_matchings(parts, relative_to=base_set)
    report = validate_matching(SubcomplexPair(complex, base_set), result)
    assert report.ok, f"loop pipeline output invalid: {report.violations[:3]}"
    return result


def find_dual_loop(
    complex: CellComplex, predicate, budget: int = 2000
) -> DualLoop | None:
    """First simple dual-graph cycle (shortest first, deterministic order)
    whose complement pair satisfies ``predicate``.

    Returns None when the enumeration finishes with no hit; raises
    SearchBudgetExceededError when ``budget`` candidates were tested
    without a verdict.
    """
    graph = dual_graph(complex)
    nodes = list(graph.nodes)
    neighbors = {node: graph.neighbors(node) for node in nodes}
    remaining = budget

    def test(sequence) -> DualLoop | None:
        nonlocal remaining
        if remaining <= 0:
            raise SearchBudgetExceededError(
                f"no dual loop found within budget {budget}"
            )
        remaining -= 1
        loop = DualLoop(tuple(sequence))
        pair = complement_of_dual_loop(complex, loop)
        return loop if predicate(pair) else None

    for length in range(2, len(nodes) + 1):
        for start in nodes:
            if length == 2:
                by_other: dict[str, list[str]] = {}
                for edge, other in neighbors[start]:
                    by_other.setdefault(other, []).append(edge)
                for other in sorted(by_other):
                    if other <= start:
                        continue
                    parallels = sorted(by_other[other])
                    for i, edge_a in enumerate(parallels):
                        for edge_b in parallels[i + 1:]:
                            hit = test([start, edge_a, other, edge_b])
                            if hit is not None:
                                return hit
                continue
            stack = [(start, [start], [], {start})]
            while stack:
                node, path, edges, seen = stack.pop()
                if len(path) == length:
                    for closing_edge, other in neighbors[node]:
                        if other == start and closing_edge not in edges:
                            if path[1] < path[-1]:  # one direction per cycle
                                sequence = []
                                for i, p in enumerate(path):
                                    sequence.append(p)
                                    sequence.append(
                                        (edges + [closing_edge])[i]
                                    )
                                hit = test(sequence)
                                if hit is not None:
                                    return hit
                    continue
                for edge, other in reversed(neighbors[node]):
                    if other in seen or other < start:
                        continue
                    stack.append(
                        (other, path + [other], edges + [edge], seen | {other})
                    )
    return None
