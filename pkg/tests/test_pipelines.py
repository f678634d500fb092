from __future__ import annotations

from itertools import combinations, permutations

import pytest

from cellmatch import (
    DualLoop,
    HomologyNonzeroError,
    PreconditionError,
    SearchBudgetExceededError,
    SubcomplexPair,
    betti_numbers,
    cell_id,
    complement_of_dual_loop,
    find_dual_loop,
    match_loop_pipeline,
    match_sphere_pipeline,
    validate_matching,
)
from cellmatch.generators import circle, product, sphere_boundary, torus7


def _annulus_complement(pair) -> bool:
    if not pair.sub:
        return False
    Y = pair.complex.restrict(pair.sub)
    return betti_numbers(SubcomplexPair(Y)).betti == (1, 1, 0)


def _find_core_circle(Y):
    """Smallest vertex cycle of Y's 1-skeleton that Y collapses to."""
    vertices = [int(v) for v in Y.cells() if Y.dim_of(v) == 0]
    edges = {c for c in Y.cells() if Y.dim_of(c) == 1}
    for r in range(3, len(vertices) + 1):
        for subset in combinations(vertices, r):
            for perm in permutations(subset[1:]):
                cyc = (subset[0],) + perm
                ids = [cell_id([cyc[i], cyc[(i + 1) % r]]) for i in range(r)]
                if all(e in edges for e in ids):
                    cells = frozenset(ids) | frozenset(str(v) for v in cyc)
                    if betti_numbers(SubcomplexPair(Y, cells)).is_zero():
                        return cells
    return None


def test_sphere_pipeline_4_boundary():
    X = sphere_boundary(4)
    m = match_sphere_pipeline(X)
    assert len(m) == 15
    assert validate_matching(SubcomplexPair(X), m).ok
    # stage pair counts 3 + 9 + 3 around sigma=0.1.2, tau=0.1
    def verts(c):
        return set(X.vertices(c))

    stage1 = [p for p in m.pairs if {0, 1} <= verts(p[0]) and {0, 1} <= verts(p[1])]
    stage3 = [p for p in m.pairs if verts(p[0]) < {0, 1, 2} and verts(p[1]) < {0, 1, 2}]
    assert len(stage1) == 3
    assert len(stage3) == 3
    assert len(m) - len(stage1) - len(stage3) == 9


def test_sphere_pipeline_circle_base_case():
    X = circle(6)
    m = match_sphere_pipeline(X)
    assert len(m) == 6
    assert validate_matching(SubcomplexPair(X), m).ok


def test_sphere_pipeline_rejects_even_dimension():
    with pytest.raises(PreconditionError, match="odd dimension"):
        match_sphere_pipeline(sphere_boundary(3))


def test_sphere_pipeline_rejects_non_sphere():
    from cellmatch import from_simplices

    figure8 = from_simplices([[0, 1], [1, 2], [0, 2], [0, 3], [3, 4], [0, 4]])
    with pytest.raises(HomologyNonzeroError):
        match_sphere_pipeline(figure8)


def test_find_dual_loop_torus_annulus():
    X = torus7()
    loop = find_dual_loop(X, _annulus_complement, budget=3000)
    assert loop is not None
    pair = complement_of_dual_loop(X, loop)
    assert _annulus_complement(pair)


def test_find_dual_loop_none_on_sphere():
    X = sphere_boundary(3)

    def impossible(pair):
        if not pair.sub:
            return False
        Y = pair.complex.restrict(pair.sub)
        return betti_numbers(SubcomplexPair(Y)).is_zero()

    assert find_dual_loop(X, impossible, budget=10000) is None


def test_find_dual_loop_full_circle():
    X = circle(5)
    loop = find_dual_loop(X, lambda pair: not pair.sub, budget=100)
    assert loop is not None
    assert loop.k == 5
    assert set(loop.cells) == set(X.cells())


def test_find_dual_loop_budget_exhaustion():
    X = torus7()
    with pytest.raises(SearchBudgetExceededError):
        find_dual_loop(X, lambda pair: False, budget=5)


def test_loop_pipeline_torus():
    X = torus7()
    loop = find_dual_loop(X, _annulus_complement, budget=3000)
    Y = X.restrict(complement_of_dual_loop(X, loop).sub)
    core = _find_core_circle(Y)
    assert core is not None
    m = match_loop_pipeline(X, loop, base=(), circle_cells=core)
    assert len(m) == 21  # all 42 cells
    assert validate_matching(SubcomplexPair(X), m).ok


def test_loop_pipeline_rejects_bad_complement():
    from cellmatch import star_cycle

    X = torus7()
    # the cycle around vertex 0 is contractible: its complement is a
    # punctured torus plus a stranded vertex, never acyclic rel a circle
    loop = star_cycle(X, "0")
    core = frozenset({"1", "2", "3", "1.2", "2.3", "1.3"})
    with pytest.raises(HomologyNonzeroError) as err:
        match_loop_pipeline(X, loop, base=(), circle_cells=core)
    assert not err.value.betti.is_zero()


def _product_sphere_loop():
    """Dual loop of product(circle(3), sphere_boundary(3)) running once
    around the circle factor over the base triangle (1,2,3)."""
    stride = 4

    def enc(a, b):
        return a * stride + b

    def tet_path(a0, a1, t):
        b0, b1, b2 = t
        tets = (
            [enc(a0, b0), enc(a0, b1), enc(a0, b2), enc(a1, b2)],
            [enc(a0, b0), enc(a0, b1), enc(a1, b1), enc(a1, b2)],
            [enc(a0, b0), enc(a1, b0), enc(a1, b1), enc(a1, b2)],
        )
        return [cell_id(T) for T in tets]

    t = (1, 2, 3)
    seq = []
    for a0, a1, forward in ((0, 1, True), (1, 2, True), (0, 2, False)):
        t1, t2, t3 = tet_path(a0, a1, t)
        mid12 = cell_id([enc(a0, t[0]), enc(a0, t[1]), enc(a1, t[2])])
        mid23 = cell_id([enc(a0, t[0]), enc(a1, t[1]), enc(a1, t[2])])
        exit_low = cell_id([enc(a0, b) for b in t])
        exit_high = cell_id([enc(a1, b) for b in t])
        if forward:
            seq += [t1, mid12, t2, mid23, t3, exit_high]
        else:
            seq += [t3, mid23, t2, mid12, t1, exit_low]
    return DualLoop(tuple(seq))


def test_loop_pipeline_product_sphere():
    X = product(circle(3), sphere_boundary(3))
    loop = _product_sphere_loop()
    loop.validate(X)
    core = frozenset(
        {cell_id([a * 4]) for a in range(3)}
        | {cell_id([0, 4]), cell_id([4, 8]), cell_id([0, 8])}
    )
    m = match_loop_pipeline(X, loop, base=(), circle_cells=core)
    assert 2 * len(m) == len(X)
    assert validate_matching(SubcomplexPair(X), m).ok


def test_loop_pipeline_disjointness_checks():
    X = torus7()
    loop = find_dual_loop(X, _annulus_complement, budget=3000)
    with pytest.raises(PreconditionError, match="disjoint"):
        match_loop_pipeline(X, loop, base=X.closure([loop.cells[0]]))


def test_loop_pipeline_annulus_with_boundary_base():
    # a cylinder over a 3-cycle, matched relative to both boundary circles:
    # the dual loop runs around the middle and its complement collapses
    # onto the boundary
    from cellmatch import euler_characteristic
    from cellmatch.generators import product, simplex

    X = product(circle(3), simplex(1))
    base = X.closure(
        [cell_id([2 * a, 2 * ((a + 1) % 3)]) for a in range(3)]
        + [cell_id([2 * a + 1, 2 * ((a + 1) % 3) + 1]) for a in range(3)]
    )
    assert euler_characteristic(SubcomplexPair(X, base)) == 0

    def acyclic_rel_base(pair):
        if not pair.sub:
            return False
        Y = pair.complex.restrict(pair.sub)
        return betti_numbers(SubcomplexPair(Y, base)).is_zero()

    loop = find_dual_loop(X, acyclic_rel_base, budget=3000)
    assert loop is not None
    m = match_loop_pipeline(X, loop, base=base)
    target = SubcomplexPair(X, base)
    assert validate_matching(target, m).ok
    assert 2 * len(m) == len(target.rel_cells)
