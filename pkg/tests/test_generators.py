from __future__ import annotations

import pytest

from cellmatch import FamilySpec, SubcomplexPair, euler_characteristic, generate
from cellmatch.generators import (
    apex_of,
    circle,
    cone,
    family_names,
    grid_square,
    interval,
    product,
    simplex,
    sphere_boundary,
    torus7,
    wedge,
)


def _f_vector(X):
    return tuple(len(X.cells_of_dim(d)) for d in range(X.dim + 1))


def test_circle_counts():
    X = circle(5)
    assert len(X) == 10
    assert euler_characteristic(SubcomplexPair(X)) == 0


def test_simplex_counts():
    assert _f_vector(simplex(3)) == (4, 6, 4, 1)
    assert _f_vector(simplex(1)) == (2, 1)


def test_sphere_boundary_counts():
    assert _f_vector(sphere_boundary(3)) == (4, 6, 4)
    assert _f_vector(sphere_boundary(4)) == (5, 10, 10, 5)
    assert len(sphere_boundary(4)) == 30


def test_torus7_f_vector():
    X = torus7()
    assert _f_vector(X) == (7, 21, 14)
    assert euler_characteristic(SubcomplexPair(X)) == 0
    # closed surface: every edge has exactly two triangles
    assert all(len(X.cofaces(e)) == 2 for e in X.cells_of_dim(1))


def test_wedge_counts_and_chi():
    X = wedge()
    assert len(X) == 24
    assert _f_vector(X) == (8, 12, 4)
    assert euler_characteristic(SubcomplexPair(X)) == 0


def test_interval_coordinates():
    X = interval(4)
    assert _f_vector(X) == (5, 4)
    from fractions import Fraction

    assert X.coordinates[2] == (Fraction(1, 2),)


def test_grid_counts():
    X = grid_square(2)
    assert _f_vector(X) == (9, 16, 8)
    assert euler_characteristic(SubcomplexPair(X)) == 1
    assert X.coordinates[4] == (1, 1)


def test_product_chi_multiplicative():
    cases = [
        (circle(3), circle(4)),
        (circle(3), sphere_boundary(3)),
        (simplex(1), circle(3)),
        (simplex(2), simplex(1)),
    ]
    for a, b in cases:
        p = product(a, b)
        chi_a = euler_characteristic(SubcomplexPair(a))
        chi_b = euler_characteristic(SubcomplexPair(b))
        assert euler_characteristic(SubcomplexPair(p)) == chi_a * chi_b


def test_product_torus_homology():
    from cellmatch import betti_numbers

    T = product(circle(3), circle(3))
    assert betti_numbers(SubcomplexPair(T)).betti == (1, 2, 1)


def test_product_is_pure_and_manifold_like():
    P = product(circle(3), sphere_boundary(3))
    assert P.dim == 3
    assert P.is_pure()
    assert all(len(P.cofaces(f)) == 2 for f in P.cells_of_dim(2))
    assert _f_vector(P)[3] == 36


def test_cone_counts():
    X = cone(torus7())
    assert len(X) == 85
    assert apex_of(X) == "7"
    assert euler_characteristic(SubcomplexPair(X)) == 1


def test_generate_dispatch():
    spec = FamilySpec("circle", (6,))
    assert len(generate(spec)) == 12
    assert len(generate(FamilySpec("torus7"))) == 42
    assert generate(FamilySpec("product", (3, 3))).dim == 3
    assert generate(FamilySpec("cone", (4,))).dim == 2


def test_generate_bad_parameters():
    with pytest.raises(ValueError):
        generate(FamilySpec("circle", (2,)))
    with pytest.raises(ValueError):
        generate(FamilySpec("circle", ()))
    with pytest.raises(ValueError):
        generate(FamilySpec("nonesuch", ()))
    with pytest.raises(ValueError):
        generate(FamilySpec("grid_square", (0,)))


def test_family_names_stable():
    assert "circle" in family_names()
    assert "wedge" in family_names()


def test_generators_validate():
    # constructing a CellComplex runs the full data-model validation
    for spec in [
        FamilySpec("circle", (3,)),
        FamilySpec("simplex", (4,)),
        FamilySpec("sphere_boundary", (5,)),
        FamilySpec("torus7"),
        FamilySpec("wedge"),
        FamilySpec("interval", (6,)),
        FamilySpec("grid_square", (3,)),
        FamilySpec("product", (3, 2)),
        FamilySpec("cone", (5,)),
    ]:
        X = generate(spec)
        assert len(X) > 0
