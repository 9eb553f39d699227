"""Equivariant homology of the curated complexes against the known tables."""

import pytest

from z2beta.algebra import IntPoly, RationalU
from z2beta.calculus import Atom, atom_class
from z2beta.complexes import (
    point_complex,
    sphere_complex,
    swapped_pair_complex,
    two_fixed_points_complex,
)
from z2beta.errors import (
    AssertionMissing,
    FixedSetNotSubcomplex,
    InvalidComplex,
)
from z2beta.homology import (
    GCWComplex,
    equivariant_betti_series,
    equivariant_cohomology,
    equivariant_homology,
    fixed_subcomplex,
    homology_table,
    plain_homology,
    product_with_trivial,
    validate_complex,
)

U = IntPoly.u()


# ---------------------------------------------------------------------------
# validation

def test_valid_examples():
    assert validate_complex(point_complex()) == []
    assert validate_complex(swapped_pair_complex()) == []
    assert validate_complex(sphere_complex(3, "antipodal")) == []


def test_dimension_violation_reported():
    bad = GCWComplex({"v": 0, "e": 1}, sigma={"v": "e", "e": "v"})
    report = validate_complex(bad)
    assert any("dimension" in line for line in report)


def test_involution_violation_reported():
    bad = GCWComplex({"a": 0, "b": 0, "c": 0},
                     sigma={"a": "b", "b": "c", "c": "a"})
    assert any("involution" in line for line in validate_complex(bad))


def test_boundary_squared_violation_reported():
    bad = GCWComplex({"v": 0, "e": 1, "f": 2},
                     boundary={"f": ["e"], "e": ["v"]})
    assert any("boundary of boundary" in line for line in validate_complex(bad))


def test_equivariance_violation_reported():
    bad = GCWComplex({"v1": 0, "v2": 0, "e1": 1, "e2": 1},
                     boundary={"e1": ["v1", "v2"], "e2": []},
                     sigma={"e1": "e2", "e2": "e1"})
    assert any("commute" in line for line in validate_complex(bad))


def test_operations_refuse_invalid_input():
    bad = GCWComplex({"v": 0, "e": 1}, sigma={"v": "e", "e": "v"})
    with pytest.raises(InvalidComplex):
        equivariant_homology(bad, 0)


def test_boundary_reduced_mod_two():
    circle = GCWComplex({"v": 0, "e": 1}, boundary={"e": ["v", "v"]})
    assert circle.boundary == {}  # the two copies cancel


# ---------------------------------------------------------------------------
# tables from the worked examples

@pytest.mark.parametrize("d", [1, 2, 3])
def test_trivial_sphere_table(d):
    sphere = sphere_complex(d, "trivial")
    for n in range(d, -6, -1):
        expected = 1 if 1 <= n <= d else (2 if n <= 0 else 0)
        assert equivariant_homology(sphere, n) == expected, n
    assert equivariant_homology(sphere, d + 1) == 0


def test_antipodal_circle_table():
    circle = sphere_complex(1, "antipodal")
    assert equivariant_homology(circle, 1) == 1
    assert equivariant_homology(circle, 0) == 1
    for n in (-1, -2, -3, 2, 3):
        assert equivariant_homology(circle, n) == 0


def test_swapped_pair_table():
    pair = swapped_pair_complex()
    assert equivariant_homology(pair, 0) == 1
    for n in (-2, -1, 1):
        assert equivariant_homology(pair, n) == 0


def test_point_table():
    point = point_complex()
    for n in range(-4, 3):
        assert equivariant_homology(point, n) == (1 if n <= 0 else 0)


def test_homology_table_object():
    table = homology_table(sphere_complex(2, "trivial"), -4, 3)
    assert table.group_dims[3] == 0
    assert table.group_dims[2] == 1
    assert table.stable_negative_dim == 2


# ---------------------------------------------------------------------------
# plain homology

def test_plain_homology():
    s2 = sphere_complex(2, "trivial")
    assert [plain_homology(s2, n) for n in range(-1, 4)] == [0, 1, 0, 1, 0]
    assert plain_homology(point_complex(), 0) == 1
    assert plain_homology(sphere_complex(1, "antipodal"), 1) == 1


def test_trivial_action_reduces_to_plain():
    # with the identity involution, dim H_n = sum of plain dims above max(0, n)
    for cw in (point_complex(), sphere_complex(1, "trivial"),
               sphere_complex(3, "trivial"), two_fixed_points_complex()):
        top = cw.top_dimension
        for n in range(top + 2, -4, -1):
            expected = sum(plain_homology(cw, q)
                           for q in range(max(0, n), top + 1))
            assert equivariant_homology(cw, n) == expected


# ---------------------------------------------------------------------------
# series extraction and the bridge to the atoms

BRIDGE = [
    (point_complex, (), Atom.point()),
    (swapped_pair_complex, (), Atom.pair()),
    (sphere_complex, (1, "antipodal"), Atom.sphere(1, "free")),
    (sphere_complex, (1, "with_fixed_point"), Atom.sphere(1, "with_fixed_point")),
    (sphere_complex, (1, "trivial"), Atom.sphere(1, "trivial")),
    (sphere_complex, (2, "trivial"), Atom.sphere(2, "trivial")),
    (sphere_complex, (3, "trivial"), Atom.sphere(3, "trivial")),
]


@pytest.mark.parametrize("builder,args,atom", BRIDGE)
def test_series_equals_atom_class(builder, args, atom):
    assert equivariant_betti_series(builder(*args)) == atom_class(atom)


def test_series_normal_form_values():
    assert equivariant_betti_series(point_complex()).value == RationalU(U, U - 1)
    fixed_circle = equivariant_betti_series(sphere_complex(1, "with_fixed_point"))
    assert fixed_circle.poly_part == U and fixed_circle.fixed_tail == 2
    free_circle = equivariant_betti_series(sphere_complex(1, "antipodal"))
    assert free_circle.value == RationalU(U + 1)


def test_reflection_circle_matches_fixed_point_series():
    # two fixed vertices, two swapped edges: a different cellular model of a
    # circle with fixed points must give the same series
    reflection = GCWComplex(
        {"v1": 0, "v2": 0, "e1": 1, "e2": 1},
        boundary={"e1": ["v1", "v2"], "e2": ["v1", "v2"]},
        sigma={"e1": "e2", "e2": "e1"},
        fixed_is_geometric=True)
    assert validate_complex(reflection) == []
    assert equivariant_betti_series(reflection) \
        == atom_class(Atom.sphere(1, "with_fixed_point"))
    fixed = fixed_subcomplex(reflection)
    assert set(fixed.cells) == {"v1", "v2"}


# ---------------------------------------------------------------------------
# fixed subcomplex and the negative degrees

def test_fixed_subcomplex():
    circle = sphere_complex(1, "with_fixed_point")
    assert set(fixed_subcomplex(circle).cells) == {"v", "e"}
    assert fixed_subcomplex(sphere_complex(2, "antipodal")).cells == {}
    mixed = GCWComplex({"p": 0, "q": 0, "f": 0},
                       sigma={"p": "q", "q": "p"}, fixed_is_geometric=True)
    assert set(fixed_subcomplex(mixed).cells) == {"f"}


def test_fixed_subcomplex_requires_assertion():
    free = GCWComplex({"p": 0, "q": 0}, sigma={"p": "q", "q": "p"})
    with pytest.raises(AssertionMissing):
        fixed_subcomplex(free)


def test_fixed_set_must_be_closed():
    # fixed 1-cell with swapped endpoints
    bad = GCWComplex({"v1": 0, "v2": 0, "e": 1},
                     boundary={"e": ["v1", "v2"]},
                     sigma={"v1": "v2", "v2": "v1"},
                     fixed_is_geometric=True)
    assert validate_complex(bad) == []
    with pytest.raises(FixedSetNotSubcomplex):
        fixed_subcomplex(bad)


@pytest.mark.parametrize("builder,args", [
    (point_complex, ()),
    (swapped_pair_complex, ()),
    (two_fixed_points_complex, ()),
    (sphere_complex, (1, "trivial")),
    (sphere_complex, (2, "trivial")),
    (sphere_complex, (1, "antipodal")),
])
def test_negative_degrees_equal_fixed_set_homology(builder, args):
    cw = builder(*args)
    fixed = fixed_subcomplex(cw)
    total = sum(plain_homology(fixed, i)
                for i in range(fixed.top_dimension + 1))
    for n in (-1, -2, -3):
        assert equivariant_homology(cw, n) == total


# ---------------------------------------------------------------------------
# products

def test_product_point_by_point():
    prod = product_with_trivial(point_complex(), point_complex())
    assert len(prod.cells) == 1
    assert equivariant_betti_series(prod) == atom_class(Atom.point())


def test_product_pair_by_circle():
    prod = product_with_trivial(swapped_pair_complex(),
                                sphere_complex(1, "trivial"))
    assert len(prod.cells) == 4
    assert equivariant_betti_series(prod).value == RationalU(U + 1)


def test_product_fixed_circle_by_circle():
    prod = product_with_trivial(sphere_complex(1, "with_fixed_point"),
                                sphere_complex(1, "trivial"))
    expected = atom_class(Atom.sphere(1, "with_fixed_point")).value \
        * RationalU(U + 1)
    assert equivariant_betti_series(prod).value == expected


def test_product_requires_trivial_second_factor():
    with pytest.raises(InvalidComplex):
        product_with_trivial(point_complex(), swapped_pair_complex())


@pytest.mark.parametrize("x_builder,x_args", [
    (swapped_pair_complex, ()),
    (sphere_complex, (1, "with_fixed_point")),
    (sphere_complex, (1, "antipodal")),
])
def test_kunneth_rule(x_builder, x_args):
    x = x_builder(*x_args)
    y = sphere_complex(2, "trivial")
    prod = product_with_trivial(x, y)
    for n in range(-3, prod.top_dimension + 2):
        expected = sum(equivariant_homology(x, p) * plain_homology(y, n - p)
                       for p in range(n - y.top_dimension,
                                      x.top_dimension + 1))
        assert equivariant_homology(prod, n) == expected, n


# ---------------------------------------------------------------------------
# cohomology and duality

@pytest.mark.parametrize("d", [1, 2, 3])
def test_free_action_equals_quotient_homology(d):
    # for a free involution the equivariant groups are those of the quotient;
    # the quotient of the antipodal model is one cell per dimension with
    # vanishing mod-2 boundary
    sphere = sphere_complex(d, "antipodal")
    quotient = GCWComplex({f"c{q}": q for q in range(d + 1)})
    for n in range(-3, d + 3):
        assert equivariant_homology(sphere, n) == plain_homology(quotient, n)


def test_point_cohomology():
    point = point_complex()
    for n in range(-3, 5):
        assert equivariant_cohomology(point, n) == (1 if n >= 0 else 0)


@pytest.mark.parametrize("builder,args", [
    (point_complex, ()),
    (swapped_pair_complex, ()),
    (sphere_complex, (1, "trivial")),
    (sphere_complex, (2, "trivial")),
    (sphere_complex, (3, "trivial")),
    (sphere_complex, (1, "antipodal")),
])
def test_poincare_duality(builder, args):
    cw = builder(*args)
    d = max(cw.top_dimension, 0)
    for n in range(-2, d + 4):
        assert equivariant_cohomology(cw, n) == equivariant_homology(cw, d - n)


# ---------------------------------------------------------------------------
# file format

def test_json_roundtrip(tmp_path):
    import json

    source = {
        "cells": [{"id": "v1", "dim": 0}, {"id": "v2", "dim": 0},
                  {"id": "e1", "dim": 1}, {"id": "e2", "dim": 1}],
        "boundary": {"e1": ["v1", "v2"], "e2": ["v1", "v2"]},
        "sigma": {"v1": "v2", "v2": "v1", "e1": "e2", "e2": "e1"},
        "fixed_is_geometric": True,
    }
    path = tmp_path / "circle.json"
    path.write_text(json.dumps(source), encoding="utf-8")
    loaded = GCWComplex.load(path)
    assert validate_complex(loaded) == []
    assert equivariant_betti_series(loaded).value == RationalU(U + 1)
    again = GCWComplex.from_dict(loaded.to_dict())
    assert again.cells == loaded.cells
    assert again.boundary == loaded.boundary
    assert again.sigma == loaded.sigma


def test_missing_sigma_defaults_to_fixed():
    cw = GCWComplex.from_dict({"cells": [{"id": "v", "dim": 0}]})
    assert cw.sigma == {"v": "v"}
