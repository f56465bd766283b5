import json

import pytest
from hypothesis import given, strategies as st

from hextile.hexlattice import (
    KINDS,
    Cell,
    FixedCellError,
    Placement,
    Tiling,
    TriboneType,
    abc_to_uv,
    cells_poly,
    chart_poly,
    closed_form_class,
    enumerated_class,
    grading,
    poly_cells,
    reduced_sector_form,
    region_T,
    region_xy,
    rotate120,
    rotate_uv,
    sector_poly,
    sector_uv,
    tribone_poly,
    uv_to_abc,
)
from hextile.polynomial import ABC, XY, evaluate_all_ones, normalize_quotient
from hextile.groebner import reduce_full

from strategies import polys

a, b, c = ABC.gens()
x, y = XY.gens()
uv = st.tuples(st.integers(-30, 30), st.integers(-30, 30))


def test_grading():
    assert grading((1, 0, 0)) == 1
    assert grading((1, 0, 2)) == 0          # x = a c^2
    assert grading((2, 2, 0)) == 1          # the cell a x^-1
    assert grading(a**2 * b + b**2 * c) == 0


def test_rotate120_examples():
    assert rotate120(a**2 * b) == b**2 * c
    assert rotate120(a * b * c) == 1


@given(polys(ABC, max_exp=3, max_terms=4))
def test_rotate120_has_order_three(f):
    assert rotate120(rotate120(rotate120(f))) == normalize_quotient(f, (1, 1, 1))
    assert rotate120(f, 3) == normalize_quotient(f, (1, 1, 1))


@given(uv)
def test_chart_round_trip_and_rotation(p):
    assert abc_to_uv(uv_to_abc(*p)) == p
    q = rotate_uv(*rotate_uv(*rotate_uv(*p)))
    assert q == p
    cell = Cell.from_uv(*p)
    assert cell.uv == p
    assert Cell.from_monomial(cell.monomial()) == cell
    assert cell.rotate().uv == rotate_uv(*p)
    # rotating the cell is the ring rotation of its monomial
    assert rotate120(ABC.monomial(cell.monomial())) == ABC.monomial(cell.rotate().monomial())


@given(uv)
def test_sectors_partition_the_lattice(p):
    cell = Cell.from_uv(*p)
    assert cell.p >= 0 and cell.q >= 0 and cell.sector in (0, 1, 2)
    assert Cell.from_json(json.loads(json.dumps(cell.to_json()))) == cell


def test_tribone_polynomials():
    origin = Cell(0, 0, 0)
    assert tribone_poly(TriboneType.X, origin) == a**2 * b**2 + a + a**2 * c**2
    assert tribone_poly(TriboneType.Y, origin) == c + a + a**3 * b


@given(uv, st.sampled_from(list(TriboneType)))
def test_tribones_have_three_cells(p, kind):
    center = Cell.from_uv(*p)
    assert evaluate_all_ones(tribone_poly(kind, center)) == 3
    pl = Placement(kind, center, -2)
    assert len(set(pl.cells())) == 3
    assert pl.rotate(3) == pl
    assert set(pl.rotate().cells()) == {q.rotate() for q in pl.cells()}
    assert Placement.from_json(pl.to_json()) == pl


def test_placement_equality_uses_type():
    center = Cell(1, 1, 0)
    assert Placement(TriboneType.X, center) != Placement(TriboneType.Y, center)


@pytest.mark.parametrize("n", [2, 3, 5, 6, 8, 9, 26, 27])
def test_region_sizes_and_symmetry(n):
    region = region_T(n)
    assert len(region) == n * (n + 1) // 2
    assert {q.rotate() for q in region.cells} == set(region.cells)
    assert evaluate_all_ones(sector_poly(n)) * 3 == len(region)


def test_region_examples():
    assert len(region_T(8).cells) == 36
    assert len(region_T(26).cells) == 351
    assert region_T(2).cells == frozenset({Cell(0, 0, 0), Cell(0, 0, 1), Cell(0, 0, 2)})
    assert len(region_T(0)) == 0
    assert len(region_T(7)) == 28    # N = 1 (mod 3): plain chart triangle


@pytest.mark.parametrize("n", [1, 4, 10])
def test_fixed_cell_family(n):
    with pytest.raises(FixedCellError, match="there is a hexagon in T_N fixed"):
        sector_uv(n)


def test_sector_examples():
    assert sector_poly(2) == a
    assert sector_poly(3) == a + a**2 * c**2
    assert evaluate_all_ones(sector_poly(26)) == 117
    assert reduced_sector_form(8) == a**2 * c**2 + a**3 * c**4 + a**4 * c**3
    assert reduced_sector_form(9) == a + a**3 * b + a**3 * c
    assert reduced_sector_form(2) == a


def test_sector_forms_are_congruent(G_I):
    for n in range(2, 31):
        if n % 3 == 1:
            continue
        diff = chart_poly(sector_poly(n) - reduced_sector_form(n), shift=(5, 5))
        assert reduce_full(diff, G_I).is_zero(), n


def test_chart_families():
    assert region_xy(1) == 1
    assert region_xy(2) == 1 + x + x * y
    assert evaluate_all_ones(region_xy(8)) == 36
    assert closed_form_class("L", 6).is_zero()
    assert closed_form_class("square", 5) == x**2 * y**2
    assert closed_form_class("delta", 8) == 3 * (1 + x + x * y)


@pytest.mark.parametrize("kind", KINDS)
def test_closed_forms(kind, G_I):
    for k in range(1, 31):
        diff = enumerated_class(kind, k) - closed_form_class(kind, k)
        assert reduce_full(diff, G_I).is_zero(), (kind, k)


def test_cells_poly_round_trip():
    cells = list(region_T(5).cells)
    f = cells_poly(cells)
    assert poly_cells(f) == {q: 1 for q in cells}


def test_tiling_json_round_trip():
    t = Tiling((Placement(TriboneType.Z, Cell(2, 1, 1), 3),), 5, False)
    assert Tiling.from_json(json.loads(json.dumps(t.to_json()))) == t
    assert t.cell_weights() == {q: 3 for q in t.placements[0].cells()}
