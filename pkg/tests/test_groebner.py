import pytest
from hypothesis import given, strategies as st

from hextile import tables
from hextile.groebner import (
    bezout,
    buchberger_z,
    cofactors_sound,
    gcd_polynomial,
    ideal_equal,
    is_member,
    is_strong_basis,
    parse_ideal,
    reduce_full,
    s_polynomial,
)
from hextile.hexlattice import region_xy
from hextile.invariants import region_delta_st
from hextile.polynomial import ST, XY, deglex, format_poly, lex, parse

from strategies import polys

x, y = XY.gens()
s1, s2, t = ST.gens()


@pytest.mark.parametrize("a,b", [(2, 3), (3, 2), (4, 6), (-4, 6), (3, 9), (-3, 9), (7, -5), (0, 5)])
def test_bezout(a, b):
    u, v, g = bezout(a, b)
    assert u * a + v * b == g > 0
    if a and b % a == 0:
        assert (u, v) == ((1 if a > 0 else -1), 0)


def test_s_polynomial_examples():
    f = 3 * x + y
    assert s_polynomial(f, f, lex(XY)).is_zero()
    assert s_polynomial(2 * x, 3 * y, lex(XY)).is_zero()
    got = s_polynomial(1 + x + x**2, 1 + y + y**2, lex(XY))
    # y^2 (1+x+x^2) - x^2 (1+y+y^2)
    assert got == y**2 + x * y**2 - x**2 - x**2 * y


def test_gcd_polynomial_examples():
    assert gcd_polynomial(2 * x, 3 * x, lex(XY)) == x
    f = 6 * x * y + 1
    assert gcd_polynomial(f, f, lex(XY)) == f
    order = lex(ST)
    g = gcd_polynomial(3 * s2**2, s2**2 * t, order)
    assert g.leading_term(order) == ((0, 2, 1), 1)


def test_zero_input_is_rejected():
    with pytest.raises(ValueError):
        s_polynomial(XY.zero(), x, lex(XY))
    with pytest.raises(ValueError):
        gcd_polynomial(x, XY.zero(), lex(XY))


def test_bezout_closure():
    G = buchberger_z([2 * x, 3 * x], lex(XY))
    assert [format_poly(g) for g in G] == ["x"]
    assert ideal_equal([x], [2 * x, 3 * x], lex(XY))
    assert not ideal_equal([x], [2 * x], lex(XY))


def test_tribone_basis_matches_golden(G_trib):
    golden = tables.tribone_basis()
    assert ideal_equal(G_trib.elements, golden, lex(ST))
    assert sorted(G_trib.elements, key=format_poly) == sorted(golden, key=format_poly)
    assert is_strong_basis(G_trib)
    assert cofactors_sound(G_trib)


def test_chart_basis(G_I):
    assert is_strong_basis(G_I)
    assert cofactors_sound(G_I)
    assert reduce_full(region_xy(8), G_I).is_zero()
    assert not reduce_full(region_xy(2), G_I).is_zero()
    assert reduce_full(3 * x - 3 * y, G_I).is_zero()
    assert not reduce_full(x - y, G_I).is_zero()


def test_golden_remainders(G_trib):
    assert reduce_full(ST.zero(), G_trib).is_zero()
    assert reduce_full(s1, G_trib) == s1
    q2 = tables.st(tables.DECOMPOSITIONS[("3k-1", 2)][1])
    assert reduce_full(q2, G_trib) == -s2**2


def test_membership(G_trib, G_I):
    zero = is_member(ST.zero(), G_trib)
    assert zero.member and all(c.is_zero() for c in zero.cofactors)
    cert = is_member(region_delta_st(26).total(), G_trib)
    assert cert.member
    total = sum((c * g for c, g in zip(cert.cofactors, G_trib.generators)), ST.zero())
    assert total == region_delta_st(26).total()
    assert not is_member(region_delta_st(8).total(), G_trib).member


@given(polys(XY, max_exp=2, max_terms=3, coeff=5), polys(XY, max_exp=2, max_terms=3, coeff=5),
       polys(XY, max_exp=2, max_terms=3, coeff=5))
def test_ideal_combinations_are_members(G_I, a, b, c):
    g1, g2, g3 = G_I.generators
    f = a * g1 + b * g2 + c * g3
    cert = is_member(f, G_I)
    assert cert.member
    rebuilt = sum((q * g for q, g in zip(cert.cofactors, G_I.generators)), XY.zero())
    assert rebuilt == f


@given(polys(XY, max_exp=3, max_terms=4, coeff=30))
def test_normal_form_is_canonical(G_I, f):
    # two representatives of the same class share a normal form
    g1, g2, g3 = G_I.generators
    assert reduce_full(f + x * g1 - 2 * g3, G_I) == reduce_full(f, G_I)


@given(st.lists(polys(XY, max_exp=2, max_terms=3, coeff=6).filter(bool), min_size=1, max_size=3))
def test_random_bases_are_strong_with_sound_cofactors(gens):
    G = buchberger_z(gens, deglex(XY))
    assert is_strong_basis(G)
    assert cofactors_sound(G)
    for g in gens:
        assert reduce_full(g, G).is_zero()


def test_parse_ideal():
    text = "# tribones\nvars: x y\n1 + x + x^2\n1 + y + y^2  # second\n\n"
    varset, gens = parse_ideal(text)
    assert varset == XY and gens == [1 + x + x**2, 1 + y + y**2]
    with pytest.raises(ValueError):
        parse_ideal("1 + x\n")


def test_empty_generator_list():
    with pytest.raises(ValueError):
        buchberger_z([], lex(XY))
    assert parse("0", XY).is_zero()
