from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3arith.exact import GF, QQ, UniPoly, ZERO_DEGREE, poly_gcd, poly_xgcd, primitive_part, proportional
from k3arith.exact.poly import inverse_mod, is_squarefree, squarefree_decomposition, squarefree_part

t = UniPoly.gen(QQ)
small = st.integers(-20, 20)
polys = st.lists(small, min_size=0, max_size=7).map(lambda cs: UniPoly(cs, QQ))
nonzero = polys.filter(bool)


def test_zero_polynomial_has_sentinel_degree():
    assert UniPoly([], QQ).degree == ZERO_DEGREE
    assert UniPoly([0, 0], QQ) == UniPoly([], QQ)


def test_gcd_examples():
    assert poly_gcd(t**2 - 1, t - 1) == t - 1
    torsion = t**4 - 36 * t**2 - 116 * t - 104
    assert poly_gcd(torsion, t + 2) == t + 2
    f = t**3 + 2 * t
    assert poly_gcd(f, UniPoly([], QQ)) == f.monic()


def test_gcd_of_coprime_products_is_one():
    a = UniPoly.from_roots([1, 2, 3, 4, 5], QQ)
    b = UniPoly.from_roots([-1, -2, 6, 7, Fraction(1, 2)], QQ)
    assert poly_gcd(a, b) == UniPoly([1], QQ)


def test_gcd_rejects_mixed_fields():
    with pytest.raises(TypeError):
        poly_gcd(t, UniPoly([0, 1], GF(13)))


@given(polys, nonzero)
def test_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=60)
@given(nonzero, nonzero, nonzero)
def test_gcd_divides_and_is_maximal(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert (a * c) % g == UniPoly([], QQ)
    assert (b * c) % g == UniPoly([], QQ)
    assert g % c.monic() == UniPoly([], QQ)
    assert g.lc == 1


@settings(max_examples=60)
@given(nonzero, nonzero)
def test_xgcd_bezout(a, b):
    g, s, u = poly_xgcd(a, b)
    assert s * a + u * b == g
    assert g == poly_gcd(a, b)


def test_inverse_mod_quadratic():
    m = t**2 - 2
    inv = inverse_mod(t + 2, m)
    assert ((t + 2) * inv) % m == UniPoly([1], QQ)


def test_squarefree_decomposition():
    f = (t - 1) ** 3 * (t + 2) ** 2 * (t**2 + 1)
    parts = squarefree_decomposition(f)
    rebuilt = UniPoly([1], QQ)
    for g, m in parts:
        rebuilt = rebuilt * g**m
    assert proportional(rebuilt, f)
    assert squarefree_part(f) == ((t - 1) * (t + 2) * (t**2 + 1)).monic()
    assert not is_squarefree(f)
    assert is_squarefree(t**2 + 1)


def test_primitive_part_and_proportional():
    f = UniPoly([Fraction(1, 2), Fraction(3, 4), Fraction(-1, 4)], QQ)
    assert primitive_part(f) == UniPoly([-2, -3, 1], QQ)
    assert proportional(f, 4 * f)
    assert not proportional(f, f + 1)


def test_evaluate_and_compose():
    f = t**2 + 3 * t + 1
    assert f(Fraction(1, 2)) == Fraction(11, 4)
    assert f(t + 1) == t**2 + 5 * t + 5
    assert f.derivative() == 2 * t + 3


def test_json_round_trip():
    f = UniPoly([Fraction(-1, 3), 0, 5], QQ)
    assert f.to_json() == ["-1/3", "0", "5"]
    assert UniPoly.from_json(f.to_json()) == f


def test_format():
    assert (t**4 - 36 * t**2 - 116 * t - 104).format("t") == "t^4 - 36*t^2 - 116*t - 104"
