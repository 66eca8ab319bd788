from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3arith.exact import QQ, NumberField, ReducibleModulusError, UniPoly, nf_inverse, number_field

t = UniPoly.gen(QQ)
HALVING = UniPoly([67147, 57990, 19212, 2842, 157], QQ)
coeff = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 9))


def mult_matrix(e):
    """Matrix of multiplication by e on the power basis (columns = images of basis)."""
    K = e.field
    n = K.modulus.degree
    cols = []
    for i in range(n):
        img = (e * K.gen**i).coeffs
        cols.append(list(img) + [Fraction(0)] * (n - len(img)))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def matvec(M, v):
    return [sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(M))]


def test_modulus_is_monic_and_certified():
    K = number_field(HALVING)
    assert K.modulus == HALVING.monic()
    with pytest.raises(ReducibleModulusError):
        NumberField(t**2 - 1)


def test_inverse_examples():
    K = number_field(HALVING)
    z = K.gen
    assert nf_inverse(K(1)) == 1
    expected = Fraction(-1, 67147) * (157 * z**3 + 2842 * z**2 + 19212 * z + 57990)
    assert nf_inverse(z) == expected
    assert z * expected == 1
    L = number_field(t**2 - 2)
    w = L.gen
    assert nf_inverse(w + 2) == (2 - w) / 2
    with pytest.raises(ZeroDivisionError):
        nf_inverse(L(0))


@settings(max_examples=40, deadline=None)
@given(st.lists(coeff, min_size=4, max_size=4), st.lists(coeff, min_size=4, max_size=4))
def test_matches_matrix_representation(a, b):
    K = number_field(HALVING)
    x = K.from_poly(UniPoly(a, QQ))
    y = K.from_poly(UniPoly(b, QQ))
    vy = list(y.coeffs) + [Fraction(0)] * (4 - len(y.coeffs))
    prod = x * y
    vp = list(prod.coeffs) + [Fraction(0)] * (4 - len(prod.coeffs))
    assert matvec(mult_matrix(x), vy) == vp
    if x:
        assert x * x.inverse() == 1


@settings(max_examples=30, deadline=None)
@given(st.lists(coeff, min_size=2, max_size=2), st.lists(coeff, min_size=2, max_size=2),
       st.lists(coeff, min_size=2, max_size=2))
def test_field_axioms_quadratic(a, b, c):
    K = number_field(t**2 + t + 1)
    x, y, z = (K.from_poly(UniPoly(v, QQ)) for v in (a, b, c))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_serialization():
    K = number_field(HALVING)
    e = Fraction(1, 2) * K.gen**2 - 3
    assert e.to_json() == {"nf": ["-3", "0", "1/2", "0"]}
