from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3arith.exact import GF, QQ, FieldMismatchError, Fp, is_prime, is_square_mod_p
from k3arith.exact.fields import common_field, fraction_str, parse_fraction, primes_below

F13 = GF(13)
rationals = st.builds(Fraction, st.integers(-10**6, 10**6), st.integers(1, 50))


def test_rationals_are_reduced():
    q = parse_fraction("14/21")
    assert (q.numerator, q.denominator) == (2, 3)
    assert fraction_str(Fraction(0)) == "0"
    assert fraction_str(Fraction(-7, 15)) == "-7/15"


def test_parse_refuses_floats():
    with pytest.raises((TypeError, ValueError)):
        parse_fraction(0.5)


def test_prime_checks():
    assert primes_below(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1) and not is_prime(91)
    with pytest.raises(ValueError):
        GF(15)


def test_fp_basics():
    a = F13(7)
    assert a + 8 == 2
    assert a * a.inverse() == 1
    assert F13(Fraction(1, 2)) == 7
    assert -F13(3) == 10
    with pytest.raises(ZeroDivisionError):
        F13(0).inverse()


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatchError):
        GF(13)(1) + GF(11)(1)
    with pytest.raises(FieldMismatchError):
        common_field(GF(13)(1), GF(11)(1))


@pytest.mark.parametrize("a, expected", [(7, False), (4, True), (0, True)])
def test_is_square_mod_13(a, expected):
    assert is_square_mod_p(F13(a)) is expected


def test_euler_criterion_matches_enumeration():
    for p in (3, 5, 7, 11, 13, 17):
        K = GF(p)
        squares = {int(x * x) for x in K.elements()}
        assert {int(a) for a in K.elements() if is_square_mod_p(a)} == squares


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_prime_field_axioms(a, b, c):
    a, b, c = F13(a), F13(b), F13(c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1
        assert a ** 12 == 1


def test_qq_coercion():
    assert QQ("3/4") == Fraction(3, 4)
    assert QQ(2) == Fraction(2)
    assert isinstance(F13(5), Fp)
