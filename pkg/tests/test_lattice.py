from fractions import Fraction
from itertools import product
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3arith.lattice import (
    AMPLE,
    D1,
    D2,
    D3,
    D4,
    GENERATORS,
    IDENTITY,
    NAMED,
    T2,
    T3,
    T4,
    U,
    B,
    Bp,
    LatticeError,
    ambient_pairing_check,
    ambient_report,
    apply,
    classify_sigma4_reflections,
    cm_class,
    gram_determinant,
    hyperbolic_distance,
    inverse_isometry,
    is_isometry,
    matmul,
    orbit_of_D4,
    pair,
    reflection,
    signature,
    sigma4_pairing,
)

vectors = st.tuples(*[st.integers(-6, 6)] * 4)


def test_gram_invariants():
    assert gram_determinant() == -28
    assert signature() == (1, 3)
    assert [pair(D, D) for D in (D1, D2, D3, D4)] == [0, 0, 0, -2]
    assert pair(AMPLE, AMPLE) == 12


@pytest.mark.parametrize("name", sorted(NAMED))
def test_named_matrices_are_isometries(name):
    M = NAMED[name]
    assert is_isometry(M)
    assert matmul(M, inverse_isometry(M)) == IDENTITY


def test_generator_relations():
    assert apply(U, D4) == D4
    assert apply(matmul(matmul(matmul(T4, T3), T4), T2), D1) == D1
    assert T3 == matmul(matmul(U, T2), U)


def test_scaling_is_not_an_isometry():
    assert not is_isometry(tuple(tuple(2 * x for x in row) for row in IDENTITY))


@pytest.mark.parametrize("m", range(5))
def test_cm_classes(m):
    C = cm_class(m)
    assert pair(C, D1) == 1
    assert C[1] == C[2] == m
    assert pair(C, C) == -2


def _word_orbit(length):
    # oracle: apply every word in the generators and inverses directly
    moves = []
    for M in GENERATORS.values():
        moves += [M, inverse_isometry(M)]
    reached = {D4}
    layer = {D4}
    for _ in range(length):
        layer = {apply(M, v) for v in layer for M in moves}
        reached |= layer
    return reached


def test_orbit_matches_word_enumeration():
    orbit = orbit_of_D4(word_length=4)
    assert set(orbit) == _word_orbit(4)


def test_orbit_word_length_6():
    orbit = orbit_of_D4(word_length=6)
    assert len(orbit) == 83
    assert all(pair(v, v) == -2 for v in orbit)
    assert (0, 1, 0, -1) in orbit
    assert orbit == sorted(orbit)


def test_orbit_ample_bound():
    bounded = orbit_of_D4(word_length=6, ample_bound=10)
    assert all(pair(v, AMPLE) <= 10 for v in bounded)
    assert set(bounded) <= set(orbit_of_D4(word_length=6))


@given(vectors)
def test_isometries_preserve_pairing(v):
    for M in NAMED.values():
        assert pair(apply(M, v), apply(M, v)) == pair(v, v)


@given(vectors.filter(lambda a: pair(a, a) != 0), vectors)
def test_reflection_properties(a, x):
    R = reflection(a)
    assert matmul(R, R) == tuple(tuple(Fraction(v) for v in row) for row in IDENTITY)
    assert apply(R, a) == tuple(-c for c in a)
    assert is_isometry(R)
    if pair(a, x) == 0:
        assert apply(R, x) == x


def test_reflection_of_isotropic_vector():
    with pytest.raises(LatticeError):
        reflection(D1)


def test_hyperbolic_distance():
    assert hyperbolic_distance(AMPLE, AMPLE) == 1
    A = (1, 1, 1, 0)
    Bv = (2, 1, 1, 0)
    # A.B = 16, A.A = 12, B.B = 20
    assert hyperbolic_distance(A, Bv) == Fraction(16 * 16, 12 * 20)
    assert hyperbolic_distance(A, Bv) >= 1
    with pytest.raises(LatticeError):
        hyperbolic_distance(D4, AMPLE)


@given(vectors, vectors)
def test_hyperbolic_distance_symmetric(a, b):
    try:
        d = hyperbolic_distance(a, b)
    except LatticeError:
        return
    assert d == hyperbolic_distance(b, a)
    assert d >= 1  # reversed Cauchy-Schwarz on the positive sheet


def test_sigma4_reflection_classification():
    report = classify_sigma4_reflections()
    assert report.k_values == [-1, 0, 1]
    assert report.discriminant.format("k") == "-7*k^2 + 16"
    # reflections must be integral isometries; only k = 0 supplies them
    with_refl = [c.k for c in report.candidates if c.integral_reflections]
    assert with_refl == [0]
    assert sorted(report.named_reflections()) == ["T4U", "U"]
    for M in report.reflections:
        assert is_isometry(M)
        assert matmul(M, M) == IDENTITY


def test_printed_discriminant_squares():
    # of the candidates, only k = 0 makes -5k^2 + 16 a perfect square
    squares = [k for k in (-1, 0, 1) if isqrt(16 - 5 * k * k) ** 2 == 16 - 5 * k * k]
    assert squares == [0]


def test_sigma4_pairings():
    assert sigma4_pairing(T4) == 2
    assert sigma4_pairing(matmul(U, T4)) == -2


def test_ambient_products():
    assert Bp(1) * Bp(2) == B(3)
    assert Bp(1) * Bp(1) == B(1) - B(1)
    assert B(1) * Bp(1) == 1 and B(1) * Bp(2) == 0
    with pytest.raises(TypeError):
        B(1) * B(2)


@pytest.mark.parametrize("r", range(11))
def test_ambient_pairing(r):
    assert ambient_pairing_check(r) == 2
    report = ambient_report(r)
    assert report.value.degree == 0



def test_involutions_square_to_identity():
    for M in (U, NAMED["T1"], T2):
        assert matmul(M, M) == IDENTITY


def test_words_up_to_length_4_are_isometries():
    mats = list(NAMED.values())
    for a, b, c, d in product(mats, repeat=4):
        assert is_isometry(matmul(matmul(a, b), matmul(c, d)))


@pytest.mark.parametrize("m", range(11))
def test_cm_class_coordinates_up_to_10(m):
    C = cm_class(m)
    assert C[1] == C[2] == m


@pytest.mark.parametrize("r", [0, 1, 5])
def test_ambient_product_of_forms(r):
    assert str(ambient_report(r).XY) == f"(4)*B1 + ({2 * r + 2})*B2 + ({2 * r + 2})*B3"


def test_orbit_is_closed_inside_the_radius():
    inner = set(orbit_of_D4(word_length=5))
    outer = set(orbit_of_D4(word_length=6))
    for v in inner:
        for M in GENERATORS.values():
            assert apply(M, v) in outer
