from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3arith.exact import GF, QQ, UniPoly, certify_irreducible_over_Q, factor_small_over_Q
from k3arith.grouplaw import (
    DegenerateConfigurationError,
    DegenerateFormError,
    GroupLawError,
    InconsistentIntersectionError,
    InterpolationConstraint,
    MarkedFiber,
    NotOnCurveError,
    OneOneForm,
    UnsupportedPointError,
    add,
    affine_points,
    double,
    fourth_intersection,
    halve,
    interpolate,
    neg,
    pencil_through,
    restriction,
    star,
    star_form,
    two_torsion_points,
    two_torsion_poly,
)
from k3arith.properties import deck_involutions, fiber_mod_p, group_axioms, torsion_roots_double_to_O
from k3arith.surface import BiquadraticCurve, FiberPoint, fiber_at

Fr = Fraction
F13 = GF(13)


def pt(y, z):
    return FiberPoint(Fr(y), Fr(z))


O_PRIME = pt(Fr(7, 15), -7)
STAR = pt(Fr(-203, 92), Fr(-2198, 841))


def test_triple_contact_form(fiber0):
    assert fiber0.triple_form == OneOneForm.from_mobius(1, 0, 2, -1)
    assert fiber0.O_prime == O_PRIME


def test_paper_abcd_roundtrip():
    L = OneOneForm.from_mobius(3, -1, 2, 5)
    assert L.to_mobius() == (3, -1, 2, 5)
    # z = (3y - 1)/(2y + 5) at y = 1 is 2/7
    assert L.z_of_y(Fr(1)) == Fr(2, 7)
    assert L.z_of_y(Fr(-5, 2)) is None


def test_form_equality_is_projective():
    assert OneOneForm(2, 4, 6, 8) == OneOneForm(1, 2, 3, 4)
    assert hash(OneOneForm(2, 4, 6, 8)) == hash(OneOneForm(1, 2, 3, 4))
    assert OneOneForm(2, 4, 6, 8).coeffs == (2, 4, 6, 8)
    assert OneOneForm(0, 1, 1, 0) != OneOneForm(0, 1, -1, 0)
    with pytest.raises(ValueError):
        OneOneForm(0, 0, 0, 0)


def test_star_of_O_prime_and_O(fiber0):
    assert star(fiber0, O_PRIME, fiber0.O) == STAR
    # the triple-contact form meets the fiber in O, O, O and O'
    assert star(fiber0, fiber0.O, fiber0.O) == fiber0.O


def test_star_form_passes_through_its_points(fiber0):
    L = star_form(fiber0, O_PRIME, fiber0.O)
    for P in (O_PRIME, fiber0.O, STAR):
        assert L(P.y, P.z) == 0
        assert fiber0.curve(P.y, P.z) == 0


def test_group_law_over_q(fiber0):
    O = fiber0.O
    A, B = O_PRIME, STAR
    assert add(fiber0, A, O) == A
    assert add(fiber0, A, neg(fiber0, A)) == O
    assert add(fiber0, A, B) == add(fiber0, B, A)
    C = add(fiber0, A, B)
    assert fiber0.contains(C)
    assert add(fiber0, add(fiber0, A, B), A) == add(fiber0, A, add(fiber0, B, A))


def test_fourth_intersection_synthetic():
    # on z = y the curve restricts to (y-1)(y-2)(y-3)(y-5)
    E = BiquadraticCurve([[30, 0, 0], [-61, 0, 0], [41, -11, 1]])
    L = OneOneForm(0, -1, 1, 0)
    assert restriction(E, L) == UniPoly([30, -61, 41, -11, 1], QQ)
    assert fourth_intersection(E, L, [pt(1, 1), pt(2, 2), pt(3, 3)]) == pt(5, 5)
    assert fourth_intersection(E, L, [pt(5, 5), pt(2, 2), pt(3, 3)]) == pt(1, 1)
    with pytest.raises(InconsistentIntersectionError):
        fourth_intersection(E, L, [pt(1, 1), pt(2, 2), pt(4, 4)])
    with pytest.raises(DegenerateFormError):
        fourth_intersection(E, OneOneForm(1, 0, 0, 0), [pt(1, 1)] * 3)


def test_fourth_intersection_at_infinity():
    # on z = y the curve restricts to the cubic (y-1)(y-2)(y-3); the fourth point is at infinity
    E = BiquadraticCurve([[-6, 0, 0], [11, 0, 0], [-6, 1, 0]])
    L = OneOneForm(0, -1, 1, 0)
    assert restriction(E, L).degree == 3
    assert fourth_intersection(E, L, [pt(1, 1), pt(2, 2), pt(3, 3)]) == FiberPoint(None, None)


def test_interpolation_needs_a_unique_form():
    # on the reducible curve y*z, three points on the line y = 0 leave a 2-dim family
    E = BiquadraticCurve([[0, 0, 0], [0, 1, 0], [0, 0, 0]])
    with pytest.raises(DegenerateConfigurationError):
        interpolate(E, [InterpolationConstraint(pt(0, z)) for z in (1, 2, 3)])


def test_interpolation_rejects_points_off_the_curve(fiber0):
    with pytest.raises(NotOnCurveError):
        interpolate(fiber0.curve, [InterpolationConstraint(pt(1, 1), 3)])


def test_star_rejects_points_at_infinity(fiber0):
    with pytest.raises(UnsupportedPointError):
        halve(fiber0, FiberPoint(None, Fr(0)))


def test_two_torsion_poly(fiber0):
    f = two_torsion_poly(fiber0)
    assert f == UniPoly([-104, -116, -36, 0, 1], QQ)
    factors = sorted((g for g, _ in factor_small_over_Q(f)), key=lambda g: g.degree)
    assert factors == [UniPoly([2, 1], QQ), UniPoly([-52, -32, -2, 1], QQ)]
    assert certify_irreducible_over_Q(factors[1], (3, 5, 7, 11, 13)).irreducible


def test_rational_two_torsion(fiber0):
    pts = two_torsion_points(fiber0)
    assert fiber0.O in pts
    for T in pts:
        assert double(fiber0, T) == fiber0.O


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20).filter(lambda d: d != 0))
def test_halving_pencil_matches_closed_form(fiber0, c, d):
    # members through O' with multiplicity 2: z = ((847c + 6525d) y - (1421c + 5243d)) / (314 (c y + d))
    Lc, Ld = pencil_through(fiber0.curve, [InterpolationConstraint(O_PRIME, 2)])
    t = c / d
    member = OneOneForm(*[t * a + b for a, b in zip(Lc.coeffs, Ld.coeffs)])
    expected = OneOneForm.from_mobius(847 * c + 6525 * d, -(1421 * c + 5243 * d), 314 * c, 314 * d)
    assert member == expected


def test_halve_O_prime_star_O(fiber0):
    result = halve(fiber0, STAR)
    assert result.R == O_PRIME
    assert result.h == UniPoly([67147, 57990, 19212, 2842, 157], QQ)
    [branch] = [b for b in result.branches if b.factor is not None and b.factor.degree == 4]
    K = branch.field
    t = K.gen
    y = (Fr(12302005, 213049) + Fr(16345885, 426098) * t + Fr(1896629, 213049) * t**2
         + Fr(1873, 2714) * t**3)
    z = Fr(-1758, 157) + Fr(-1421, 314) * t + Fr(-1, 2) * t**2
    assert branch.Q == FiberPoint(y, z)
    assert double(fiber0.to_field(K), branch.Q) == STAR.to_field(K)


def test_halve_O_gives_torsion(fiber0):
    result = halve(fiber0, fiber0.O)
    degrees = sorted(b.factor.degree for b in result.branches if b.factor is not None)
    assert degrees == [1, 3]
    linear = next(b for b in result.branches if b.factor is not None and b.factor.degree == 1)
    assert linear.factor == UniPoly([2, 1], QQ)
    assert linear.Q == pt(0, 0) or double(fiber0, linear.Q) == fiber0.O


# ---- finite-field checks -------------------------------------------------------

@pytest.fixture(scope="module")
def fiber13(surface):
    return fiber_mod_p(surface, 0, 13)


def test_fiber_mod_13(fiber13):
    assert fiber13.O_prime == FiberPoint(F13(10), F13(6))
    assert two_torsion_poly(fiber13).degree == 4


def test_torsion_mod_13(fiber13):
    pts = two_torsion_points(fiber13)
    assert set(pts) == {FiberPoint(F13(12), F13(2)), FiberPoint(F13(0), F13(0))}
    assert torsion_roots_double_to_O(fiber13).ok


def test_group_axioms_mod_13(fiber13):
    for name, tally in group_axioms(fiber13).items():
        assert tally.ok, (name, tally.to_json())


@pytest.mark.parametrize("p,x0", [(7, 0), (11, 3), (17, 5)])
def test_group_axioms_other_fibers(surface, p, x0):
    K = GF(p)
    E = fiber_at(surface, K(x0))
    for y, z in product(K.elements(), repeat=2):
        try:
            F = MarkedFiber(E, FiberPoint(y, z))
        except GroupLawError:
            continue  # not on the curve, or the tangent form degenerates there
        break
    else:
        pytest.skip("no usable marked point on this fiber")
    for name, tally in group_axioms(F).items():
        assert tally.failed == 0, (name, tally.to_json())


def test_halve_then_double_mod_13(fiber13):
    for P in affine_points(fiber13)[:8]:
        try:
            result = halve(fiber13, P)
        except (UnsupportedPointError, ValueError):
            continue
        for br in result.branches:
            if br.field is fiber13.field:
                assert double(fiber13, br.Q) == P


def test_deck_involutions_mod_13(surface):
    for name, tally in deck_involutions(surface, 13).items():
        assert tally.ok, (name, tally.to_json())
