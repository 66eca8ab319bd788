"""Chord-and-tangent group law on a (2,2) fiber via (1,1)-form interpolation.

A (1,1) form ``alpha*y*z + beta*y + gamma*z + delta`` meets a (2,2) curve in
four points.  With zero ``O`` and ``O'`` the fourth point of the form having
contact order 3 at ``O``, we set ``A*B`` = fourth point of the form through
``A, B, O'`` and ``A + B = (A*B)*O``.  Everything is generic over the exact
fields in :mod:`k3arith.exact`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exact import GF, QQ, UniPoly, factor_mod_p, factor_small_over_Q, number_field, primitive_part
from .exact.fields import PrimeField
from .exact.linalg import nullspace, solve
from .surface import BiquadraticCurve, FiberPoint


class GroupLawError(ValueError):
    pass


class NotOnCurveError(GroupLawError):
    pass


class UnsupportedPointError(GroupLawError):
    """Points at infinity are only produced, never consumed."""


class DegenerateConfigurationError(GroupLawError):
    """The interpolation conditions do not pin down a unique (1,1) form."""


class DegenerateFormError(GroupLawError):
    """The (1,1) form splits into a product of axis lines."""


class InconsistentIntersectionError(GroupLawError):
    pass


class DegeneratePencilError(GroupLawError):
    pass


class HalvingVerificationError(GroupLawError):
    pass


class OneOneForm:
    """``alpha*y*z + beta*y + gamma*z + delta``.

    Coefficients are kept as given; equality is up to scaling.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, alpha, beta, gamma, delta, field=None):
        from .exact.fields import common_field

        field = field or common_field(alpha, beta, gamma, delta)
        v = tuple(field(c) for c in (alpha, beta, gamma, delta))
        if all(c == 0 for c in v):
            raise ValueError("the zero (1,1) form")
        self.coeffs = v
        self.field = field

    def canonical(self) -> "OneOneForm":
        """Rescaled so the first nonzero coefficient is 1."""
        lead = next(c for c in self.coeffs if c != 0)
        return OneOneForm(*(c / lead for c in self.coeffs), field=self.field)

    @classmethod
    def from_mobius(cls, a, b, c, d, field=None) -> "OneOneForm":
        """The form z = (a*y + b)/(c*y + d)."""
        return cls(c, -a, d, -b, field)

    def to_mobius(self):
        alpha, beta, gamma, delta = self.coeffs
        return -beta, -delta, alpha, gamma

    @property
    def alpha(self):
        return self.coeffs[0]

    @property
    def beta(self):
        return self.coeffs[1]

    @property
    def gamma(self):
        return self.coeffs[2]

    @property
    def delta(self):
        return self.coeffs[3]

    def is_degenerate(self) -> bool:
        return self.alpha * self.delta - self.beta * self.gamma == 0

    def __call__(self, y, z):
        return self.alpha * y * z + self.beta * y + self.gamma * z + self.delta

    def z_of_y(self, y):
        """z on the form above ``y``; ``None`` for z = infinity."""
        den = self.alpha * y + self.gamma
        num = -(self.beta * y + self.delta)
        if den == 0:
            if num == 0:
                raise DegenerateFormError("the form contains the line y = const")
            return None
        return num / den

    def __eq__(self, other):
        return isinstance(other, OneOneForm) and self.canonical().coeffs == other.canonical().coeffs

    def __hash__(self):
        return hash(self.canonical().coeffs)

    def __repr__(self):
        return "OneOneForm(" + ", ".join(str(c) for c in self.coeffs) + ")"

    def to_json(self) -> dict:
        from .surface import _scalar_json

        return {"alpha_beta_gamma_delta": [_scalar_json(c) for c in self.coeffs]}


@dataclass(frozen=True)
class InterpolationConstraint:
    point: FiberPoint
    multiplicity: int = 1


# ---- local expansions -------------------------------------------------------

def _smul(a, b, n, zero):
    out = [zero] * n
    for i, x in enumerate(a[:n]):
        if x == 0:
            continue
        for j in range(n - i):
            if j < len(b):
                out[i + j] = out[i + j] + x * b[j]
    return out


def _sadd(a, b):
    return [x + y for x, y in zip(a, b)]


def _eval_series(E: BiquadraticCurve, Y, Z, n):
    K = E.field
    ypow = [[K.one] + [K.zero] * (n - 1)]
    zpow = [[K.one] + [K.zero] * (n - 1)]
    for _ in range(2):
        ypow.append(_smul(ypow[-1], Y, n, K.zero))
        zpow.append(_smul(zpow[-1], Z, n, K.zero))
    total = [K.zero] * n
    for j in range(3):
        for k in range(3):
            c = E.coeff(j, k)
            if c != 0:
                total = _sadd(total, [c * v for v in _smul(ypow[j], zpow[k], n, K.zero)])
    return total


def local_branch(E: BiquadraticCurve, P: FiberPoint, order: int):
    """Truncated parametrization ``(Y(s), Z(s))`` of ``E`` at a smooth affine point."""
    K = E.field
    y0, z0 = K(P.y), K(P.z)
    ez, ey = E.dz(y0, z0), E.dy(y0, z0)
    if ez != 0:
        free, dep, slope = "y", "z", ez
    elif ey != 0:
        free, dep, slope = "z", "y", ey
    else:
        raise DegenerateConfigurationError(f"{P} is a singular point of the fiber")
    lin = [K.zero] * order
    if order > 1:
        lin[1] = K.one
    moving = [K.zero] * order
    base_free, base_dep = (y0, z0) if free == "y" else (z0, y0)
    for k in range(1, order):
        free_s = [base_free] + lin[1:]
        dep_s = [base_dep] + moving[1:]
        Y, Z = (free_s, dep_s) if free == "y" else (dep_s, free_s)
        c = _eval_series(E, Y, Z, order)[k]
        moving[k] = -c / slope
    free_s = [base_free] + lin[1:]
    dep_s = [base_dep] + moving[1:]
    return (free_s, dep_s) if free == "y" else (dep_s, free_s)


def _constraint_rows(E: BiquadraticCurve, P: FiberPoint, m: int):
    K = E.field
    Y, Z = local_branch(E, P, m)
    YZ = _smul(Y, Z, m, K.zero)
    return [[YZ[i], Y[i], Z[i], K.one if i == 0 else K.zero] for i in range(m)]


def _check_point(E: BiquadraticCurve, P: FiberPoint):
    if not P.affine:
        raise UnsupportedPointError(f"point at infinity {P} cannot be used as an interpolation point")
    if E(E.field(P.y), E.field(P.z)) != 0:
        raise NotOnCurveError(f"{P} is not on the fiber {E}")


def _merge(points) -> list[InterpolationConstraint]:
    out: list[list] = []
    for P in points:
        for entry in out:
            if entry[0] == P:
                entry[1] += 1
                break
        else:
            out.append([P, 1])
    return [InterpolationConstraint(P, m) for P, m in out]


def interpolate(E: BiquadraticCurve, constraints) -> OneOneForm:
    """The unique (1,1) form with the requested contact orders."""
    constraints = [c if isinstance(c, InterpolationConstraint) else InterpolationConstraint(*c) for c in constraints]
    if sum(c.multiplicity for c in constraints) != 3:
        raise ValueError("a (1,1) form is fixed by exactly three conditions")
    rows = []
    for c in constraints:
        _check_point(E, c.point)
        rows.extend(_constraint_rows(E, c.point, c.multiplicity))
    basis = nullspace(rows, E.field)
    if len(basis) != 1:
        raise DegenerateConfigurationError(
            f"interpolation conditions leave a {len(basis)}-dimensional family of forms"
        )
    return OneOneForm(*basis[0], field=E.field).canonical()


# ---- restriction to the fiber ---------------------------------------------

def _lmul(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _restriction(E: BiquadraticCurve, alpha, beta, gamma, delta, zero):
    """Ascending y-coefficients of (alpha*y+gamma)^2 * E(y, -(beta*y+delta)/(alpha*y+gamma))."""
    num = [-delta, -beta]
    den = [gamma, alpha]
    num_p = [[zero + 1], num, _lmul(num, num, zero)]
    den_p = [[zero + 1], den, _lmul(den, den, zero)]
    total = [zero] * 5
    for j in range(3):
        for k in range(3):
            c = E.coeff(j, k)
            if c == 0:
                continue
            term = _lmul([zero] * j + [zero + 1], _lmul(num_p[k], den_p[2 - k], zero), zero)
            for i, v in enumerate(term):
                total[i] = total[i] + v * c
    return total


def restriction(E: BiquadraticCurve, L: OneOneForm) -> UniPoly:
    return UniPoly(_restriction(E, *L.coeffs, E.field.zero), E.field)


def _divide_root(coeffs, r, zero):
    """Synthetic division by (y - r); returns (quotient, remainder)."""
    n = len(coeffs) - 1
    q = [zero] * n
    acc = zero
    for i in range(n, 0, -1):
        acc = coeffs[i] + acc * r if i < n else coeffs[i]
        q[i - 1] = acc
    rem = coeffs[0] + acc * r if n > 0 else coeffs[0]
    return q, rem


def fourth_intersection(E: BiquadraticCurve, L: OneOneForm, known) -> FiberPoint:
    """The residual intersection point of ``L`` and ``E`` after removing ``known`` (3 points)."""
    if L.is_degenerate():
        raise DegenerateFormError(f"{L} is a product of axis lines")
    K = E.field
    N = restriction(E, L)
    if not N:
        raise InconsistentIntersectionError("the form contains a component of the fiber")
    coeffs = list(N.coeffs)
    for P in known:
        if not P.affine:
            raise UnsupportedPointError(f"known point {P} is at infinity")
        y, z = K(P.y), K(P.z)
        if L(y, z) != 0 or E(y, z) != 0:
            raise InconsistentIntersectionError(f"{P} does not lie on both the form and the fiber")
        if len(coeffs) < 2:
            raise InconsistentIntersectionError("known intersection points exceed the restriction degree")
        coeffs, rem = _divide_root(coeffs, y, K.zero)
        if rem != 0:
            raise InconsistentIntersectionError(f"{P} is not a root of the restriction")
    q = UniPoly(coeffs, K)
    if q.degree == 1:
        y4 = -q.coeff(0) / q.coeff(1)
        return FiberPoint(y4, L.z_of_y(y4))
    if q.degree == 0:
        return FiberPoint(None, None if L.alpha == 0 else -L.beta / L.alpha)
    raise InconsistentIntersectionError("restriction lost its residual root")


# ---- marked fibers and the group law ---------------------------------------

class MarkedFiber:
    """A fiber with its zero point ``O`` and the auxiliary point ``O'``."""

    def __init__(self, curve: BiquadraticCurve, O: FiberPoint):
        self.curve = curve
        self.field = curve.field
        self.O = O.to_field(self.field)
        _check_point(curve, self.O)
        self.triple_form = interpolate(curve, [InterpolationConstraint(self.O, 3)])
        self.O_prime = fourth_intersection(curve, self.triple_form, [self.O] * 3)

    def to_field(self, K) -> "MarkedFiber":
        return MarkedFiber(self.curve.to_field(K), self.O.to_field(K))

    def contains(self, P: FiberPoint) -> bool:
        return self.curve.contains(P)


def star_form(F: MarkedFiber, A: FiberPoint, B: FiberPoint) -> OneOneForm:
    return interpolate(F.curve, _merge([A, B, F.O_prime]))


def star(F: MarkedFiber, A: FiberPoint, B: FiberPoint) -> FiberPoint:
    A, B = A.to_field(F.field), B.to_field(F.field)
    L = star_form(F, A, B)
    return fourth_intersection(F.curve, L, [A, B, F.O_prime])


def add(F: MarkedFiber, A: FiberPoint, B: FiberPoint) -> FiberPoint:
    return star(F, star(F, A, B), F.O)


def neg(F: MarkedFiber, A: FiberPoint) -> FiberPoint:
    return star(F, A, F.O)


def double(F: MarkedFiber, A: FiberPoint) -> FiberPoint:
    return add(F, A, A)


def affine_points(F: MarkedFiber):
    """All affine points of a fiber over a prime field (exhaustive)."""
    K = F.field
    if not isinstance(K, PrimeField):
        raise TypeError("point enumeration needs a prime field")
    E = F.curve
    return [FiberPoint(y, z) for y in K.elements() for z in K.elements() if E(y, z) == 0]


# ---- pencils, 2-torsion and halving ---------------------------------------

def pencil_through(E: BiquadraticCurve, constraints) -> tuple[OneOneForm, OneOneForm]:
    """Forms ``(L_c, L_d)`` spanning the pencil with two conditions.

    ``L_c`` has (alpha, gamma) = (1, 0) and ``L_d`` has (0, 1), so the member
    ``t*L_c + L_d`` is z = (a*y + b)/(c*y + d) with ``t = c/d``.
    """
    constraints = [c if isinstance(c, InterpolationConstraint) else InterpolationConstraint(*c) for c in constraints]
    if sum(c.multiplicity for c in constraints) != 2:
        raise ValueError("a pencil needs exactly two conditions")
    rows = []
    for c in constraints:
        _check_point(E, c.point)
        rows.extend(_constraint_rows(E, c.point, c.multiplicity))
    K = E.field
    sub = [[r[1], r[3]] for r in rows]
    try:
        bc = solve(sub, [-r[0] for r in rows], K)
        bd = solve(sub, [-r[2] for r in rows], K)
    except ZeroDivisionError as exc:
        raise DegeneratePencilError("pencil cannot be parametrized by t = alpha/gamma") from exc
    Lc = (K.one, bc[0], K.zero, bc[1])
    Ld = (K.zero, bd[0], K.one, bd[1])
    return OneOneForm(*Lc, field=K), OneOneForm(*Ld, field=K)


def _pencil_member_coeffs(Lc: OneOneForm, Ld: OneOneForm):
    K = Lc.field
    return [UniPoly([d, c], K) for c, d in zip(Lc.coeffs, Ld.coeffs)]


def pencil_residual(E: BiquadraticCurve, Lc, Ld, known) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Residual quadratic ``a(t) y^2 + b(t) y + c(t)`` after removing the known points."""
    K = E.field
    zero = UniPoly([], K)
    coeffs = _restriction(E, *_pencil_member_coeffs(Lc, Ld), zero)
    for P in known:
        coeffs, rem = _divide_root(coeffs, UniPoly([K(P.y)], K), zero)
        if rem:
            raise InconsistentIntersectionError(f"{P} is not on every member of the pencil")
    while len(coeffs) < 3:
        coeffs.append(zero)
    c, b, a = coeffs[:3]
    if any(coeffs[3:]):
        raise InconsistentIntersectionError("residual has degree above 2")
    return a, b, c


def _normalize(f: UniPoly) -> UniPoly:
    if f.field is QQ:
        return primitive_part(f)
    return f.monic()


def two_torsion_poly(F: MarkedFiber) -> UniPoly:
    """Condition on t = c/d for the pencil through O and O' to touch the fiber again."""
    O, Op = F.O, F.O_prime
    if not Op.affine or Op == O:
        raise DegeneratePencilError("2-torsion pencil needs O and O' distinct and affine")
    Lc, Ld = pencil_through(F.curve, [InterpolationConstraint(O, 1), InterpolationConstraint(Op, 1)])
    a, b, c = pencil_residual(F.curve, Lc, Ld, [O, Op])
    return _normalize(b * b - 4 * a * c)


@dataclass
class HalvingBranch:
    factor: UniPoly | None
    field: object
    zeta: object
    form: OneOneForm
    Q: FiberPoint

    def to_json(self) -> dict:
        return {
            "factor": self.factor.to_json() if self.factor is not None else None,
            "field": repr(self.field),
            "Q": self.Q.to_json(),
            "form": self.form.to_json(),
        }


@dataclass
class HalvingResult:
    P: FiberPoint
    R: FiberPoint
    h: UniPoly
    branches: list[HalvingBranch] = field(default_factory=list)
    skipped: list[UniPoly] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "P": self.P.to_json(),
            "R": self.R.to_json(),
            "h": self.h.to_json(),
            "branches": [b.to_json() for b in self.branches],
            "skipped_factors": [f.to_json() for f in self.skipped],
        }


def _branch_point(F, Lc, Ld, a, b, t, L_field) -> tuple[OneOneForm, FiberPoint] | None:
    av, bv = a(t), b(t)
    if av == 0:
        return None
    form = OneOneForm(*[t * c + d for c, d in zip(Lc.coeffs, Ld.coeffs)], field=L_field)
    y = -bv / (2 * av)
    return form, FiberPoint(y, form.z_of_y(y))


def halve(F: MarkedFiber, P: FiberPoint) -> HalvingResult:
    """All Q with 2Q = P, one branch per irreducible factor of the halving polynomial.

    Each branch is verified by doubling inside its own field before returning.
    """
    P = P.to_field(F.field)
    if not P.affine:
        raise UnsupportedPointError("halving needs an affine point")
    R = star(F, P, F.O)
    if not R.affine:
        raise UnsupportedPointError(f"P*O = {R} lies at infinity")
    Op = F.O_prime
    cons = [InterpolationConstraint(Op, 2)] if R == Op else [InterpolationConstraint(Op, 1), InterpolationConstraint(R, 1)]
    Lc, Ld = pencil_through(F.curve, cons)
    a, b, c = pencil_residual(F.curve, Lc, Ld, [Op, R])
    h = _normalize(b * b - 4 * a * c)
    result = HalvingResult(P, R, h)
    K = F.field
    if K is QQ:
        factors = [g for g, _ in factor_small_over_Q(h)]
    else:
        factors = [g for g, _ in factor_mod_p(h)]
    for g in factors:
        if g.degree == 1:
            L_field, zeta = K, -g.coeff(0) / g.coeff(1)
        elif K is QQ:
            L_field = number_field(g)
            zeta = L_field.gen
        else:
            result.skipped.append(g)
            continue
        found = _branch_point(F, Lc, Ld, a, b, zeta, L_field)
        if found is None:
            result.skipped.append(g)
            continue
        form, Q = found
        FL = F if L_field is K else F.to_field(L_field)
        doubled = double(FL, Q)
        if doubled != P.to_field(L_field):
            raise HalvingVerificationError(f"2Q = {doubled} differs from P = {P} on branch {g}")
        result.branches.append(HalvingBranch(_normalize(g), L_field, zeta, form, Q))
    if h.degree < 4 and h:
        # t = infinity: the member L_c itself
        lead = [u.coeff(2) for u in (a, b, c)]
        if lead[1] * lead[1] - 4 * lead[0] * lead[2] == 0 and lead[0] != 0:
            y = -lead[1] / (2 * lead[0])
            Q = FiberPoint(y, Lc.z_of_y(y))
            if double(F, Q) != P:
                raise HalvingVerificationError("branch at t = infinity fails to double to P")
            result.branches.append(HalvingBranch(None, K, None, Lc, Q))
    result.branches.sort(key=_branch_key)
    return result


def _branch_key(br: HalvingBranch):
    if br.factor is None:
        return (99, [])
    return (br.factor.degree, [str(c) for c in reversed(br.factor.coeffs)])


def two_torsion_points(F: MarkedFiber) -> list[FiberPoint]:
    """Rational 2-torsion points (including O) from roots of the torsion polynomial."""
    return [br.Q for br in halve(F, F.O).branches if br.field is F.field]
