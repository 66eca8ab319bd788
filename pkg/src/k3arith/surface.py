"""(2,2,2) surfaces in P1 x P1 x P1, their x-fibers and singular fibers.

The surface is given affinely by F(x, y, z) = sum c[i][j][k] x^i y^j z^k with
0 <= i, j, k <= 2.  Fibers of the projection to x are (2,2) curves in (y, z).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path

from .exact import (
    GF,
    QQ,
    FactorPattern,
    IrreducibilityResult,
    MultiPoly,
    UniPoly,
    certify_irreducible_over_Q,
    degree_pattern,
    first_subresultant,
    is_square_mod_p,
    poly_gcd,
    primitive_part,
    resultant,
    squarefree_part,
)
from .exact.factor import BadPrimeError, factor_mod_p, reduce_mod_p, roots_mod_p
from .exact.fields import Fp, PrimeField, common_field, field_of, fraction_str, parse_fraction


class SurfaceError(ValueError):
    pass


class NotOnSurfaceError(SurfaceError):
    pass


class DegenerateFiberError(SurfaceError):
    pass


class DegenerateQuadraticError(SurfaceError):
    """The deck involution is undefined: the axis quadratic has zero leading term."""


class PositiveDimensionalError(SurfaceError):
    pass


class InconsistentSystemError(SurfaceError):
    pass


# ---------------------------------------------------------------------------
# Surfaces

# x^2 (y^2 + 2 y z^2 + y z + z^2 + 2 y + 3 z) + x (...) + (...); the printed
# source text has 2 y^2 z in the x^2 part, which contradicts its own mod-13
# data (see PRINTED_TERMS).
CANONICAL_TERMS = [
    (2, 2, 0, 1), (2, 1, 2, 2), (2, 1, 1, 1), (2, 0, 2, 1), (2, 1, 0, 2), (2, 0, 1, 3),
    (1, 2, 2, 1), (1, 2, 1, 3), (1, 2, 0, 2), (1, 0, 1, 1),
    (0, 2, 2, 1), (0, 2, 1, 3), (0, 2, 0, 2), (0, 1, 0, 1), (0, 0, 1, 1),
]


@dataclass(frozen=True)
class SurfaceForm:
    """Rational coefficient tensor of a (2,2,2) form; ``coeffs[i][j][k]`` multiplies x^i y^j z^k."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 3 or any(len(r) != 3 or any(len(c) != 3 for c in r) for r in self.coeffs):
            raise SurfaceError("coefficient tensor must be 3x3x3")
        if not any(c for r in self.coeffs for row in r for c in row):
            raise SurfaceError("the zero form does not define a surface")

    @classmethod
    def from_terms(cls, terms) -> "SurfaceForm":
        t = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
        for i, j, k, c in terms:
            if not (0 <= i <= 2 and 0 <= j <= 2 and 0 <= k <= 2):
                raise SurfaceError(f"exponent ({i},{j},{k}) exceeds bidegree (2,2,2)")
            t[i][j][k] += parse_fraction(c)
        return cls(tuple(tuple(tuple(row) for row in plane) for plane in t))

    @classmethod
    def default(cls) -> "SurfaceForm":
        return cls.from_terms(CANONICAL_TERMS)

    @classmethod
    def from_json(cls, doc) -> "SurfaceForm":
        if isinstance(doc, (str, Path)):
            doc = json.loads(Path(doc).read_text())
        try:
            rows = doc["coefficients"]
        except (KeyError, TypeError) as exc:
            raise SurfaceError('surface JSON needs a "coefficients" list') from exc
        return cls.from_terms((int(i), int(j), int(k), c) for i, j, k, c in rows)

    def to_json(self) -> dict:
        return {"coefficients": [[i, j, k, fraction_str(c)] for i, j, k, c in self.terms()]}

    def terms(self):
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    c = self.coeffs[i][j][k]
                    if c:
                        yield i, j, k, c

    def coeff(self, i, j, k) -> Fraction:
        return self.coeffs[i][j][k]

    def poly(self) -> MultiPoly:
        return MultiPoly({(i, j, k): c for i, j, k, c in self.terms()})

    def __call__(self, x, y, z):
        total = 0
        for i, j, k, c in self.terms():
            total = total + c * x**i * y**j * z**k
        return total

    def add_terms(self, terms) -> "SurfaceForm":
        return SurfaceForm.from_terms(list(self.terms()) + list(terms))

    def __str__(self):
        return str(self.poly())


PRINTED_TERMS = [(2, 2, 1, 2) if t == (2, 1, 2, 2) else t for t in CANONICAL_TERMS]

PRESETS = {
    "paper-surface": SurfaceForm.default,
    "paper-surface-as-printed": lambda: SurfaceForm.from_terms(PRINTED_TERMS),
}


def load_surface(source: str) -> SurfaceForm:
    """A named preset or a path to a surface JSON document."""
    if source in PRESETS:
        return PRESETS[source]()
    path = Path(source)
    if not path.exists():
        raise SurfaceError(f"unknown surface preset or file: {source}")
    return SurfaceForm.from_json(path)


def line_on_surface_check(X: SurfaceForm) -> bool:
    """True iff the line (x, 0, 0) lies on the surface."""
    return all(X.coeff(i, 0, 0) == 0 for i in range(3))


def flip_x_chart(X: SurfaceForm) -> SurfaceForm:
    """The same surface in the chart x -> 1/x (denominators cleared by x^2)."""
    return SurfaceForm.from_terms((2 - i, j, k, c) for i, j, k, c in X.terms())


# ---------------------------------------------------------------------------
# Fibers

@dataclass(frozen=True)
class FiberPoint:
    """A point of P1 x P1 in (y, z); ``None`` in a coordinate marks infinity."""

    y: object
    z: object

    @property
    def inf_y(self) -> bool:
        return self.y is None

    @property
    def inf_z(self) -> bool:
        return self.z is None

    @property
    def affine(self) -> bool:
        return self.y is not None and self.z is not None

    def to_json(self) -> dict:
        return {"y": _scalar_json(self.y), "z": _scalar_json(self.z), "inf_y": self.inf_y, "inf_z": self.inf_z}

    @classmethod
    def from_json(cls, doc, field=QQ) -> "FiberPoint":
        def coord(v, inf):
            if inf or v is None:
                return None
            if isinstance(v, dict) and "nf" in v:
                return field.from_poly(UniPoly([parse_fraction(c) for c in v["nf"]], QQ))
            return field(parse_fraction(v))

        return cls(coord(doc.get("y"), doc.get("inf_y", False)), coord(doc.get("z"), doc.get("inf_z", False)))

    def to_field(self, K) -> "FiberPoint":
        return FiberPoint(None if self.y is None else K(self.y), None if self.z is None else K(self.z))

    def __str__(self):
        return f"({'inf' if self.y is None else self.y}, {'inf' if self.z is None else self.z})"


def _scalar_json(v):
    if v is None:
        return None
    if isinstance(v, (int, Fraction)):
        return fraction_str(v)
    if hasattr(v, "to_json"):
        return v.to_json()
    return str(v)


class BiquadraticCurve:
    """A (2,2) curve sum e[j][k] y^j z^k = 0 over an exact field."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=None):
        flat = [c for row in coeffs for c in row]
        if len(coeffs) != 3 or len(flat) != 9:
            raise ValueError("a (2,2) curve needs a 3x3 coefficient matrix")
        field = field or common_field(*flat)
        self.field = field
        self.coeffs = tuple(tuple(field(c) for c in row) for row in coeffs)
        if not any(c != 0 for c in flat):
            raise DegenerateFiberError("the zero form does not define a curve")

    @classmethod
    def from_terms(cls, terms, field=QQ) -> "BiquadraticCurve":
        m = [[0] * 3 for _ in range(3)]
        for j, k, c in terms:
            m[j][k] = m[j][k] + c
        return cls(m, field)

    def coeff(self, j, k):
        return self.coeffs[j][k]

    def __call__(self, y, z):
        total = self.field.zero
        for j in range(3):
            for k in range(3):
                c = self.coeffs[j][k]
                if c != 0:
                    total = total + c * y**j * z**k
        return total

    def dy(self, y, z):
        total = self.field.zero
        for j in (1, 2):
            for k in range(3):
                c = self.coeffs[j][k]
                if c != 0:
                    total = total + j * c * y ** (j - 1) * z**k
        return total

    def dz(self, y, z):
        total = self.field.zero
        for j in range(3):
            for k in (1, 2):
                c = self.coeffs[j][k]
                if c != 0:
                    total = total + k * c * y**j * z ** (k - 1)
        return total

    def contains(self, P: FiberPoint) -> bool:
        """Membership, including points at infinity (checked in the flipped chart)."""
        y, z = P.y, P.z
        if y is not None and z is not None:
            return self(y, z) == 0
        total = self.field.zero
        for j in range(3):
            for k in range(3):
                c = self.coeffs[j][k]
                # in the chart u = 1/y (resp. w = 1/z), the monomial becomes u^(2-j)
                fy = (1 if j == 2 else 0) if y is None else y**j
                fz = (1 if k == 2 else 0) if z is None else z**k
                total = total + c * fy * fz
        return total == 0

    def translate(self, y0, z0) -> "BiquadraticCurve":
        """Coefficients of E(y + y0, z + z0)."""
        K = self.field
        out = [[K.zero] * 3 for _ in range(3)]
        for j in range(3):
            for k in range(3):
                c = self.coeffs[j][k]
                if c == 0:
                    continue
                for a in range(j + 1):
                    for b in range(k + 1):
                        out[a][b] = out[a][b] + c * comb(j, a) * comb(k, b) * y0 ** (j - a) * z0 ** (k - b)
        return BiquadraticCurve(out, K)

    def to_field(self, K) -> "BiquadraticCurve":
        return BiquadraticCurve([[K(c) for c in row] for row in self.coeffs], K)

    def __eq__(self, other):
        return isinstance(other, BiquadraticCurve) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def format(self) -> str:
        terms = []
        for j in (2, 1, 0):
            for k in (2, 1, 0):
                c = self.coeffs[j][k]
                if c == 0:
                    continue
                mono = "*".join(m for m in (
                    "" if j == 0 else ("y" if j == 1 else "y^2"),
                    "" if k == 0 else ("z" if k == 1 else "z^2"),
                ) if m)
                cs = str(c)
                if mono and cs == "1":
                    terms.append(mono)
                elif mono and cs == "-1":
                    terms.append("-" + mono)
                elif mono:
                    terms.append(f"({cs})*{mono}" if "/" in cs or " " in cs else f"{cs}*{mono}")
                else:
                    terms.append(cs)
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BiquadraticCurve({self.format()}, {self.field!r})"


def fiber_at(X: SurfaceForm, x0) -> BiquadraticCurve:
    """The fiber over x = x0, with coefficients in the field of ``x0``."""
    K = field_of(x0)
    x0 = K(x0)
    powers = [K.one, x0, x0 * x0]
    m = [[K.zero] * 3 for _ in range(3)]
    for i, j, k, c in X.terms():
        m[j][k] = m[j][k] + K(c) * powers[i]
    if not any(c != 0 for row in m for c in row):
        raise DegenerateFiberError(f"the fiber over x = {x0} vanishes identically")
    return BiquadraticCurve(m, K)


# ---------------------------------------------------------------------------
# Deck involutions

def _axis_quadratic(X: SurfaceForm, axis: int, P):
    """(A, B, C) with F = A w^2 + B w + C in coordinate ``axis`` (1, 2 or 3)."""
    K = common_field(*P)
    P = [K(v) for v in P]
    a = axis - 1
    abc = [K.zero, K.zero, K.zero]
    for e0, e1, e2, c in X.terms():
        e = (e0, e1, e2)
        term = K(c)
        for idx in range(3):
            if idx != a and e[idx]:
                term = term * P[idx] ** e[idx]
        abc[e[a]] = abc[e[a]] + term
    return abc[2], abc[1], abc[0]


def deck_transform(X: SurfaceForm, axis: int, P):
    """sigma_axis: swap ``P`` with the other point of X over the same projection."""
    if axis not in (1, 2, 3):
        raise ValueError("axis must be 1, 2 or 3")
    if X(*P) != 0:
        raise NotOnSurfaceError(f"{P} is not on the surface")
    A, B, _ = _axis_quadratic(X, axis, P)
    if A == 0:
        raise DegenerateQuadraticError(
            f"sigma_{axis} is undefined at {tuple(str(v) for v in P)}: the quadratic in that coordinate degenerates"
        )
    out = list(P)
    out[axis - 1] = -B / A - P[axis - 1]
    return tuple(out)


# ---------------------------------------------------------------------------
# Nodality mod p

NODE = "node"
CUSP = "cusp-or-worse"
SMOOTH = "smooth-point"


@dataclass
class NodeCertificate:
    kind: str
    p: int
    point: tuple
    translated: BiquadraticCurve
    quadratic: tuple
    discriminant: object
    split: bool | None = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "p": self.p,
            "point": [int(v) for v in self.point],
            "translated": self.translated.format(),
            "quadratic": [int(v) for v in self.quadratic],
            "discriminant": int(self.discriminant),
            "split": self.split,
        }


def certify_node_mod_p(X: SurfaceForm, x0: Fp, y0: Fp, z0: Fp) -> NodeCertificate:
    """Classify the fiber singularity at (y0, z0) over x = x0 via the translated form."""
    K = common_field(x0, y0, z0)
    if not isinstance(K, PrimeField):
        raise TypeError("nodality certificates work over prime fields")
    if K.p == 2:
        raise ValueError("need an odd prime")
    x0, y0, z0 = K(x0), K(y0), K(z0)
    G = fiber_at(X, x0).translate(y0, z0)
    if G.coeff(0, 0) != 0:
        raise NotOnSurfaceError(f"({x0}, {y0}, {z0}) is not on the surface mod {K.p}")
    A, B, C = G.coeff(2, 0), G.coeff(1, 1), G.coeff(0, 2)
    disc = B * B - 4 * A * C
    point = (x0, y0, z0)
    if G.coeff(1, 0) != 0 or G.coeff(0, 1) != 0:
        return NodeCertificate(SMOOTH, K.p, point, G, (A, B, C), disc)
    if A == 0 and B == 0 and C == 0:
        return NodeCertificate(CUSP, K.p, point, G, (A, B, C), disc)
    if disc == 0:
        return NodeCertificate(CUSP, K.p, point, G, (A, B, C), disc)
    return NodeCertificate(NODE, K.p, point, G, (A, B, C), disc, split=is_square_mod_p(disc))


# ---------------------------------------------------------------------------
# Singular fibers

@dataclass(frozen=True)
class RationalFunction:
    num: UniPoly
    den: UniPoly

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes")
        return self.num(x) / d

    def reduce_mod(self, p: int) -> "RationalFunction":
        return RationalFunction(self.num.to_field(GF(p)), self.den.to_field(GF(p)))

    def __str__(self):
        return f"({self.num.format('x')}) / ({self.den.format('x')})"


@dataclass
class SingularFiberReport:
    g: UniPoly
    y_of_x: RationalFunction
    z_of_x: RationalFunction
    patterns: list[FactorPattern] = field(default_factory=list)
    certificate: IrreducibilityResult | None = None
    nodes: list[NodeCertificate] = field(default_factory=list)
    eliminant_degree: int = 0
    removed: list[UniPoly] = field(default_factory=list)
    undecided: UniPoly | None = None
    screen: "UndecidedScreen | None" = None

    def pattern(self, p: int) -> FactorPattern:
        return next(pt for pt in self.patterns if pt.p == p)

    def to_json(self) -> dict:
        return {
            "degree": self.g.degree,
            "g": [str(c) for c in self.g.coeffs],
            "eliminant_degree": self.eliminant_degree,
            "removed_factors": [f.to_json() for f in self.removed],
            "patterns": [p.to_json() for p in self.patterns],
            "roots_mod_p": {
                str(pt.p): [int(r) for r in roots_mod_p(self.g.to_field(GF(pt.p)))] for pt in self.patterns
            },
            "nodes": [n.to_json() for n in self.nodes],
            "irreducibility": self.certificate.to_json() if self.certificate else None,
            "undecided": self.undecided.to_json() if self.undecided is not None else None,
            "undecided_screen": self.screen.to_json() if self.screen else None,
        }


def _as_poly_in(h: MultiPoly, var: int, coeff_var: int) -> list[UniPoly]:
    """View ``h`` as a polynomial in ``var`` with univariate coefficients in ``coeff_var``."""
    return [c.to_unipoly(coeff_var) for c in h.coeffs_in(var)]


def _homogenized(coeffs: list[UniPoly], Y: UniPoly, W: UniPoly, d: int, s: UniPoly) -> UniPoly:
    """sum c_j Y^j W^(d-j) modulo ``s``."""
    total = UniPoly([], QQ)
    for j, c in enumerate(coeffs):
        if c:
            total = (total + c * _powmod(Y, j, s) * _powmod(W, d - j, s)) % s
    return total


def _powmod(a: UniPoly, e: int, s: UniPoly) -> UniPoly:
    out = UniPoly([1], QQ)
    for _ in range(e):
        out = (out * a) % s
    return out


def _substitute_xyz(P: MultiPoly, Y, W, dy, Zn, Zd, dz, s) -> UniPoly:
    """Numerator of P(x, Y/W, Zn/Zd) after clearing W^dy Zd^dz, modulo s."""
    x = UniPoly.gen(QQ)
    total = UniPoly([], QQ)
    for (i, j, k), c in P.terms.items():
        term = c * _powmod(x, i, s) * _powmod(Y, j, s) * _powmod(W, dy - j, s)
        term = term % s * _powmod(Zn, k, s) % s * _powmod(Zd, dz - k, s)
        total = (total + term) % s
    return total


def singular_locus(X: SurfaceForm, primes=(13, 11), seed: int = 0) -> SingularFiberReport:
    """Affine singular points of the x-fibers: solve F = F_y = F_z = 0.

    z is eliminated first, then y, by resultants; the squarefree part of the
    eliminant is filtered by back-substituting y(x), z(x) modulo it.
    """
    F = X.poly()
    Fy, Fz = F.diff(1), F.diff(2)
    h1 = resultant(F.coeffs_in(2), Fz.coeffs_in(2))
    h2 = resultant(Fy.coeffs_in(2), Fz.coeffs_in(2))
    if isinstance(h1, int) or isinstance(h2, int) or not h1 or not h2:
        raise PositiveDimensionalError("z-elimination produced a zero eliminant")
    h1y, h2y = _as_poly_in(h1, 1, 0), _as_poly_in(h2, 1, 0)
    if len(h1y) < 2 or len(h2y) < 2:
        raise InconsistentSystemError("an eliminant does not involve y; no isolated solutions to recover")
    g_raw = resultant(h1y, h2y)
    if not g_raw:
        raise PositiveDimensionalError("the singular locus is positive dimensional (eliminant vanishes)")

    removed = []
    # common zeros of both leading coefficients are roots at y = infinity
    lc_common = poly_gcd(h1y[-1], h2y[-1])
    stripped = g_raw
    while True:
        common = poly_gcd(stripped, lc_common)
        if common.degree <= 0:
            break
        stripped = stripped // common
        removed.append(common)
    s = squarefree_part(stripped)
    if s.degree <= 0:
        raise InconsistentSystemError("no affine singular fibers survive elimination")

    s1, s0 = first_subresultant(h1y, h2y)
    W, Y = s1 % s, (-s0) % s
    zc = [_as_poly_in(c, 1, 0) for c in F.coeffs_in(2)]  # C, B, A as polys in y over QQ[x]
    while len(zc) < 3:
        zc.append([])
    Cz, Bz, Az = zc
    Zn = (-_homogenized(Bz, Y, W, 2, s)) % s
    Zd = (2 * _homogenized(Az, Y, W, 2, s)) % s
    undecided = poly_gcd(s, (W * Zd) % s)
    good = s // undecided
    nF = _substitute_xyz(F, Y, W, 2, Zn, Zd, 2, good)
    nFy = _substitute_xyz(Fy, Y, W, 1, Zn, Zd, 2, good)
    nFz = _substitute_xyz(Fz, Y, W, 2, Zn, Zd, 1, good)
    g = good
    for residue in (nF, nFy, nFz):
        g = poly_gcd(g, residue)
    if g.degree <= 0:
        raise InconsistentSystemError("back-substitution rejected every candidate fiber")
    spurious = good // g
    if spurious.degree > 0:
        removed.append(spurious)

    y_fn = _reduced_rf(-s0, s1)
    numB = _homogenized_full(Bz, -s0, s1, 2)
    numA = _homogenized_full(Az, -s0, s1, 2)
    z_fn = _reduced_rf(-numB, 2 * numA)

    report = SingularFiberReport(
        g=primitive_part(g),
        y_of_x=y_fn,
        z_of_x=z_fn,
        eliminant_degree=g_raw.degree,
        removed=removed,
        undecided=undecided if undecided.degree > 0 else None,
    )
    if report.undecided is not None:
        report.screen = screen_undecided(X, report.undecided, seed=seed)
    for p in primes:
        try:
            report.patterns.append(degree_pattern(report.g, p, seed))
        except BadPrimeError:
            continue
        report.nodes.extend(_nodes_mod_p(X, report, p))
    if primes:
        report.certificate = certify_irreducible_over_Q(report.g, primes, seed)
    return report


SCREEN_PRIMES = (17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59)


@dataclass
class UndecidedScreen:
    """Mod-p screen of eliminant factors where y(x) or z(x) cannot be recovered.

    At each prime, a linear factor whose fiber has no affine singular point
    is *dead*: no rational factor reducing onto it can carry singular fibers.
    The degrees still possible for a live rational factor are the subset sums
    of the remaining pieces; when the intersection over primes is empty the
    factor is excluded.  This is a screen, not a proof: reductions that send
    the singular point to infinity are not examined.
    """

    degree: int
    per_prime: dict = field(default_factory=dict)
    surviving_degrees: set = field(default_factory=set)

    @property
    def excluded(self) -> bool:
        return not self.surviving_degrees

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "excluded": self.excluded,
            "surviving_degrees": sorted(self.surviving_degrees),
            "per_prime": self.per_prime,
        }


def _subset_sums(degrees) -> set:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    sums.discard(0)
    return sums


def screen_undecided(X: SurfaceForm, u: UniPoly, primes=SCREEN_PRIMES, seed: int = 0) -> UndecidedScreen:
    screen = UndecidedScreen(u.degree)
    surviving = None
    for p in primes:
        try:
            up = reduce_mod_p(u, p)
        except BadPrimeError:
            continue
        factors = factor_mod_p(up, seed=seed)
        if any(m > 1 for _, m in factors):
            continue  # roots collide mod p; skip this prime
        alive, dead = [], []
        for g, _ in factors:
            if g.degree == 1:
                r = -g.coeff(0)
                if not singular_points_mod_p(X, r):
                    dead.append(int(r))
                    continue
            alive.append(g.degree)
        screen.per_prime[p] = {"dead_roots": dead, "live_degrees": alive}
        sums = _subset_sums(alive)
        surviving = sums if surviving is None else surviving & sums
        if not surviving:
            break
    screen.surviving_degrees = surviving if surviving is not None else set(range(1, u.degree + 1))
    return screen


def _homogenized_full(coeffs, Y, W, d):
    total = UniPoly([], QQ)
    for j, c in enumerate(coeffs):
        if c:
            total = total + c * Y**j * W ** (d - j)
    return total


def _reduced_rf(num: UniPoly, den: UniPoly) -> RationalFunction:
    g = poly_gcd(num, den)
    num, den = num // g, den // g
    scale = den.lc
    return RationalFunction(num / scale, den / scale)


def singular_points_mod_p(X: SurfaceForm, x0: Fp):
    """Affine singular points of the fiber over ``x0`` by exhaustive search."""
    E = fiber_at(X, x0)
    K = E.field
    return [
        (y, z)
        for y in K.elements()
        for z in K.elements()
        if E(y, z) == 0 and E.dy(y, z) == 0 and E.dz(y, z) == 0
    ]


def _nodes_mod_p(X, report: SingularFiberReport, p: int) -> list[NodeCertificate]:
    K = GF(p)
    if p == 2:
        return []
    out = []
    for r in roots_mod_p(report.g.to_field(K)):
        try:
            y = report.y_of_x.reduce_mod(p)(r)
            z = report.z_of_x.reduce_mod(p)(r)
            points = [(y, z)]
        except ZeroDivisionError:
            points = singular_points_mod_p(X, r)
        for y, z in points:
            out.append(certify_node_mod_p(X, r, y, z))
    return out
