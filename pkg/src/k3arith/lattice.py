"""The rank-4 Picard lattice, its isometries, (-2)-orbits and the ambient divisor check.

Classes are integer 4-vectors in the basis ``(D1, D2, D3, D4)``; matrices act
on column vectors.  The Gram matrix ``J`` has signature (1, 3), so the sheet
``x.x = D.D, x.D > 0`` is a model of hyperbolic 3-space.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .exact import QQ, MultiPoly, UniPoly, rational_roots
from .exact.linalg import det_bareiss

Vector = tuple[int, int, int, int]
Matrix = tuple[tuple[int, ...], ...]

J: Matrix = (
    (0, 2, 2, 1),
    (2, 0, 2, 0),
    (2, 2, 0, 0),
    (1, 0, 0, -2),
)

D1: Vector = (1, 0, 0, 0)
D2: Vector = (0, 1, 0, 0)
D3: Vector = (0, 0, 1, 0)
D4: Vector = (0, 0, 0, 1)
AMPLE: Vector = (1, 1, 1, 0)

IDENTITY: Matrix = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))


class LatticeError(ValueError):
    pass


def mat(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def matmul(A, B) -> Matrix:
    n, m, k = len(A), len(B[0]), len(B)
    return tuple(tuple(sum(A[i][l] * B[l][j] for l in range(k)) for j in range(m)) for i in range(n))


def apply(M, v) -> tuple:
    return tuple(sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(M)))


def transpose(M) -> Matrix:
    return tuple(zip(*M))


def matpow(M, n: int) -> Matrix:
    out = IDENTITY
    for _ in range(n):
        out = matmul(M, out)
    return out


def pair(v, w, gram: Matrix = J):
    """The intersection number ``v^T J w``."""
    return sum(v[i] * gram[i][j] * w[j] for i in range(4) for j in range(4))


def is_isometry(M, gram: Matrix = J) -> bool:
    return matmul(matmul(transpose(M), gram), M) == tuple(tuple(r) for r in gram)


def gram_determinant() -> int:
    return det_bareiss([list(r) for r in J])


def charpoly(M) -> UniPoly:
    """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier."""
    n = len(M)
    A = tuple(tuple(Fraction(x) for x in row) for row in M)
    coeffs = [Fraction(1)]
    Mk = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    c = Fraction(1)
    for k in range(1, n + 1):
        Mk = matmul(A, tuple(tuple(Mk[i][j] + (c if i == j else 0) for j in range(n)) for i in range(n)))
        c = -sum(Mk[i][i] for i in range(n)) / k
        coeffs.append(c)
    return UniPoly(list(reversed(coeffs)), QQ)


def _sign_changes(seq) -> int:
    signs = [x > 0 for x in seq if x != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def signature(gram: Matrix = J) -> tuple[int, int]:
    """(positive, negative) inertia.

    Eigenvalues of a symmetric matrix are real, so Descartes' rule of signs
    counts them exactly.
    """
    p = charpoly(gram)
    pos = _sign_changes(p.coeffs)
    neg = _sign_changes([c * (-1) ** i for i, c in enumerate(p.coeffs)])
    return pos, neg


def inverse_isometry(M) -> Matrix:
    """``J^-1 M^T J``; exact and integral for isometries of an integral lattice."""
    if not is_isometry(M):
        raise LatticeError("not an isometry")
    Jinv = _rational_inverse(J)
    inv = matmul(matmul(Jinv, transpose(M)), J)
    if any(x.denominator != 1 for row in inv for x in row):
        raise LatticeError("isometry inverse is not integral")
    return tuple(tuple(int(x) for x in row) for row in inv)


def _rational_inverse(M):
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for k in range(n):
        piv = next(i for i in range(k, n) if A[i][k] != 0)
        A[k], A[piv] = A[piv], A[k]
        p = A[k][k]
        A[k] = [x / p for x in A[k]]
        for i in range(n):
            if i != k and A[i][k] != 0:
                f = A[i][k]
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
    return tuple(tuple(row[n:]) for row in A)


# Displayed generators of the symmetry group of the ample cone.
U: Matrix = mat([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
T1: Matrix = mat([[-1, 0, 0, 0], [2, 1, 0, 0], [2, 0, 1, 0], [-1, 0, 0, 1]])
T2: Matrix = mat([[1, 2, 0, 0], [0, -1, 0, 0], [0, 2, 1, 1], [0, 0, 0, -1]])
T3: Matrix = matmul(matmul(U, T2), U)
T4: Matrix = mat([[1, 8, 8, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 4, 4, 1]])

GENERATORS: dict[str, Matrix] = {"U": U, "T1": T1, "T2": T2, "T4": T4}
NAMED: dict[str, Matrix] = {"U": U, "T1": T1, "T2": T2, "T3": T3, "T4": T4}

# Column-vector action is validated here once rather than assumed.
for _name, _M in NAMED.items():
    assert is_isometry(_M), f"{_name} does not preserve J"
assert apply(U, D4) == D4
assert apply(matmul(matmul(matmul(T4, T3), T4), T2), D1) == D1


def orbit_of_D4(generators=None, word_length: int = 6, ample_bound: int | None = None,
                ample: Vector = AMPLE) -> list[Vector]:
    """Breadth-first closure of ``{D4}`` under generators and their inverses.

    ``word_length`` caps the BFS depth.  With ``ample_bound`` set, classes
    whose pairing with ``ample`` exceeds it are dropped (and not expanded).
    """
    gens = list((generators or GENERATORS).values()) if isinstance(generators or GENERATORS, dict) else list(generators)
    moves = []
    for M in gens:
        for N in (M, inverse_isometry(M)):
            if N not in moves:
                moves.append(N)
    seen = {D4}
    frontier = [D4]
    for _ in range(word_length):
        nxt = []
        for v in frontier:
            for M in moves:
                w = apply(M, v)
                if w in seen:
                    continue
                if ample_bound is not None and pair(w, ample) > ample_bound:
                    continue
                seen.add(w)
                nxt.append(w)
        frontier = sorted(nxt)
    return sorted(seen)


CM_STEP: Matrix = matmul(matmul(matmul(T2, T4), T3), T4)


def cm_class(m: int) -> Vector:
    """``(T2 T4 T3 T4)^m D4``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return apply(matpow(CM_STEP, m), D4)


def hyperbolic_distance(A, B, D: Vector = AMPLE) -> Fraction:
    """Squared hyperbolic cosh between the rays of ``A`` and ``B``: (A.B)^2 / ((A.A)(B.B)).

    Returned squared so the value stays rational.
    """
    aa, bb = pair(A, A), pair(B, B)
    if aa <= 0 or bb <= 0:
        raise LatticeError("classes must have positive self-intersection")
    if pair(A, D) <= 0 or pair(B, D) <= 0:
        raise LatticeError("classes must lie on the sheet containing D")
    ab = pair(A, B)
    return Fraction(ab * ab, aa * bb)


def reflection(a) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of ``x -> x - 2 (a.x)/(a.a) a``."""
    aa = pair(a, a)
    if aa == 0:
        raise LatticeError(f"{tuple(a)} is isotropic")
    cols = []
    for e in (D1, D2, D3, D4):
        s = Fraction(2 * pair(a, e), aa)
        cols.append([Fraction(e[i]) - s * a[i] for i in range(4)])
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def integral(M) -> Matrix | None:
    if all(Fraction(x).denominator == 1 for row in M for x in row):
        return tuple(tuple(int(x) for x in row) for row in M)
    return None


# ---- reflections commuting with sigma_4 -----------------------------------

def _content_normalize(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    coeffs = list(num.terms.values()) + list(den.terms.values())
    g = Fraction(0)
    for c in coeffs:
        g = Fraction(gcd(g.numerator * c.denominator, c.numerator * g.denominator), g.denominator * c.denominator)
    lead = den.terms[max(den.terms)]
    g = g if lead > 0 else -g
    return num * (1 / g), den * (1 / g)


@dataclass
class KCandidate:
    k: int
    discriminant: int
    is_square: bool
    directions: list[tuple[int, int]]
    normals: list[Vector]
    integral_reflections: list[Matrix]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "discriminant": self.discriminant,
            "is_square": self.is_square,
            "a2_a3": [list(d) for d in self.directions],
            "normals": [list(a) for a in self.normals],
            "integral_reflections": [[x for row in M for x in row] for M in self.integral_reflections],
        }


@dataclass
class ReflectionReport:
    normal_family: tuple[MultiPoly, ...]
    numerator: MultiPoly
    denominator: MultiPoly
    quadratic: tuple[UniPoly, UniPoly, UniPoly]
    discriminant: UniPoly
    candidates: list[KCandidate] = field(default_factory=list)

    @property
    def k_values(self) -> list[int]:
        return [c.k for c in self.candidates]

    @property
    def reflections(self) -> list[Matrix]:
        out = []
        for c in self.candidates:
            for M in c.integral_reflections:
                if M not in out:
                    out.append(M)
        return sorted(out)

    def named_reflections(self) -> list[str]:
        names = {U: "U", matmul(T4, U): "T4U"}
        return sorted(names.get(M, "?") for M in self.reflections)

    def to_json(self) -> dict:
        return {
            "normal": [str(p) for p in self.normal_family],
            "second_component": {"numerator": str(self.numerator), "denominator": str(self.denominator)},
            "quadratic_in_t": [q.format("k") for q in self.quadratic],
            "discriminant": self.discriminant.format("k"),
            "candidates": [c.to_json() for c in self.candidates],
            "reflections": self.named_reflections(),
        }


def _primitive(v) -> Vector:
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    return tuple(-x for x in ints) if first < 0 else tuple(ints)


def classify_sigma4_reflections() -> ReflectionReport:
    """Find every reflection fixing D1 and D4 that is an integral lattice isometry.

    The second coordinate of ``R_a(D2)`` must be an integer ``k``; this gives
    a quadratic in ``t = a2/a3`` whose rational roots are the only possible
    normals.  Each surviving normal is then checked for integrality.
    """
    names = ("a2", "a3")
    a2, a3 = MultiPoly.var(0, names), MultiPoly.var(1, names)
    # a.D1 = 0 and a.D4 = 0
    a4 = -2 * a2 - 2 * a3
    a1 = 2 * a4
    a = (a1, a2, a3, a4)
    aa = pair(a, a)
    aD2 = pair(a, D2)
    num, den = _content_normalize(aa - 2 * aD2 * a2, aa)

    # num(t, 1) - k * den(t, 1) = A t^2 + B t + C with A, B, C in Q[k]
    def t_coeffs(p: MultiPoly):
        return [p.terms.get((i, 2 - i), Fraction(0)) for i in range(3)]

    nc, dc = t_coeffs(num), t_coeffs(den)
    C, B, A = (UniPoly([n, -d], QQ) for n, d in zip(nc, dc))
    if A.lc < 0 if A else B.lc < 0:
        A, B, C = -A, -B, -C
    disc = B * B - 4 * A * C
    if disc.degree != 2 or disc.lc >= 0:
        raise LatticeError("discriminant in k is not a downward parabola")

    # integers k with disc(k) >= 0 form an interval around the vertex
    centre = int(-disc.coeff(1) / (2 * disc.coeff(2)))
    lo = centre
    while disc(lo - 1) >= 0:
        lo -= 1
    hi = centre
    while disc(hi + 1) >= 0:
        hi += 1
    report = ReflectionReport(a, num, den, (A, B, C), disc)
    for k in range(lo, hi + 1):
        if disc(k) < 0:
            continue
        dk = disc(k)
        square = dk.denominator == 1 and isqrt(dk.numerator) ** 2 == dk.numerator
        Ak, Bk, Ck = A(k), B(k), C(k)
        dirs: list[tuple[int, int]] = []
        if Ak == 0:
            dirs.append((1, 0))  # root at t = infinity, i.e. a3 = 0
        q = UniPoly([Ck, Bk, Ak], QQ)
        if q:
            for t in rational_roots(q):
                dirs.append((t.numerator, t.denominator))
        normals, refl = [], []
        for x2, x3 in dirs:
            vec = _primitive([p.evaluate((x2, x3)) for p in a])
            normals.append(vec)
            M = integral(reflection(vec))
            if M is not None and is_isometry(M):
                refl.append(M)
        report.candidates.append(KCandidate(k, int(dk), square, dirs, normals, refl))
    return report


# ---- divisors on P1 x P1 x P1 ----------------------------------------------

@dataclass(frozen=True)
class AmbientClass:
    """Integer combination of curve classes ``B_i`` or surface classes ``B_i'``.

    Coefficients are univariate polynomials in a symbolic unknown ``t`` so
    the final pairing can be checked to be independent of it.
    """

    kind: str  # "curve" or "surface"
    coeffs: tuple[UniPoly, UniPoly, UniPoly]

    @classmethod
    def of(cls, kind: str, *coeffs) -> "AmbientClass":
        if kind not in ("curve", "surface"):
            raise ValueError(kind)
        return cls(kind, tuple(c if isinstance(c, UniPoly) else UniPoly([c], QQ) for c in coeffs))

    def __add__(self, other: "AmbientClass") -> "AmbientClass":
        if self.kind != other.kind:
            raise TypeError("cannot add curve and surface classes")
        return AmbientClass(self.kind, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AmbientClass(self.kind, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """surface . surface -> curve; curve . surface -> number (in Q[t])."""
        if not isinstance(other, AmbientClass):
            return AmbientClass(self.kind, tuple(c * other for c in self.coeffs))
        if self.kind == "surface" and other.kind == "surface":
            out = [UniPoly([], QQ)] * 3
            for i in range(3):
                for j in range(3):
                    if i != j:
                        k = 3 - i - j
                        out[k] = out[k] + self.coeffs[i] * other.coeffs[j]
            return AmbientClass("curve", tuple(out))
        if {self.kind, other.kind} == {"curve", "surface"}:
            return sum((a * b for a, b in zip(self.coeffs, other.coeffs)), UniPoly([], QQ))
        raise TypeError("curve classes do not intersect in a threefold")

    __rmul__ = __mul__

    def __str__(self):
        mark = "'" if self.kind == "surface" else ""
        parts = [f"({c.format('t')})*B{i + 1}{mark}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) or "0"


def B(i: int) -> AmbientClass:
    c = [0, 0, 0]
    c[i - 1] = 1
    return AmbientClass.of("curve", *c)


def Bp(i: int) -> AmbientClass:
    c = [0, 0, 0]
    c[i - 1] = 1
    return AmbientClass.of("surface", *c)


@dataclass
class AmbientReport:
    r: int
    X: AmbientClass
    Y: AmbientClass
    XY: AmbientClass
    D2: AmbientClass
    L: AmbientClass
    M: AmbientClass
    value: UniPoly

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "X_dot_Y": str(self.XY),
            "D2": str(self.D2),
            "L": str(self.L),
            "M": str(self.M),
            "M_dot_(B2'-B3')": self.value.format("t"),
        }


def ambient_report(r: int) -> AmbientReport:
    if r < 0:
        raise ValueError("r must be non-negative")
    X = 2 * Bp(1) + 2 * Bp(2) + 2 * Bp(3)
    Y = r * Bp(1) + Bp(2) + Bp(3)
    XY = X * Y
    # X.Y = L + M + D4 + (D2 - D4), and D4 + (D2 - D4) is the fiber X.B2'
    D2 = X * Bp(2)
    t = UniPoly([0, 1], QQ)
    L = AmbientClass.of("curve", 1, t, t)
    M = XY - D2 - L
    value = M * (Bp(2) - Bp(3))
    return AmbientReport(r, X, Y, XY, D2, L, M, value)


def ambient_pairing_check(r: int) -> int:
    """``[M].(B2' - B3')`` for the (r,1,1) form; raises if it depends on t."""
    value = ambient_report(r).value
    if value.degree > 0:
        raise LatticeError(f"pairing depends on t: {value.format('t')}")
    return int(value.coeff(0))


def sigma4_pairing(M: Matrix) -> int:
    """``M(D2 - D4) . (D2 - D3)``; 2 for T4 and -2 for U T4."""
    return pair(apply(M, (0, 1, 0, -1)), (0, 1, -1, 0))
