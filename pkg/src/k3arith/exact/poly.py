"""Dense univariate polynomials over an exact field.

Coefficients are stored in ascending order; the zero polynomial has an empty
coefficient tuple and degree ``ZERO_DEGREE`` (-1).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .fields import QQ, FieldMismatchError, common_field, fraction_str, parse_fraction

ZERO_DEGREE = -1


class UniPoly:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs=(), field=None):
        coeffs = list(coeffs)
        if field is None:
            field = common_field(*coeffs)
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    @classmethod
    def gen(cls, field=QQ) -> "UniPoly":
        return cls([0, 1], field)

    @classmethod
    def constant(cls, c, field=None) -> "UniPoly":
        return cls([c], field)

    @classmethod
    def from_roots(cls, roots, field=None) -> "UniPoly":
        field = field or common_field(*roots)
        out = cls([1], field)
        for r in roots:
            out = out * cls([-field(r), 1], field)
        return out

    # ---- basic structure -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _lift(self, other) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other
        try:
            return UniPoly([self.field(other)], self.field)
        except FieldMismatchError:
            return None

    # ---- ring operations -------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self.coeff(i) + o.coeff(i) for i in range(n)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly([], self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([1], self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return UniPoly([], self.field), self
        inv_lc = self.field.one / o.lc
        quo = [self.field.zero] * (dq + 1)
        od = o.degree
        for k in range(dq, -1, -1):
            c = rem[k + od] * inv_lc
            quo[k] = c
            if c == 0:
                continue
            for j in range(od + 1):
                rem[k + j] = rem[k + j] - c * o.coeffs[j]
        return UniPoly(quo, self.field), UniPoly(rem[:od], self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __truediv__(self, other):
        if isinstance(other, UniPoly):
            return self.exact_div(other)
        c = self.field(other)
        return UniPoly([a / c for a in self.coeffs], self.field)

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.field.zero if not isinstance(x, UniPoly) else UniPoly([], x.field)
        if isinstance(x, UniPoly) and not isinstance(acc, UniPoly):
            acc = UniPoly([acc], x.field)
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.field)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self / self.lc

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``t**k``."""
        return UniPoly([0] * k + list(self.coeffs), self.field)

    def map(self, func, field) -> "UniPoly":
        return UniPoly([func(c) for c in self.coeffs], field)

    def to_field(self, field) -> "UniPoly":
        """Reduce/coerce coefficients into ``field`` (e.g. ``GF(13)``)."""
        return UniPoly([field(c) for c in self.coeffs], field)

    # ---- comparison and display -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and (self.field is other.field or self.field == other.field)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            cs = str(c)
            if mono and cs == "1":
                term = mono
            elif mono and cs == "-1":
                term = "-" + mono
            elif mono:
                term = f"({cs})*{mono}" if ("/" in cs or " " in cs) else f"{cs}*{mono}"
            else:
                term = cs
            terms.append(term)
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"UniPoly({self.format()}, {self.field!r})"

    def to_json(self) -> list[str]:
        return [fraction_str(c) if isinstance(c, Fraction) else str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data, field=QQ) -> "UniPoly":
        return cls([parse_fraction(c) for c in data], QQ).to_field(field)


# ---- Euclidean machinery ---------------------------------------------------

def _check_same_field(a: UniPoly, b: UniPoly):
    if a.field is not b.field and a.field != b.field:
        raise FieldMismatchError(f"polynomials over {a.field!r} and {b.field!r}")


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd; ``gcd(f, 0) == monic(f)`` and ``gcd(0, 0) == 0``."""
    _check_same_field(a, b)
    if a.field is QQ and a and b:
        return UniPoly(_int_gcd(clear_denominators(a), clear_denominators(b)), QQ).monic()
    while b:
        a, b = b, a % b
    return a.monic()


def _int_content(cs: list[int]) -> int:
    g = 0
    for c in cs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (ascending)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for j, c in enumerate(b):
            a[shift + j] -= la * c
        while a and a[-1] == 0:
            a.pop()
    return a


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of integer polynomials via a primitive remainder sequence."""
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        if r:
            c = _int_content(r)
            r = [v // c for v in r]
        a, b = b, r
    c = _int_content(a)
    a = [v // c for v in a]
    return a if a[-1] > 0 else [-v for v in a]


def poly_xgcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    _check_same_field(a, b)
    K = a.field
    r0, r1 = a, b
    s0, s1 = UniPoly([1], K), UniPoly([], K)
    t0, t1 = UniPoly([], K), UniPoly([1], K)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = K.one / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def inverse_mod(a: UniPoly, m: UniPoly) -> UniPoly:
    g, s, _ = poly_xgcd(a % m, m)
    if g.degree != 0:
        raise ZeroDivisionError("polynomial is not invertible modulo the given modulus")
    return s % m


def powmod(base: UniPoly, e: int, m: UniPoly) -> UniPoly:
    result = UniPoly([1], base.field) % m
    base = base % m
    while e:
        if e & 1:
            result = (result * base) % m
        base = (base * base) % m
        e >>= 1
    return result


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm, characteristic zero: ``monic(f) = prod a_i**i``."""
    if f.field.characteristic != 0:
        raise ValueError("use the mod-p squarefree decomposition for prime fields")
    if f.degree <= 0:
        return []
    f = f.monic()
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(f: UniPoly) -> UniPoly:
    if f.field.characteristic != 0:
        return f // poly_gcd(f, f.derivative()) if f.derivative() else f
    out = UniPoly([1], f.field)
    for a, _ in squarefree_decomposition(f):
        out = out * a
    return out


def is_squarefree(f: UniPoly) -> bool:
    return poly_gcd(f, f.derivative()).degree == 0


def clear_denominators(f: UniPoly) -> list[int]:
    """Integer coefficient list of a primitive integer multiple of ``f``."""
    if not f.coeffs:
        return []
    den = 1
    for c in f.coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def primitive_part(f: UniPoly) -> UniPoly:
    """Primitive integer polynomial with positive leading coefficient."""
    return UniPoly(clear_denominators(f), QQ)


def proportional(a: UniPoly, b: UniPoly) -> bool:
    """True iff ``a = c*b`` for some nonzero scalar ``c``."""
    if not a or not b:
        return not a and not b
    return a.monic() == b.monic()
