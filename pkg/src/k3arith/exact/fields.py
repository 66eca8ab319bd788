"""Scalar fields: the rationals and prime fields.

Rationals are plain :class:`fractions.Fraction` values (always reduced, with a
positive denominator).  Prime-field elements are :class:`Fp` instances bound to
a :class:`PrimeField`.  Number fields live in :mod:`k3arith.exact.numberfield`.

Every field object is callable and coerces ints/Fractions (and its own
elements) into the field, so generic code can write ``K(3)`` or ``K.one``.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction
from numbers import Rational


class FieldMismatchError(TypeError):
    """Raised when elements of two different fields are combined."""


def is_prime(n: int) -> bool:
    """Deterministic trial division; every prime used here is small."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_below(n: int) -> list[int]:
    return [q for q in range(2, n) if is_prime(q)]


def parse_fraction(text) -> Fraction:
    """Parse ``"a/b"``, ``"a"`` or an int into a Fraction.  Floats are refused."""
    if isinstance(text, float):
        raise TypeError("floating point values are not exact")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text).strip())


def fraction_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class RationalField:
    """The field of rational numbers; elements are ``Fraction``."""

    characteristic = 0
    degree = 1
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        if isinstance(value, str):
            return parse_fraction(value)
        raise FieldMismatchError(f"cannot coerce {value!r} into QQ")

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (_qq, ())


def _qq():
    return QQ


QQ = RationalField()


class PrimeField:
    """The prime field GF(p).  Use :func:`GF` to get the cached instance."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.degree = 1
        self.zero = Fp(0, self)
        self.one = Fp(1, self)

    def __call__(self, value) -> "Fp":
        if isinstance(value, Fp):
            if value.field is not self:
                raise FieldMismatchError(f"element of GF({value.field.p}) used in GF({self.p})")
            return value
        if isinstance(value, int):
            return Fp(value % self.p, self)
        if isinstance(value, str):
            value = parse_fraction(value)
        if isinstance(value, Rational):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return Fp(value.numerator * pow(den, -1, self.p) % self.p, self)
        raise FieldMismatchError(f"cannot coerce {value!r} into GF({self.p})")

    def elements(self):
        return [Fp(a, self) for a in range(self.p)]

    def __repr__(self):
        return f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p,))


@functools.cache
def GF(p: int) -> PrimeField:
    return PrimeField(p)


class Fp:
    """An element of GF(p), stored as its reduced residue."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value
        self.field = field

    def _other(self, other):
        if isinstance(other, Fp):
            if other.field is not self.field:
                raise FieldMismatchError(f"GF({self.field.p}) vs GF({other.field.p})")
            return other.value
        if isinstance(other, (int, Rational)):
            return self.field(other).value
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp((self.value + o) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp((self.value - o) % self.field.p, self.field)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp((o - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(self.value * o % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value % self.field.p, self.field)

    def __pos__(self):
        return self

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.field.p})")
        return Fp(pow(self.value, -1, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * Fp(o, self.field).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(o, self.field) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.value, n, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.field is other.field and self.value == other.value
        if isinstance(other, (int, Rational)):
            try:
                return self.value == self.field(other).value
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.field.p}"

    def __str__(self):
        return str(self.value)


def is_square_mod_p(a: Fp) -> bool:
    """Euler's criterion; zero counts as a square."""
    p = a.field.p
    if p == 2:
        raise ValueError("Euler's criterion needs an odd prime")
    if a.value == 0:
        return True
    return pow(a.value, (p - 1) // 2, p) == 1


def field_of(value):
    """The field an exact scalar belongs to."""
    if isinstance(value, (int, Fraction)):
        return QQ
    field = getattr(value, "field", None)
    if field is None:
        raise FieldMismatchError(f"{value!r} is not an exact scalar")
    return field


def common_field(*values):
    """The single field shared by ``values``; ints and Fractions fit anywhere."""
    found = QQ
    for v in values:
        if isinstance(v, (int, Fraction)):
            continue
        f = field_of(v)
        if found is QQ:
            found = f
        elif f is not found and f != found:
            raise FieldMismatchError(f"mixed fields {found!r} and {f!r}")
    return found
