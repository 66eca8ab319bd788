"""Number fields QQ[t]/(m(t)) for an irreducible rational polynomial m."""
from __future__ import annotations

import functools
from fractions import Fraction
from numbers import Rational

from .factor import IrreducibilityResult, certify_irreducible_over_Q
from .fields import QQ, FieldMismatchError, fraction_str, primes_below
from .poly import UniPoly, poly_xgcd

DEFAULT_CERT_PRIMES = tuple(primes_below(100))


class ReducibleModulusError(ValueError):
    pass


class NumberField:
    """QQ[t]/(modulus).  Construct through :func:`number_field` to share the cache."""

    def __init__(self, modulus: UniPoly, primes=DEFAULT_CERT_PRIMES, name: str = "zeta"):
        if modulus.field is not QQ:
            raise TypeError("number field moduli must be rational polynomials")
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        self.modulus = modulus.monic()
        self.name = name
        self.certificate: IrreducibilityResult = certify_irreducible_over_Q(self.modulus, primes)
        if not self.certificate.irreducible:
            raise ReducibleModulusError(
                f"cannot use {self.modulus} as a modulus: {self.certificate.status}"
            )
        self.degree = self.modulus.degree
        self.characteristic = 0
        self.zero = NFElement((Fraction(0),) * self.degree, self)
        self.one = NFElement((Fraction(1),) + (Fraction(0),) * (self.degree - 1), self)

    @property
    def gen(self) -> "NFElement":
        return self.from_poly(UniPoly.gen(QQ))

    def from_poly(self, f: UniPoly) -> "NFElement":
        r = f % self.modulus
        cs = list(r.coeffs) + [Fraction(0)] * (self.degree - len(r.coeffs))
        return NFElement(tuple(cs), self)

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.field is not self and value.field != self:
                raise FieldMismatchError("element of a different number field")
            return value
        if isinstance(value, UniPoly):
            return self.from_poly(value)
        if isinstance(value, (int, Rational, str)):
            return NFElement((QQ(value),) + (Fraction(0),) * (self.degree - 1), self)
        raise FieldMismatchError(f"cannot coerce {value!r} into {self!r}")

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus.coeffs == other.modulus.coeffs

    def __hash__(self):
        return hash(("nf", self.modulus.coeffs))

    def __repr__(self):
        return f"QQ[{self.name}]/({self.modulus.format(self.name)})"


@functools.lru_cache(maxsize=None)
def _cached_field(coeffs: tuple, primes: tuple, name: str) -> NumberField:
    return NumberField(UniPoly(coeffs, QQ), primes, name)


def number_field(modulus: UniPoly, primes=DEFAULT_CERT_PRIMES, name: str = "zeta") -> NumberField:
    """Cached constructor: the irreducibility certificate is computed once per modulus."""
    return _cached_field(modulus.monic().coeffs, tuple(primes), name)


class NFElement:
    """An element of a number field, as the coefficient vector of its reduced representative."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: tuple, field: NumberField):
        self.coeffs = coeffs
        self.field = field

    def poly(self) -> UniPoly:
        return UniPoly(self.coeffs, QQ)

    def _other(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError("elements of different number fields")
            return other
        if isinstance(other, (int, Rational)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NFElement(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), self.field)

    __radd__ = __add__

    def __neg__(self):
        return NFElement(tuple(-a for a in self.coeffs), self.field)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NFElement(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)), self.field)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not any(o.coeffs[1:]):
            c = o.coeffs[0]
            return NFElement(tuple(a * c for a in self.coeffs), self.field)
        return self.field.from_poly(self.poly() * o.poly())

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self:
            raise ZeroDivisionError("division by zero in a number field")
        g, s, _ = poly_xgcd(self.poly(), self.field.modulus)
        if g.degree != 0:
            raise ArithmeticError("representative shares a factor with the modulus; field invariant broken")
        return self.field.from_poly(s)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def format(self) -> str:
        return self.poly().format(self.field.name)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"NFElement({self.format()})"

    def to_json(self) -> dict:
        return {"nf": [fraction_str(c) for c in self.coeffs]}
