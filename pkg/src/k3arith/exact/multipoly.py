"""Sparse multivariate polynomials with rational coefficients.

Terms are a dict from exponent tuples to nonzero Fractions.  The default
variables are ``(x, y, z)``, matching (2,2,2) forms.
"""
from __future__ import annotations

from fractions import Fraction

from .fields import QQ, fraction_str, parse_fraction
from .poly import UniPoly

XYZ = ("x", "y", "z")


class MultiPoly:
    __slots__ = ("terms", "names")

    def __init__(self, terms=None, names=XYZ):
        self.names = tuple(names)
        n = len(self.names)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match {n} variables")
            c = QQ(c)
            if c != 0:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean

    @classmethod
    def var(cls, i: int, names=XYZ) -> "MultiPoly":
        exp = [0] * len(names)
        exp[i] = 1
        return cls({tuple(exp): 1}, names)

    @classmethod
    def constant(cls, c, names=XYZ) -> "MultiPoly":
        return cls({(0,) * len(names): c}, names)

    def one_like(self) -> "MultiPoly":
        return MultiPoly.constant(1, self.names)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.names != self.names:
                raise ValueError("polynomials in different variables")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.names)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(terms, self.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.names)

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
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(terms, self.names)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self.one_like()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def leading(self):
        """Lexicographically largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient when ``other`` divides ``self`` exactly (lex-order division)."""
        o = self._lift(other)
        if not o:
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = o.leading()
        rem = self
        quo: dict = {}
        while rem:
            e, c = rem.leading()
            shift = tuple(a - b for a, b in zip(e, le))
            if min(shift) < 0:
                raise ArithmeticError("multivariate division is not exact")
            q = c / lc
            quo[shift] = q
            rem = rem - MultiPoly({shift: q}, self.names) * o
        return MultiPoly(quo, self.names)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def diff(self, i: int) -> "MultiPoly":
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                terms[tuple(ne)] = c * e[i]
        return MultiPoly(terms, self.names)

    def coeffs_in(self, i: int) -> list["MultiPoly"]:
        """Ascending coefficients as a polynomial in variable ``i``."""
        out = [dict() for _ in range(self.degree_in(i) + 1)]
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            out[k][tuple(ne)] = c
        return [MultiPoly(t, self.names) for t in out]

    def subs(self, i: int, value) -> "MultiPoly":
        """Substitute a rational value for variable ``i``."""
        terms: dict = {}
        value = QQ(value)
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            ne = tuple(ne)
            terms[ne] = terms.get(ne, 0) + c * value**k
        return MultiPoly(terms, self.names)

    def evaluate(self, point):
        """Evaluate at a point whose coordinates lie in any exact field."""
        total = None
        for e, c in self.terms.items():
            term = None
            for v, k in zip(point, e):
                if k:
                    term = v**k if term is None else term * v**k
            term = c if term is None else term * c
            total = term if total is None else total + term
        if total is None:
            return 0
        return total

    def to_unipoly(self, i: int, field=QQ) -> UniPoly:
        """View as univariate in variable ``i``; other variables must be absent."""
        coeffs: dict[int, Fraction] = {}
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError(f"polynomial involves variables other than {self.names[i]}")
            coeffs[e[i]] = c
        n = max(coeffs, default=-1)
        return UniPoly([coeffs.get(k, 0) for k in range(n + 1)], QQ).to_field(field)

    @classmethod
    def from_unipoly(cls, f: UniPoly, i: int, names=XYZ) -> "MultiPoly":
        terms = {}
        for k, c in enumerate(f.coeffs):
            e = [0] * len(names)
            e[i] = k
            terms[tuple(e)] = c
        return cls(terms, names)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k
            )
            cs = fraction_str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"

    def to_json(self) -> list:
        return [[*e, fraction_str(c)] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data, names=XYZ) -> "MultiPoly":
        n = len(names)
        return cls({tuple(int(v) for v in row[:n]): parse_fraction(row[n]) for row in data}, names)
