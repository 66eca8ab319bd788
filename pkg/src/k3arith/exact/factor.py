"""Factorization mod p and irreducibility certificates over QQ.

Mod-p factorization is the classical pipeline: squarefree decomposition,
distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting with
a seedable random source.  Over QQ we stop at what a
mod-p certificate needs: degree patterns at several primes, rational roots, and an
exhaustive bounded search for factors of polynomials of degree at most 4.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .fields import GF, QQ, PrimeField, is_prime, primes_below
from .poly import (
    UniPoly,
    clear_denominators,
    is_squarefree,
    poly_gcd,
    powmod,
)


class BadPrimeError(ValueError):
    """The prime divides a denominator or the leading coefficient."""


def _require_prime_field(f: UniPoly) -> PrimeField:
    if not isinstance(f.field, PrimeField):
        raise TypeError(f"expected a polynomial over a prime field, got {f.field!r}")
    return f.field


def _pth_root(f: UniPoly) -> UniPoly:
    p = f.field.p
    return UniPoly([f.coeffs[i] for i in range(0, len(f.coeffs), p)], f.field)


def squarefree_decomposition_mod_p(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """``monic(f) = prod g**m`` with each ``g`` squarefree, over GF(p)."""
    K = _require_prime_field(f)
    p = K.p
    if f.degree <= 0:
        return []
    f = f.monic()
    out: list[tuple[UniPoly, int]] = []
    fp = f.derivative()
    if not fp:
        return [(g, m * p) for g, m in squarefree_decomposition_mod_p(_pth_root(f))]
    c = poly_gcd(f, fp)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        out.extend((g, m * p) for g, m in squarefree_decomposition_mod_p(_pth_root(c)))
    return out


def distinct_degree_factorization(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Split a monic squarefree ``f`` into products of same-degree irreducibles."""
    K = f.field
    t = UniPoly.gen(K)
    out = []
    h = t
    i = 1
    rest = f
    while rest.degree >= 2 * i:
        h = powmod(h, K.p, rest)
        g = poly_gcd(rest, h - t)
        if g.degree > 0:
            out.append((g, i))
            rest = rest // g
            h = h % rest
        i += 1
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def equal_degree_factorization(f: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    """Cantor-Zassenhaus: split ``f`` (product of degree-``d`` irreducibles)."""
    if f.degree == d:
        return [f]
    K = f.field
    p = K.p
    n = f.degree
    while True:
        a = UniPoly([rng.randrange(p) for _ in range(n)], K)
        if a.degree < 1:
            continue
        if p == 2:
            b = a
            acc = a
            for _ in range(d - 1):
                acc = powmod(acc, 2, f)
                b = b + acc
        else:
            b = powmod(a, (p**d - 1) // 2, f) - 1
        g = poly_gcd(f, b)
        if 0 < g.degree < n:
            return equal_degree_factorization(g, d, rng) + equal_degree_factorization(f // g, d, rng)


def factor_mod_p(f: UniPoly, seed: int = 0) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors of ``f`` over GF(p) with multiplicities.

    ``f == f.lc * prod(g**m)``.  Output is sorted by (degree, coefficients) so
    the result does not depend on the random splitting order.
    """
    _require_prime_field(f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = []
    for g, m in squarefree_decomposition_mod_p(f):
        for block, d in distinct_degree_factorization(g):
            out.extend((h, m) for h in equal_degree_factorization(block, d, rng))
    out.sort(key=lambda fm: (fm[0].degree, [c.value for c in reversed(fm[0].coeffs)], fm[1]))
    return out


@dataclass(frozen=True)
class FactorPattern:
    """Degrees of the irreducible factors mod ``p``: one (degree, multiplicity) per factor."""

    p: int
    factors: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return sum(d * m for d, m in self.factors)

    def degrees(self) -> list[int]:
        """Factor degrees expanded by multiplicity."""
        return sorted(d for d, m in self.factors for _ in range(m))

    def has_linear_factor(self) -> bool:
        return any(d == 1 for d, _ in self.factors)

    def __str__(self):
        parts = [f"{d}" if m == 1 else f"{d}^{m}" for d, m in self.factors]
        return "{" + ", ".join(parts) + "}" + f" mod {self.p}"

    def to_json(self) -> dict:
        return {"p": self.p, "factors": [list(dm) for dm in self.factors]}


def reduce_mod_p(f: UniPoly, p: int) -> UniPoly:
    """Reduce a rational polynomial mod ``p``, refusing bad primes."""
    if f.field is not QQ:
        raise TypeError("expected a polynomial over QQ")
    K = GF(p)
    try:
        g = f.to_field(K)
    except ZeroDivisionError as exc:
        raise BadPrimeError(f"a denominator of the polynomial vanishes mod {p}") from exc
    if g.degree != f.degree:
        raise BadPrimeError(f"leading coefficient vanishes mod {p}")
    return g


def degree_pattern(f: UniPoly, p: int, seed: int = 0) -> FactorPattern:
    fp = reduce_mod_p(f, p)
    factors = tuple(sorted((g.degree, m) for g, m in factor_mod_p(fp, seed)))
    return FactorPattern(p, factors)


# ---- over QQ -------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(f: UniPoly) -> list[Fraction]:
    """All rational roots of ``f`` with multiplicity, in ascending order."""
    if f.field is not QQ:
        raise TypeError("expected a polynomial over QQ")
    if not f:
        raise ValueError("the zero polynomial has every rational root")
    roots: list[Fraction] = []
    g = f
    while g.degree > 0 and g.coeff(0) == 0:
        roots.append(Fraction(0))
        g = UniPoly(g.coeffs[1:], QQ)
    if g.degree <= 0:
        return roots
    ints = clear_denominators(g)
    candidates = set()
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    for r in sorted(candidates):
        lin = UniPoly([-r, 1], QQ)
        while g.degree > 0 and g(r) == 0:
            roots.append(r)
            g = g // lin
    return sorted(roots)


def _integer_poly(ints) -> UniPoly:
    return UniPoly(ints, QQ)


def _quadratic_factors(ints: list[int]) -> list[UniPoly]:
    """Integer quadratic factors of a primitive integer polynomial (degree 4).

    Exhaustive under the Mignotte bound ``||g||_1 <= 2**deg(g) * ||f||_2``; the
    middle coefficient is pinned by the divisors of ``f(1)`` (or ``f(-1)``/``f(2)``).
    """
    f = _integer_poly(ints)
    norm2 = math.isqrt(sum(c * c for c in ints)) + 1
    bound = 4 * norm2
    for point in (1, -1, 2, -2, 3):
        value = f(point)
        if value != 0:
            break
    else:
        raise AssertionError("a quartic cannot vanish at five points without being zero")
    value = int(value)
    found = []
    for a in _divisors(ints[-1]):
        for c0 in _divisors(ints[0]):
            for c in (c0, -c0):
                for v in _divisors(value):
                    for target in (v, -v):
                        # g(point) = a*point^2 + b*point + c = target
                        num = target - a * point * point - c
                        if num % point:
                            continue
                        b = num // point
                        if abs(a) + abs(b) + abs(c) > bound:
                            continue
                        g = _integer_poly([c, b, a])
                        if not (f % g):
                            found.append(g)
    return found


def factor_small_over_Q(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Complete factorization over QQ for degree <= 4 (monic irreducible factors)."""
    if f.degree > 4:
        raise ValueError("exhaustive factor search is limited to degree <= 4")
    if f.degree <= 0:
        return []
    out: list[tuple[UniPoly, int]] = []
    g = f.monic()
    for r in sorted(set(rational_roots(g))):
        lin = UniPoly([-r, 1], QQ)
        m = 0
        while g.degree > 0 and not (g % lin):
            g = g // lin
            m += 1
        out.append((lin, m))
    if g.degree == 4:
        quads = _quadratic_factors(clear_denominators(g))
        if quads:
            q = quads[0].monic()
            other = (g // q).monic()
            if other == q:
                out.append((q, 2))
            else:
                out.extend([(q, 1), (other, 1)])
            g = UniPoly([1], QQ)
    if g.degree > 0:
        out.append((g.monic(), 1))
    out.sort(key=lambda fm: (fm[0].degree, list(reversed(fm[0].coeffs))))
    return out


def achievable_degree_sets(degrees: list[int]) -> set[tuple[int, ...]]:
    """Degree multisets of QQ-factorizations compatible with one mod-p pattern.

    Every QQ-factor reduces to a product of some of the mod-p factors, so the
    QQ-degrees are the block sums of a set partition of ``degrees``.
    """
    states = {()}
    for d in degrees:
        nxt = set()
        for s in states:
            nxt.add(tuple(sorted(s + (d,))))
            for i in range(len(s)):
                merged = list(s)
                merged[i] += d
                nxt.add(tuple(sorted(merged)))
        states = nxt
    return states


@dataclass
class IrreducibilityResult:
    """Outcome of :func:`certify_irreducible_over_Q`.

    ``status`` is ``"irreducible"``, ``"reducible"`` or ``"inconclusive"``.
    """

    status: str
    degree: int
    patterns: list[FactorPattern] = field(default_factory=list)
    skipped_primes: list[int] = field(default_factory=list)
    candidates: set[tuple[int, ...]] = field(default_factory=set)
    method: str = ""
    factors: list[UniPoly] = field(default_factory=list)

    @property
    def irreducible(self) -> bool:
        return self.status == "irreducible"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "degree": self.degree,
            "method": self.method,
            "patterns": [p.to_json() for p in self.patterns],
            "skipped_primes": self.skipped_primes,
            "candidates": sorted(list(c) for c in self.candidates),
            "factors": [g.to_json() for g in self.factors],
        }


def certify_irreducible_over_Q(f: UniPoly, primes, seed: int = 0) -> IrreducibilityResult:
    """Certify irreducibility over QQ from mod-p degree patterns.

    Falls back to an exhaustive factor search when the patterns are
    inconclusive and ``deg f <= 4``.
    """
    primes = list(primes)
    if not primes:
        raise ValueError("need at least one prime")
    if f.field is not QQ:
        raise TypeError("expected a polynomial over QQ")
    if f.degree < 1:
        raise ValueError("constant polynomials are neither irreducible nor reducible")
    if not is_squarefree(f):
        raise ValueError("input must be squarefree over QQ")
    n = f.degree
    candidates = None
    patterns, skipped = [], []
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        try:
            pat = degree_pattern(f, p, seed)
        except BadPrimeError:
            skipped.append(p)
            continue
        patterns.append(pat)
        sets = achievable_degree_sets(pat.degrees())
        candidates = sets if candidates is None else candidates & sets
        if candidates == {(n,)}:
            return IrreducibilityResult("irreducible", n, patterns, skipped, candidates, "degree patterns")
    if candidates is None:
        candidates = achievable_degree_sets([1] * n) if n <= 24 else set()
    if n <= 4:
        factors = factor_small_over_Q(f)
        if len(factors) == 1 and factors[0][1] == 1:
            return IrreducibilityResult("irreducible", n, patterns, skipped, {(n,)}, "exhaustive factor search")
        return IrreducibilityResult(
            "reducible", n, patterns, skipped, candidates, "exhaustive factor search",
            [g for g, m in factors for _ in range(m)],
        )
    return IrreducibilityResult("inconclusive", n, patterns, skipped, candidates, "degree patterns")


def find_irreducible_prime(f: UniPoly, limit: int = 100) -> int | None:
    """Smallest good prime below ``limit`` where ``f`` stays irreducible."""
    for p in primes_below(limit):
        try:
            pat = degree_pattern(f, p)
        except BadPrimeError:
            continue
        if pat.factors == ((f.degree, 1),):
            return p
    return None


def roots_mod_p(f: UniPoly) -> list:
    """Distinct roots in GF(p) by exhaustive evaluation (small p only)."""
    K = _require_prime_field(f)
    return [a for a in K.elements() if f(a) == 0]


__all__ = [
    "BadPrimeError",
    "FactorPattern",
    "IrreducibilityResult",
    "achievable_degree_sets",
    "certify_irreducible_over_Q",
    "degree_pattern",
    "distinct_degree_factorization",
    "equal_degree_factorization",
    "factor_mod_p",
    "factor_small_over_Q",
    "find_irreducible_prime",
    "rational_roots",
    "reduce_mod_p",
    "roots_mod_p",
    "squarefree_decomposition_mod_p",
]
