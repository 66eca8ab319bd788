"""Sylvester matrices, resultants and first subresultants.

Polynomials are given either as :class:`UniPoly` (over a field) or as plain
ascending coefficient sequences over any integral domain with exact division
(e.g. a list of ``UniPoly`` in another variable, or of ``MultiPoly``).
"""
from __future__ import annotations

from .linalg import det_bareiss
from .poly import UniPoly


def _coeff_list(a):
    if isinstance(a, UniPoly):
        return list(a.coeffs), a.field.zero, a.field.one
    cs = list(a)
    while cs and cs[-1] == 0:
        cs.pop()
    zero = one = None
    for c in cs:
        if c != 0:
            zero, one = c * 0, _one_like(c)
            break
    return cs, zero, one


def _one_like(c):
    if isinstance(c, int):
        return 1
    if hasattr(c, "one_like"):
        return c.one_like()
    if isinstance(c, UniPoly):
        return UniPoly([1], c.field)
    return c / c


def sylvester_matrix(a, b):
    """Sylvester matrix of ``a`` (deg m) and ``b`` (deg n), descending powers."""
    ca, zero, _ = _coeff_list(a)
    cb, zb, _ = _coeff_list(b)
    zero = zero if zero is not None else zb
    m, n = len(ca) - 1, len(cb) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(ca)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(cb)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(a, b):
    """Res(a, b) as the determinant of the Sylvester matrix."""
    ca, za, oa = _coeff_list(a)
    cb, zb, ob = _coeff_list(b)
    if not ca and not cb:
        raise ValueError("resultant of two zero polynomials is undefined")
    zero = za if za is not None else zb
    one = oa if oa is not None else ob
    if not ca or not cb:
        return zero
    m, n = len(ca) - 1, len(cb) - 1
    if m == 0 and n == 0:
        return one
    if m == 0:
        return _pow(ca[0], n, one)
    if n == 0:
        return _pow(cb[0], m, one)
    return det_bareiss(sylvester_matrix(ca, cb), zero, one)


def _pow(c, e, one):
    out = one
    for _ in range(e):
        out = out * c
    return out


def first_subresultant(a, b):
    """Coefficients ``(s1, s0)`` of the first subresultant ``S_1 = s1*v + s0``.

    When ``a`` and ``b`` share exactly one root ``v0`` (over the fraction
    field) and ``s1 != 0``, that root is ``-s0/s1``.
    """
    ca, zero, one = _coeff_list(a)
    cb, _, _ = _coeff_list(b)
    m, n = len(ca) - 1, len(cb) - 1
    if m < 1 or n < 1:
        raise ValueError("first subresultant needs two nonconstant polynomials")
    width = m + n - 1
    rows = []
    for i in range(n - 1):
        row = [zero] * width
        for j, c in enumerate(reversed(ca)):
            row[i + j] = c
        rows.append(row)
    for i in range(m - 1):
        row = [zero] * width
        for j, c in enumerate(reversed(cb)):
            row[i + j] = c
        rows.append(row)
    # columns are powers m+n-2 .. 0; keep the leading m+n-3 and append power 1 or 0
    lead = list(range(width - 2))
    s1 = det_bareiss([[r[c] for c in lead] + [r[width - 2]] for r in rows], zero, one)
    s0 = det_bareiss([[r[c] for c in lead] + [r[width - 1]] for r in rows], zero, one)
    return s1, s0
