"""Small exact linear algebra: fraction-free determinants and null spaces."""
from __future__ import annotations


def exact_div(a, b):
    """Exact quotient in an integral domain (polynomials or field elements)."""
    if hasattr(a, "exact_div"):
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("integer division is not exact")
        return q
    return a / b


def det_bareiss(matrix, zero=0, one=1):
    """Determinant over an integral domain by Bareiss elimination.

    Entries need ``+ - *``, ``== 0`` and exact division; ``zero``/``one`` are
    the ring's identities (used for the empty matrix and the first pivot).
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = None
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else exact_div(num, prev)
            m[i][k] = zero
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def nullspace(matrix, field) -> list[list]:
    """Basis of the right null space of ``matrix`` over ``field`` (Gauss-Jordan)."""
    rows = [[field(c) for c in row] for row in matrix]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [field.zero] * ncols
        v[fcol] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fcol]
        basis.append(v)
    return basis


def solve(matrix, rhs, field) -> list:
    """Unique solution of a square system; raises on singular matrices."""
    n = len(matrix)
    aug = [[field(c) for c in row] + [field(b)] for row, b in zip(matrix, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular linear system")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = field.one / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [aug[i][n] for i in range(n)]
