"""Exhaustive finite-field checks of the group law and deck involutions.

Over a small prime field every point of a fiber can be enumerated, so the
group axioms can be checked on all pairs and triples rather than samples.
Configurations that leave the affine chart or hit a degenerate form are
counted as skipped, never as passes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .exact import GF
from .grouplaw import GroupLawError, MarkedFiber, add, affine_points, double, halve, neg, star
from .surface import FiberPoint, SurfaceError, SurfaceForm, deck_transform, fiber_at


@dataclass
class Tally:
    checked: int = 0
    failed: int = 0
    skipped: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, witness=None):
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.examples) < 3:
                self.examples.append(witness)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.checked > 0

    def to_json(self) -> dict:
        return {"checked": self.checked, "failed": self.failed, "skipped": self.skipped,
                "examples": [str(w) for w in self.examples]}


class _Table:
    """Memoized star/add over a fixed point set; ``None`` marks unusable results."""

    def __init__(self, F: MarkedFiber):
        self.F = F
        self._star: dict = {}
        self._add: dict = {}

    def star(self, A, B):
        key = (A, B)
        if key not in self._star:
            try:
                R = star(self.F, A, B)
                self._star[key] = R if R.affine else None
            except GroupLawError:
                self._star[key] = None
        return self._star[key]

    def add(self, A, B):
        key = (A, B)
        if key not in self._add:
            C = self.star(A, B)
            self._add[key] = None if C is None else self.star(C, self.F.O)
        return self._add[key]


def smooth_points(F: MarkedFiber) -> list[FiberPoint]:
    E = F.curve
    return [P for P in affine_points(F) if E.dy(P.y, P.z) != 0 or E.dz(P.y, P.z) != 0]


def group_axioms(F: MarkedFiber) -> dict[str, Tally]:
    """Check the abelian group axioms on all smooth affine points of ``F``."""
    pts = smooth_points(F)
    T = _Table(F)
    O = F.O
    out = {name: Tally() for name in (
        "commutativity", "identity", "inverse", "associativity",
        "star_symmetry", "star_involution", "star_O_twice", "divisor_law",
    )}

    def check(name, *values, ok=None, witness=None):
        if any(v is None for v in values):
            out[name].skipped += 1
        else:
            out[name].record(ok(*values), witness)

    for A in pts:
        check("identity", T.add(A, O), ok=lambda s: s == A, witness=A)
        check("inverse", T.star(A, O), ok=lambda n: T.add(A, n) == O, witness=A)
        AO = T.star(A, O)
        check("star_O_twice", AO, ok=lambda a: T.star(a, O) == A, witness=A)
    for A, B in product(pts, repeat=2):
        check("commutativity", T.add(A, B), T.add(B, A), ok=lambda x, y: x == y, witness=(A, B))
        check("star_symmetry", T.star(A, B), T.star(B, A), ok=lambda x, y: x == y, witness=(A, B))
        C = T.star(A, B)
        check("star_involution", C, ok=lambda c: T.star(A, c) == B, witness=(A, B))
        S = T.add(A, B)
        if C is None or S is None:
            out["divisor_law"].skipped += 1
        else:
            total = T.add(S, C)
            check("divisor_law", total, ok=lambda t: t == O, witness=(A, B))
    for A, B, C in product(pts, repeat=3):
        AB, BC = T.add(A, B), T.add(B, C)
        if AB is None or BC is None:
            out["associativity"].skipped += 1
            continue
        check("associativity", T.add(AB, C), T.add(A, BC), ok=lambda x, y: x == y, witness=(A, B, C))
    return out


def torsion_roots_double_to_O(F: MarkedFiber) -> Tally:
    """Points from rational roots of the torsion polynomial versus brute-force 2-torsion."""
    tally = Tally()
    from_poly = {br.Q for br in halve(F, F.O).branches if br.field is F.field and br.Q.affine}
    brute = set()
    for P in smooth_points(F):
        try:
            if double(F, P) == F.O:
                brute.add(P)
        except GroupLawError:
            tally.skipped += 1
    for Q in from_poly:
        tally.record(double(F, Q) == F.O, Q)
    tally.record(from_poly == brute, (sorted(map(str, from_poly)), sorted(map(str, brute))))
    return tally


def deck_involutions(X: SurfaceForm, p: int) -> dict[str, Tally]:
    """sigma_i(sigma_i(P)) = P and sigma_i(P) on X for every affine point of X mod p."""
    K = GF(p)
    out = {f"sigma{axis}": Tally() for axis in (1, 2, 3)}
    points = [(x, y, z) for x, y, z in product(K.elements(), repeat=3) if X(x, y, z) == 0]
    for P in points:
        for axis in (1, 2, 3):
            tally = out[f"sigma{axis}"]
            try:
                Q = deck_transform(X, axis, P)
                back = deck_transform(X, axis, Q)
            except SurfaceError:
                tally.skipped += 1
                continue
            tally.record(X(*Q) == 0 and back == tuple(P), P)
    return out


def fiber_mod_p(X: SurfaceForm, x0: int, p: int, O=(0, 0)) -> MarkedFiber:
    K = GF(p)
    return MarkedFiber(fiber_at(X, K(x0)), FiberPoint(K(O[0]), K(O[1])))


def run_all(X: SurfaceForm, p: int = 13, x0: int = 0) -> dict[str, Tally]:
    F = fiber_mod_p(X, x0, p)
    results = group_axioms(F)
    results["torsion_roots"] = torsion_roots_double_to_O(F)
    results.update(deck_involutions(X, p))
    return results
