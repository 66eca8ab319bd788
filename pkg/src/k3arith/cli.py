"""Command-line front end.

Exit codes: 0 success, 1 a claim or computation failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import lattice as lat
from .exact import GF, QQ, factor_mod_p, factor_small_over_Q, is_prime
from .exact.fields import Fp, fraction_str, parse_fraction
from .exact.numberfield import NFElement
from .grouplaw import GroupLawError, MarkedFiber, add, double, halve, neg, star, two_torsion_poly
from .surface import (
    PRESETS,
    FiberPoint,
    SurfaceError,
    fiber_at,
    flip_x_chart,
    line_on_surface_check,
    load_surface,
    singular_locus,
)
from .verify import load_manifest, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


# ---- parsing ---------------------------------------------------------------

def parse_scalar(text: str):
    """``a/b`` over Q or ``a mod p`` over F_p."""
    text = text.strip()
    if " mod " in text:
        a, p = text.split(" mod ")
        p = int(p)
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
        return GF(p)(parse_fraction(a))
    try:
        return parse_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {text!r} as an exact number") from exc


def parse_point(text: str, field) -> FiberPoint:
    """``(a/b, c/d)`` or the JSON point schema; the first character decides."""
    text = text.strip()
    try:
        if text.startswith("{"):
            return FiberPoint.from_json(json.loads(text), field)
        if text.startswith("(") and text.endswith(")"):
            parts = [p.strip() for p in text[1:-1].split(",")]
            if len(parts) != 2:
                raise UsageError(f"expected two coordinates in {text!r}")
            return FiberPoint(*(field(parse_fraction(p)) for p in parts))
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse point {text!r}: {exc}") from exc
    raise UsageError(f"points look like '(a/b, c/d)' or a JSON object, got {text!r}")


def parse_primes(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise UsageError(f"bad prime list {text!r}") from exc
    bad = [p for p in primes if not is_prime(p)]
    if bad or not primes:
        raise UsageError(f"not prime: {bad}" if bad else "empty prime list")
    return primes


# ---- rendering -------------------------------------------------------------

def fmt(v, approx: bool = False) -> str:
    if v is None:
        return "inf"
    if isinstance(v, (int, Fraction)):
        s = fraction_str(v)
        if approx and Fraction(v).denominator != 1:
            s += f" (~{float(v):.6g})"
        return s
    if isinstance(v, NFElement):
        return v.format()
    return str(v)


def fmt_point(P: FiberPoint, approx=False) -> str:
    return f"({fmt(P.y, approx)}, {fmt(P.z, approx)})"


def jsonable(v):
    if isinstance(v, FiberPoint):
        return v.to_json()
    if isinstance(v, (int, Fraction)):
        return fraction_str(v)
    if isinstance(v, (Fp, NFElement)):
        return v.to_json() if isinstance(v, NFElement) else int(v)
    if hasattr(v, "to_json"):
        return v.to_json()
    return v


def emit(args, data: dict, text_lines: list[str]):
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True, default=jsonable))
    else:
        print("\n".join(text_lines))


# ---- commands --------------------------------------------------------------

def cmd_verify_paper(args) -> int:
    manifest = load_manifest(args.manifest)
    only = set(args.only.split(",")) if args.only else None
    results = run_suite(args.surface_form, seed=args.seed, only=only, manifest=manifest)
    ok = all(r.passed for r in results)
    data = {"passed": ok, "claims": {r.id: r.to_json() for r in results}}
    lines = []
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        crit = f"[{r.criterion}] " if r.criterion else ""
        lines.append(f"{tag}  {r.id:28s} {crit}{r.title}  ({r.seconds:.2f}s)")
        if not r.passed:
            if r.error:
                lines.append(f"      {r.failure_class}: {r.error}")
            for key in r.mismatches():
                lines.append(f"      {key}: expected {r.expected[key]!r}")
                lines.append(f"      {' ' * len(key)}  computed {r.computed.get(key)!r}")
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} claims hold")
    emit(args, data, lines)
    return EXIT_OK if ok else EXIT_FAIL


def _marked_fiber(args) -> MarkedFiber:
    x0 = parse_scalar(args.x)
    K = QQ if isinstance(x0, Fraction) else x0.field
    E = fiber_at(args.surface_form, x0)
    return MarkedFiber(E, parse_point(args.zero, K))


def _fiber_points(args, F, *names):
    pts = []
    for name in names:
        text = getattr(args, name)
        if text is None:
            raise UsageError(f"--{name} is required")
        pts.append(parse_point(text, F.field))
    return pts


def cmd_fiber(args) -> int:
    F = _marked_fiber(args)
    op = args.op
    a = args.approx
    base = {"fiber": F.curve.format(), "O": F.O, "O_prime": F.O_prime, "op": op}
    head = [f"fiber: {F.curve.format()} = 0", f"O = {fmt_point(F.O, a)}, O' = {fmt_point(F.O_prime, a)}"]
    if op in ("add", "star"):
        P, Q = _fiber_points(args, F, "p", "q")
        R = (add if op == "add" else star)(F, P, Q)
        sym = "+" if op == "add" else "*"
        emit(args, {**base, "result": R}, head + [f"{fmt_point(P, a)} {sym} {fmt_point(Q, a)} = {fmt_point(R, a)}"])
    elif op in ("neg", "double"):
        (P,) = _fiber_points(args, F, "point")
        R = (neg if op == "neg" else double)(F, P)
        label = "-" if op == "neg" else "2*"
        emit(args, {**base, "result": R}, head + [f"{label}{fmt_point(P, a)} = {fmt_point(R, a)}"])
    elif op == "two-torsion":
        f = two_torsion_poly(F)
        factors = factor_small_over_Q(f) if F.field is QQ else factor_mod_p(f, seed=args.seed)
        torsion = [br.Q for br in halve(F, F.O).branches if br.field is F.field]
        data = {**base, "poly": f, "factors": [[g, m] for g, m in factors], "rational_points": torsion}
        lines = head + [
            f"torsion polynomial: {f.format('t')}",
            "factors: " + " * ".join(f"({g.format('t')})" + (f"^{m}" if m > 1 else "") for g, m in factors),
            "2-torsion points over the base field: " + ", ".join(fmt_point(T, a) for T in torsion),
        ]
        emit(args, data, lines)
    elif op == "halve":
        (P,) = _fiber_points(args, F, "point")
        res = halve(F, P)
        lines = head + [f"P = {fmt_point(P, a)}", f"P*O = {fmt_point(res.R, a)}", f"h(t) = {res.h.format('t')}"]
        for br in res.branches:
            where = "t = inf" if br.factor is None else f"{br.factor.format('t')} = 0"
            lines.append(f"branch {where}:")
            lines.append(f"  Q = {fmt_point(br.Q, a)}   (2Q = P verified)")
        for g in res.skipped:
            lines.append(f"no branch from factor {g.format('t')}")
        emit(args, {**base, **res.to_json()}, lines)
    return EXIT_OK


def cmd_singular_fibers(args) -> int:
    rep = singular_locus(args.surface_form, primes=args.primes, seed=args.seed)
    lines = [f"g(t) has degree {rep.g.degree} (eliminant degree {rep.eliminant_degree})", f"g(t) = {rep.g.format('t')}"]
    data = rep.to_json()
    for pat in rep.patterns:
        roots = data["roots_mod_p"][str(pat.p)]
        lines.append(f"pattern {pat}; roots {roots}")
    for n in rep.nodes:
        lines.append(
            f"mod {n.p}: x = {int(n.point[0])}, singular point ({int(n.point[1])}, {int(n.point[2])}) -> {n.kind}; "
            f"translated {n.translated.format()}; disc {int(n.discriminant)}"
        )
    if rep.certificate is not None:
        lines.append(f"over Q: {rep.certificate.status} ({rep.certificate.method})")
    emit(args, data, lines)
    return EXIT_OK


def _flat(M):
    return [int(x) for row in M for x in row]


def cmd_lattice(args) -> int:
    op = args.op
    if op == "orbit":
        orbit = lat.orbit_of_D4(word_length=args.word_length, ample_bound=args.ample_bound)
        data = {"word_length": args.word_length, "size": len(orbit), "orbit": [list(v) for v in orbit]}
        lines = [f"{len(orbit)} classes within word length {args.word_length}"]
        lines += [f"{list(v)}  self-pairing {lat.pair(v, v)}" for v in orbit]
    elif op == "cm":
        cms = [(m, lat.cm_class(m)) for m in range(args.max + 1)]
        data = {"classes": [{"m": m, "class": list(c), "pair_D1": lat.pair(c, lat.D1)} for m, c in cms]}
        lines = [f"C_{m} = {list(c)}  C.D1 = {lat.pair(c, lat.D1)}  C.C = {lat.pair(c, c)}" for m, c in cms]
    elif op == "reflections":
        rep = lat.classify_sigma4_reflections()
        data = rep.to_json()
        lines = [
            f"normal a = ({', '.join(str(p) for p in rep.normal_family)})",
            f"second coordinate of R_a(D2) = ({rep.numerator}) / ({rep.denominator})",
            f"discriminant in k: {rep.discriminant.format('k')}",
        ]
        for c in rep.candidates:
            lines.append(
                f"k = {c.k}: discriminant {c.discriminant} ({'square' if c.is_square else 'non-square'}), "
                f"normals {[list(v) for v in c.normals]}, integral reflections {len(c.integral_reflections)}"
            )
        lines.append("reflections: " + ", ".join(rep.named_reflections()))
    elif op == "ambient":
        rep = lat.ambient_report(args.r)
        data = rep.to_json()
        data["value"] = lat.ambient_pairing_check(args.r)
        lines = [
            f"[X].[Y] = {rep.XY}",
            f"[D2] = {rep.D2}",
            f"[L] = {rep.L}",
            f"[M] = {rep.M}",
            f"[M].(B2' - B3') = {data['value']}",
        ]
    else:  # generators
        data = {name: _flat(M) for name, M in lat.NAMED.items()}
        lines = [f"{name}: {_flat(M)}  isometry={lat.is_isometry(M)}" for name, M in lat.NAMED.items()]
    emit(args, data, lines)
    return EXIT_OK


def cmd_surface_info(args) -> int:
    X = args.surface_form
    fib = fiber_at(X, Fraction(0))
    data = {
        "surface": X.to_json(),
        "equation": str(X),
        "contains_line_x00": line_on_surface_check(X),
        "fiber_x0": fib.format(),
        "x_infinity_chart": str(flip_x_chart(X)),
    }
    lines = [
        f"F = {X}",
        f"line (x,0,0) on surface: {data['contains_line_x00']}",
        f"fiber x=0: {fib.format()}",
        f"chart x -> 1/x: {data['x_infinity_chart']}",
    ]
    emit(args, data, lines)
    return EXIT_OK


# ---- argument parser -------------------------------------------------------

GLOBAL_DEFAULTS = {"surface": "paper-surface", "format": "text", "seed": 0, "primes": "13,11", "approx": False}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--surface", default=argparse.SUPPRESS,
                        help=f"preset ({', '.join(PRESETS)}) or path to a surface JSON file")
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized factoring")
    common.add_argument("--primes", default=argparse.SUPPRESS, help="comma-separated primes, e.g. 13,11")
    common.add_argument("--approx", action="store_true", default=argparse.SUPPRESS,
                        help="append decimal approximations (marked with ~)")

    parser = argparse.ArgumentParser(prog="k3arith", parents=[common],
                                     description="Exact arithmetic on a (2,2,2) K3 surface.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-paper", parents=[common], help="run the reproduction suite")
    p.add_argument("--only", help="comma-separated claim ids")
    p.add_argument("--manifest", help="alternative claims manifest")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("fiber", parents=[common], help="group law on a fiber")
    p.add_argument("--x", default="0", help="fiber coordinate: 'a/b' or 'a mod p'")
    p.add_argument("--zero", "-O", default="(0,0)", help="zero point of the fiber")
    p.add_argument("op", choices=("add", "neg", "double", "star", "two-torsion", "halve"))
    p.add_argument("--p", help="first point")
    p.add_argument("--q", help="second point")
    p.add_argument("--point", help="point for neg, double, halve")
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("singular-fibers", parents=[common], help="singular fibers and nodality")
    p.set_defaults(func=cmd_singular_fibers)

    p = sub.add_parser("lattice", parents=[common], help="Picard lattice computations")
    p.add_argument("op", choices=("orbit", "cm", "reflections", "ambient", "generators"))
    p.add_argument("--word-length", type=int, default=6)
    p.add_argument("--ample-bound", type=int)
    p.add_argument("--max", type=int, default=4, help="largest m for cm")
    p.add_argument("--r", type=int, default=0, help="degree r of the (r,1,1) form")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("surface-info", parents=[common], help="show the surface")
    p.set_defaults(func=cmd_surface_info)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    # global flags may appear before or after the subcommand; fill the rest here
    # (set_defaults would leak into the shared parent actions)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        args.primes = parse_primes(args.primes)
        args.surface_form = load_surface(args.surface)
    except (UsageError, SurfaceError, ValueError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupLawError, SurfaceError, lat.LatticeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
