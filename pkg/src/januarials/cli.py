"""Command-line front end.

Exit status: 0 success, 1 usage, 2 domain error, 3 search exhausted,
4 verification failure.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from .construct import solve_generators
from .diagram import (
    CSV_HEADER,
    build_diagram,
    census,
    export_dot,
    export_json,
    genus_breakdown,
    is_januarial,
)
from .errors import JanuarialError, NoOrderLElement
from .fieldcore import PrimeModulus, as_modulus, euler_phi, is_prime
from .gk import GkPolynomial, expected_count, find_roots, gk_coefficients, januarial_thetas
from .oracle import verify_all
from .pgl2 import format_cycles

EXIT_USAGE, EXIT_VERIFY = 1, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rows(rows) -> str:
    (a, b), (c, d) = rows
    return f"[[{a}, {b}], [{c}, {d}]]"


def cmd_poly(args, out) -> int:
    poly = gk_coefficients(args.k)
    print(poly.display(), file=out)
    if args.p is not None:
        mod = as_modulus(args.p)
        reduced = GkPolynomial(poly.k, poly.reduce(mod.p))
        roots = find_roots(poly, mod)
        print(f"mod {mod.p}: {reduced.display()}", file=out)
        print(f"roots mod {mod.p}: {{{', '.join(map(str, roots))}}}", file=out)
    return 0


def cmd_thetas(args, out) -> int:
    mod = as_modulus(args.p)
    thetas = januarial_thetas(mod)
    expected = expected_count(mod.k)
    ok = len(thetas) == expected
    if args.format == "json":
        doc = {"p": mod.p, "k": mod.k, "thetas": list(thetas), "expected": expected, "ok": ok}
        out.write(json.dumps(doc) + "\n")
    else:
        print(f"{' '.join(map(str, thetas))} (expected {expected})", file=out)
        if not ok:
            print(f"FAIL: found {len(thetas)} januarial thetas, expected {expected}", file=out)
    return 0 if ok else EXIT_VERIFY


def _build_text(pair, d) -> str:
    p = d.p
    g = genus_breakdown(d)
    P = pair.params.as_ints()
    sizes = sorted(len(o) for o in d.xy_orbits)
    lines = [
        f"D({d.theta},{p},{d.l})  p={p} l={d.l} theta={d.theta} order(xy)={d.k}",
        f"X = {_rows(pair.params.x_rows())}",
        f"Y = {_rows(pair.params.y_rows())}",
        "params: " + " ".join(f"{k}={v}" for k, v in P.items()),
        f"x  = {format_cycles(pair.xperm, p)}",
        f"y  = {format_cycles(pair.yperm, p)}",
        f"xy = {format_cycles(pair.xyperm, p)}",
        f"eta_x={d.eta_x} eta_y={d.eta_y} eta_xy={d.eta_xy}",
        f"xy orbit sizes: {' '.join(map(str, sizes))}",
        f"connected: {'yes' if d.connected else f'no ({len(d.components)} components)'}",
    ]
    if is_januarial(d):
        lines.append("januarial: yes")
    else:
        lines.append(f"januarial: no ({len(sizes)} orbits of size "
                     f"{'/'.join(map(str, sorted(set(sizes))))})")
    if g.genus_higman is None:
        comps = " ".join(f"({v},{e},{f})" for v, e, f in g.component_vef)
        lines.append(f"genus: undefined (disconnected; per-component v,e,f: {comps})")
    else:
        extra = f", januarial {g.genus_januarial}" if g.genus_januarial is not None else ""
        lines.append(f"genus: {g.genus_higman} (higman {g.genus_higman}, "
                     f"fixed-point {g.genus_fixedpoint}{extra})")
    return "\n".join(lines) + "\n"


def cmd_build(args, out) -> int:
    pair = solve_generators(args.p, args.l, args.theta)
    d = build_diagram(pair)
    if args.format == "dot":
        out.write(export_dot(d))
    elif args.format == "json":
        out.write(export_json(d, pair))
    else:
        out.write(_build_text(pair, d))
    return 0


def _emit_census(rows, primes_checked, found, predicted, fmt, out):
    if fmt == "text":
        print(f"{'p':>5} {'l':>3} {'theta':>6} {'eta_x':>5} {'eta_y':>5} {'genus':>5}", file=out)
        for row in rows:
            print(" ".join(f"{v if v is not None else '-':>{w}}"
                           for v, w in zip(row, (5, 3, 6, 5, 5, 5))), file=out)
    else:
        print(",".join(CSV_HEADER), file=out)
        for row in rows:
            print(",".join("" if v is None else str(v) for v in row), file=out)
    if primes_checked:
        print(f"# januarials={found} predicted={predicted} primes={primes_checked}", file=out)


def cmd_enumerate(args, out) -> int:
    mod = as_modulus(args.p)
    rows = census(mod.p, args.l)
    predicted = expected_count(mod.k)
    _emit_census(rows, 1, len(rows), predicted, args.format, out)
    return 0 if len(rows) == predicted else EXIT_VERIFY


def cmd_sweep(args, out) -> int:
    rows, checked, predicted = [], 0, 0
    for p in range(max(args.pmin, 5), args.pmax + 1):
        if not is_prime(p):
            continue
        try:
            prime_rows = census(p, args.l)
        except NoOrderLElement:
            print(f"# skip p={p}: no determinant-one element of order {args.l}", file=sys.stderr)
            continue
        checked += 1
        predicted += euler_phi((p + 1) // 2) // 2
        rows.extend(prime_rows)
    _emit_census(rows, checked, len(rows), predicted, args.format, out)
    return 0 if len(rows) == predicted else EXIT_VERIFY


def cmd_verify(args, out) -> int:
    report = verify_all(args.p, args.l, force=args.force)
    print(report, file=out)
    print("ALL PASS" if report.ok else f"FAILED: {', '.join(report.failures())}", file=out)
    return 0 if report.ok else EXIT_VERIFY


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"{n} is not a positive integer")
    return n


def _odd_prime(text: str) -> int:
    try:
        return PrimeModulus(int(text)).p
    except (ValueError, JanuarialError):
        raise JanuarialError("p must be an odd prime > 3")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="januarials", description=__doc__.splitlines()[0])
    parser.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("poly", help="print g_k(theta)")
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--p", type=int)
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("thetas", help="januarial theta values for p")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_thetas)

    s = sub.add_parser("build", help="construct one coset diagram")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--theta", type=int, required=True)
    s.add_argument("--format", choices=["text", "json", "dot"], default="text")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("enumerate", help="census of all januarials for one p")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--format", choices=["csv", "text"], default="csv")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("sweep", help="census over a range of primes")
    s.add_argument("--pmin", type=int, required=True)
    s.add_argument("--pmax", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--format", choices=["csv", "text"], default="csv")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("verify", help="brute-force oracle checks")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--l", type=int, default=3)
    s.add_argument("--force", action="store_true", help="ignore the enumeration budget")
    s.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        if getattr(args, "p", None) is not None and args.command != "poly":
            _odd_prime(str(args.p))
        code = args.func(args, buf)
    except JanuarialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
