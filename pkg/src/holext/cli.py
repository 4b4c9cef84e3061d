"""Command-line front end.

Exit codes: 0 when a verdict or value was produced (an obstruction is a
verdict, not a failure), 1 for usage and parse errors, 2 when an internal
invariant is violated.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .boundary import BPolyN, weighted_degree
from .certify import InvariantViolation, certify
from .exact import GComplex
from .expr import ParseError, parse_poly
from .moments import moment, moment_cutoff, moment_symbolic, monomial_moment, monomial_moment_bruteforce
from .numeric import NODES_ENV, InsufficientNodes, QuadConfig, default_nodes, interior_center_demo, moment_quad
from .report import SCHEMA_VERSION, certificate_report, dumps, format_param
from .slicer import SlicePlane, certify_nd, slice_certify_all, slice_restrict, standard_planes


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _poly(args, dim: int | None = None):
    dim = dim or getattr(args, "dim", 2)
    f = parse_poly(args.expr, dim)
    if args.max_degree is not None and f and weighted_degree(f) > args.max_degree:
        raise UsageError(f"weighted degree {weighted_degree(f)} exceeds --max-degree {args.max_degree}")
    return f


def _as_2d(f):
    return f.to_bpoly2() if isinstance(f, BPolyN) else f


def _nodes(args) -> int:
    return args.nodes if args.nodes is not None else default_nodes()


def cmd_check(args) -> dict:
    f = _poly(args)
    cert = certify_nd(f) if isinstance(f, BPolyN) else certify(f)
    return certificate_report(cert)


def cmd_moment(args) -> dict:
    f = _as_2d(_poly(args, 2))
    a = GComplex.parse(args.a)
    mu = moment(f, a, args.N)
    return {"schema_version": SCHEMA_VERSION, "status": "moment", "a": str(a), "N": args.N, "mu": str(mu)}


def cmd_moments(args) -> dict:
    f = _as_2d(_poly(args, 2))
    top = args.max_N if args.max_N is not None else max(moment_cutoff(f) - 1, 0)
    L = weighted_degree(f) if f else 0
    rows = []
    for N in range(top + 1):
        row = {"N": N, "cleared": format_param(moment_symbolic(f, N))}
        if args.a is not None:
            row["mu"] = str(moment(f, GComplex.parse(args.a), N))
        rows.append(row)
    return {"schema_version": SCHEMA_VERSION, "status": "moments", "L": L, "moments": rows}


def _planes(args, n: int) -> list[SlicePlane]:
    if not args.plane:
        return standard_planes(n, args.count)
    planes = []
    for spec in args.plane:
        coords = [GComplex.parse(x) for x in spec.split(",")]
        try:
            planes.append(SlicePlane(tuple(coords)))
        except ValueError as exc:
            raise UsageError(f"bad plane {spec!r}: {exc}") from None
    return planes


def cmd_slice(args) -> dict:
    F = _poly(args)
    if not isinstance(F, BPolyN):
        F = F.to_nd()
    planes = _planes(args, F.n)
    rep = slice_certify_all(F, planes)
    slices = []
    for P, cert in zip(rep.planes, rep.certificates):
        entry = certificate_report(cert)
        entry["plane"] = [str(x) for x in P.v]
        entry["slice"] = slice_restrict(F, P).to_text()
        slices.append(entry)
    return {
        "schema_version": SCHEMA_VERSION,
        "status": "extends" if rep.all_extend else "obstructed",
        "slices": slices,
        "glued": rep.glued,
        "common_line": None if rep.common_line is None else rep.common_line.to_text(),
    }


def cmd_quad(args) -> dict:
    f = _as_2d(_poly(args, 2))
    a = GComplex.parse(args.a)
    cfg = QuadConfig(_nodes(args))
    exact = moment(f, a, args.N)
    val = moment_quad(f, complex(a), args.N, cfg)
    return {
        "schema_version": SCHEMA_VERSION,
        "status": "moment",
        "a": str(a),
        "N": args.N,
        "mu": str(exact),
        "numeric": {
            "mu": [val.real, val.imag],
            "nodes": cfg.nodes,
            "abs_error": abs(val - complex(exact)),
        },
    }


def binomial_table(limit: int) -> list[dict]:
    rows = []
    for h in range(limit + 1):
        for k in range(limit + 1):
            for m in range(limit + 1):
                for N in range(limit + 1):
                    rows.append(
                        {
                            "h": h, "k": k, "m": m, "N": N,
                            "closed_form": monomial_moment(h, k, m, N),
                            "oracle": int(monomial_moment_bruteforce(h, k, m, N).re),
                        }
                    )
    return rows


def cmd_demo(args) -> dict:
    if args.name == "interior-center":
        rep = interior_center_demo(args.lines, QuadConfig(_nodes(args)))
        cert = rep.pop("certificate")
        return {
            "schema_version": SCHEMA_VERSION,
            "status": "demo",
            "demo": "interior-center",
            "certificate": certificate_report(cert),
            "numeric": rep,
        }
    rows = binomial_table(args.limit)
    return {
        "schema_version": SCHEMA_VERSION,
        "status": "demo",
        "demo": "binomial-identity-table",
        "rows": rows,
        "all_agree": all(r["closed_form"] == r["oracle"] for r in rows),
    }


def _text(rep: dict) -> str:
    if rep.get("demo") == "binomial-identity-table":
        lines = [f"{'h':>3} {'k':>3} {'m':>3} {'N':>3} {'closed':>10} {'oracle':>10}"]
        for r in rep["rows"]:
            mark = "" if r["closed_form"] == r["oracle"] else "  MISMATCH"
            lines.append(f"{r['h']:>3} {r['k']:>3} {r['m']:>3} {r['N']:>3} {r['closed_form']:>10} {r['oracle']:>10}{mark}")
        lines.append(f"all agree: {rep['all_agree']}")
        return "\n".join(lines)
    if rep.get("demo") == "interior-center":
        num = rep["numeric"]
        worst = max(r["max_negative_fourier"] for r in num["lines_through_origin"])
        disc = num["disc_through_pole"]
        w = rep["certificate"]["witness"]
        return "\n".join(
            [
                "f = |z1|^2",
                f"lines through the origin: {len(num['lines_through_origin'])}, "
                f"max negative Fourier mode {worst:.2e} -> extends along every line",
                f"disc through z_o with a = 1: mu(N=0) = {disc['mu']} (quadrature {disc['mu_quad']:.15f})",
                f"certificate: {rep['certificate']['status']} "
                f"(l_o={w['l_o']}, k_o={w['k_o']}, N={w['N']}, frequency={w['frequency']}, coefficient={w['coefficient']})",
            ]
        )
    if rep["status"] == "extends" and "extension" in rep:
        return f"extends: {rep['extension']}"
    if rep["status"] == "obstructed" and "witness" in rep:
        w = rep["witness"]
        return (
            f"obstructed ({w['route']}): l_o={w['l_o']} k_o={w['k_o']} N={w['N']} "
            f"frequency={w['frequency']} coefficient={w['coefficient']}"
        )
    if "moments" in rep:
        lines = [f"cleared by (1 + a ~a)^{rep['L']}"]
        for r in rep["moments"]:
            extra = f"   mu = {r['mu']}" if "mu" in r else ""
            lines.append(f"N={r['N']}: {r['cleared']}{extra}")
        return "\n".join(lines)
    if "slices" in rep:
        lines = []
        for i, s in enumerate(rep["slices"]):
            lines.append(f"[{i}] v=({', '.join(s['plane'])}): {s['status']}  slice = {s['slice']}")
        lines.append(f"glued: {rep['glued']}  common line: {rep['common_line']}")
        return "\n".join(lines)
    if "mu" in rep:
        out = f"mu = {rep['mu']}   (G = 2*pi*i*mu)"
        if "numeric" in rep:
            n = rep["numeric"]
            out += f"\nquadrature ({n['nodes']} nodes): {n['mu'][0]:+.16e} {n['mu'][1]:+.16e}i  |err| = {n['abs_error']:.2e}"
        return out
    return dumps(rep)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="holext", description="Certify holomorphic extension of sphere data via disc moments.")
    parser.add_argument("--version", action="version", version=f"holext {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--max-degree", type=int, default=None, help="reject inputs above this weighted degree")
    common.add_argument("--nodes", type=int, default=None, help=f"quadrature nodes (default ${NODES_ENV} or 257)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="certify extension or report an obstruction")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("-n", "--dim", type=int, default=2)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("moment", parents=[common], help="exact N-moment on one disc")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("-a", required=True, help="disc parameter, e.g. 1+0i")
    p.add_argument("-N", type=int, default=0)
    p.set_defaults(func=cmd_moment)

    p = sub.add_parser("moments", parents=[common], help="symbolic moments over a range of N")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("-a", default=None, help="also evaluate at this disc parameter")
    p.add_argument("--max-N", type=int, default=None)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("slice", parents=[common], help="certify slices through 0 and the pole in C^n")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("-n", "--dim", type=int, default=3)
    p.add_argument("--plane", action="append", help="comma-separated unit vector with last entry 0")
    p.add_argument("--count", type=int, default=12, help="size of the automatic plane family")
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("quad", parents=[common], help="trapezoid moment next to the exact value")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("-a", required=True)
    p.add_argument("-N", type=int, default=0)
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("demo", parents=[common], help="built-in demonstrations")
    p.add_argument("name", choices=["interior-center", "binomial-identity-table"])
    p.add_argument("--lines", type=int, default=20)
    p.add_argument("--limit", type=int, default=3, help="max h, k, m, N in the identity table")
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        rep = args.func(args)
    except (UsageError, ParseError, InsufficientNodes, ValueError) as exc:
        print(f"holext: error: {exc}", file=sys.stderr)
        return 1
    except (InvariantViolation, AssertionError) as exc:
        print(f"holext: internal invariant violated: {exc}", file=sys.stderr)
        return 2
    print(dumps(rep) if args.json else _text(rep))
    return 0


if __name__ == "__main__":
    sys.exit(main())
