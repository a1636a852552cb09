"""Command-line interface: quantum products, index correspondences, and the
exhaustive verification harness.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Set QSCHUBERT_JOBS to cap the process fan-out of the verify suites
(default 1, fully sequential).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import maps, oracle, perms, shapes, verify
from .maps import AffIndex, DomainError, FlIndex, GrIndex
from .perms import PermError
from .shapes import RectContext, ShapeError

USAGE_ERROR = 2


def _ctx(args) -> RectContext:
    if args.n <= args.m:
        raise ShapeError(f"need n > m, got m={args.m}, n={args.n}")
    return RectContext(m=args.m, r=args.n - args.m)


def _gr_index(args) -> GrIndex:
    return GrIndex(
        lam=shapes.parse_partition(args.lam),
        mu=shapes.parse_partition(args.mu),
        nu=shapes.parse_partition(args.nu),
        d=args.d,
        ctx=_ctx(args),
    )


def _fl_index(args) -> FlIndex:
    try:
        deg = tuple(int(tok) for tok in args.deg.split(","))
    except ValueError as exc:
        raise PermError(f"cannot parse degree vector {args.deg!r}") from exc
    return FlIndex(
        u=perms.parse_permutation(args.u),
        v=perms.parse_permutation(args.v),
        w=perms.parse_permutation(args.w),
        d=deg,
        n=args.n,
    )


def _aff_index(args) -> tuple[AffIndex, RectContext]:
    ctx = _ctx(args)
    aff = AffIndex(
        lam=shapes.parse_partition(args.lam),
        mu=shapes.parse_partition(args.mu),
        eta=shapes.parse_partition(args.eta),
        k=ctx.k,
    )
    return aff, ctx


def _cmd_product(args) -> int:
    if args.ring == "gr":
        ctx = _ctx(args)
        lam = shapes.parse_partition(args.a)
        mu = shapes.parse_partition(args.b)
        table = oracle.quantum_product_gr_bcff(lam, mu, ctx)
        doc = oracle.serialize_gr_table(ctx, table)
        if args.pretty:
            for term in doc["terms"]:
                print(f"nu={term['nu'] or '-'} d={term['d']} c={term['c']}")
        else:
            print(json.dumps(doc))
    else:
        u = perms.parse_permutation(args.a)
        v = perms.parse_permutation(args.b)
        if len(u) != args.n or len(v) != args.n:
            raise PermError(f"windows must have size n={args.n}")
        table = oracle.quantum_product_fl(u, v)
        doc = oracle.serialize_fl_table(args.n, table)
        if args.pretty:
            for term in doc["terms"]:
                print(f"w={term['w']} deg={term['deg']} c={term['c']}")
        else:
            print(json.dumps(doc))
    return 0


def _cmd_map(args) -> int:
    which = args.which
    if which == "sd":
        out = maps.gamma_sd(_gr_index(args))
    elif which == "pc":
        out = maps.psi_pc(_gr_index(args))
    elif which == "t":
        out = maps.gamma_t(_fl_index(args))
    elif which == "gr":
        out = maps.phi_gr(_gr_index(args))
    elif which == "fl":
        aff, ctx = _aff_index(args)
        out = maps.phi_fl(aff, ctx)
    else:  # flinv
        out = maps.phi_fl_inv(_fl_index(args))
    if args.pretty:
        print(" ".join(f"{k}={v}" for k, v in out.record().items()))
    else:
        print(maps.to_json(out))
    return 0


SUITE_LIMITS = {"pentagon": 10, "pc-numeric": 7, "sd-numeric": 8, "lift": 40}


def _cmd_verify(args) -> int:
    limit = SUITE_LIMITS.get(args.suite)
    if args.n is not None and limit is not None and not 2 <= args.n <= limit:
        raise ShapeError(
            f"suite {args.suite} supports 2 <= n <= {limit}, got {args.n}"
        )
    if args.suite == "pentagon":
        reports = [verify.verify_pentagon(args.n if args.n else 7)]
    elif args.suite == "pc-numeric":
        reports = [verify.verify_pc_numeric(args.n if args.n else 5)]
    elif args.suite == "sd-numeric":
        reports = [verify.verify_sd_numeric(args.n if args.n else 6)]
    elif args.suite == "lift":
        reports = [verify.verify_lift(args.n if args.n else 12)]
    else:
        reports = verify.verify_props(args.n)
    total_checked = sum(r.checked for r in reports)
    total_failures = sum(len(r.failures) for r in reports)
    for rep in reports:
        print(rep.line())
    print(f"total: {total_checked} checked, {total_failures} failures")
    return 1 if total_failures else 0


def _add_gr_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True, help="rows of the rectangle")
    p.add_argument("--n", type=int, required=True, help="m + r")
    p.add_argument("--lambda", dest="lam", required=True, help='partition "2,2,1"')
    p.add_argument("--mu", required=True, help="partition")
    p.add_argument("--nu", required=True, help="partition")
    p.add_argument("--d", type=int, required=True, help="degree")


def _add_fl_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u", required=True, help='window "2,3,5,1,4" or "23514"')
    p.add_argument("--v", required=True, help="window")
    p.add_argument("--w", required=True, help="window")
    p.add_argument("--deg", required=True, help='degree vector "0,0,1,0"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qschubert",
        description="Exact quantum/affine Schubert calculus toolkit.",
        epilog=(
            "Set QSCHUBERT_JOBS to cap the process fan-out of the verify "
            "suites (default 1, sequential)."
        ),
    )
    parser.add_argument(
        "--pretty", action="store_true", help="human-readable output"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    prod = sub.add_parser("product", help="expand a quantum product")
    prod_sub = prod.add_subparsers(dest="ring", required=True)
    pg = prod_sub.add_parser("gr", help="Grassmannian quantum product")
    pg.add_argument("--m", type=int, required=True)
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--a", required=True, help="first partition")
    pg.add_argument("--b", required=True, help="second partition")
    pf = prod_sub.add_parser("fl", help="flag-variety quantum product")
    pf.add_argument("--n", type=int, required=True)
    pf.add_argument("--a", required=True, help="first window")
    pf.add_argument("--b", required=True, help="second window")
    for p in (pg, pf):
        p.set_defaults(func=_cmd_product)

    mp = sub.add_parser("map", help="apply an index correspondence")
    mp_sub = mp.add_subparsers(dest="which", required=True)
    for name, helptext in (
        ("sd", "strange duality on a Grassmannian index"),
        ("pc", "Peterson comparison to a flag index"),
        ("gr", "rim-hook addition to an affine index"),
    ):
        q = mp_sub.add_parser(name, help=helptext)
        _add_gr_args(q)
        q.set_defaults(func=_cmd_map)
    for name, helptext in (
        ("t", "flag transpose"),
        ("flinv", "affine reduction of a flag index"),
    ):
        q = mp_sub.add_parser(name, help=helptext)
        _add_fl_args(q)
        q.set_defaults(func=_cmd_map)
    q = mp_sub.add_parser("fl", help="flag index of an affine index")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--lambda", dest="lam", required=True)
    q.add_argument("--mu", required=True)
    q.add_argument("--eta", required=True)
    q.set_defaults(func=_cmd_map)

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument(
        "suite",
        choices=["pentagon", "pc-numeric", "sd-numeric", "props", "lift"],
    )
    vf.add_argument(
        "--n",
        type=int,
        default=None,
        help="bound on n = m + r (suite default when omitted)",
    )
    vf.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ShapeError, PermError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
