"""Command-line front end.

Subcommands: ``matrix`` builds a transition matrix, ``split`` computes
a splitting type two independent ways, ``cohomology`` prints dimension
tables, ``fiber`` compares the closed-form jet fiber against the
weight oracle, and ``verify`` runs the whole grid.

Exit codes are stable across commands: 0 for success (and for match),
2 for usage errors including unsupported parameter ranges, 3 when a
verification or cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .birkhoff import birkhoff_factorize
from .cohomology import parse_sheaf, sheaf_cohomology
from .equivariant import verify_fiber
from .errors import NotACocycleError, UnsupportedCaseError
from .jets import JetSpec, Side, build_matrix
from .splitting import predicted_splitting, splitting_from_h0
from .verify import run_verification, worker_count

USAGE_ERROR = 2
MISMATCH_ERROR = 3


def _add_cell_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--side", required=True, choices=["left", "right"],
        help="which module structure glues the jets",
    )
    parser.add_argument("--k", required=True, type=int, help="jet order, >= 0")
    parser.add_argument("--d", required=True, type=int, help="twist of the line bundle")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jetbundles",
        description="Exact transition matrices, splitting types and jet fibers on P^N.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_matrix = sub.add_parser("matrix", help="build one transition matrix")
    _add_cell_flags(p_matrix)
    p_matrix.add_argument("--json", action="store_true", help="emit JSON")

    p_split = sub.add_parser(
        "split", help="splitting type via dimension counts and a factorization witness"
    )
    _add_cell_flags(p_split)
    p_split.add_argument("--json", action="store_true", help="emit JSON")

    p_coh = sub.add_parser("cohomology", help="cohomology table of a sheaf")
    p_coh.add_argument("--N", required=True, type=int, help="projective space dimension")
    p_coh.add_argument(
        "--sheaf", required=True,
        help='descriptor: "O(d)" or, on the line, "I^{m}(d)" for order-m vanishing',
    )
    p_coh.add_argument("--json", action="store_true", help="emit JSON")

    p_fiber = sub.add_parser("fiber", help="jet fiber weights: prediction vs oracle")
    p_fiber.add_argument("--N", required=True, type=int, help="projective space dimension")
    _add_cell_flags(p_fiber)
    p_fiber.add_argument("--json", action="store_true", help="emit JSON")

    p_verify = sub.add_parser("verify", help="run every check on a parameter grid")
    p_verify.add_argument("--kmax", type=int, default=6, help="largest jet order")
    p_verify.add_argument("--dmin", type=int, default=-6, help="smallest twist")
    p_verify.add_argument("--dmax", type=int, default=6, help="largest twist")
    p_verify.add_argument("--Nmax", type=int, default=3, help="largest projective dimension")
    p_verify.add_argument("--json", action="store_true", help="emit JSON report")
    p_verify.add_argument(
        "--quiet", action="store_true", help="print only the summary line and failures"
    )
    return parser


def _cmd_matrix(args: argparse.Namespace) -> int:
    matrix = build_matrix(args.k, args.d, Side(args.side))
    if args.json:
        print(json.dumps(matrix.to_json()))
    else:
        print(matrix)
    return 0


def _cmd_split(args: argparse.Namespace) -> int:
    matrix = build_matrix(args.k, args.d, Side(args.side))
    by_h0 = splitting_from_h0(matrix)
    witness = birkhoff_factorize(matrix)
    agree = by_h0 == witness.splitting() and witness.verify(matrix)
    try:
        predicted = predicted_splitting(JetSpec(1, args.k, args.d, Side(args.side)))
        agree = agree and predicted == by_h0
    except UnsupportedCaseError:
        predicted = None
    if args.json:
        payload = {
            "twists": list(by_h0.twists),
            "rendered": by_h0.render(),
            "agree": agree,
            "witness": {
                "left": witness.left.to_json(),
                "diag": witness.diag.to_json(),
                "right": witness.right.to_json(),
            },
        }
        print(json.dumps(payload))
    else:
        print(by_h0.render())
        if not agree:
            print("routes disagree:", by_h0, "vs", witness.splitting(), file=sys.stderr)
    return 0 if agree else MISMATCH_ERROR


def _cmd_cohomology(args: argparse.Namespace) -> int:
    sheaf = parse_sheaf(args.sheaf, args.N)
    table = sheaf_cohomology(sheaf, args.N)
    if args.json:
        print(
            json.dumps(
                {"N": args.N, "sheaf": str(sheaf), "h": list(table.dims)}
            )
        )
    else:
        print(f"{sheaf} on P^{args.N}: {table}")
    return 0


def _cmd_fiber(args: argparse.Namespace) -> int:
    report = verify_fiber(JetSpec(args.N, args.k, args.d, Side(args.side)))
    if args.json:
        payload = {
            "N": args.N,
            "k": args.k,
            "d": args.d,
            "side": args.side,
            "expression": str(report.expression),
            "predicted": [list(w.components) for w in report.predicted.weights()],
            "oracle": [list(w.components) for w in report.oracle.weights()],
            "dimension": report.expected_dimension,
            "match": report.match,
        }
        print(json.dumps(payload))
    else:
        print(f"expression: {report.expression}")
        print(f"predicted:  {report.predicted}")
        print(f"oracle:     {report.oracle}")
        print("match" if report.match else "MISMATCH")
    return 0 if report.match else MISMATCH_ERROR


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(
        k_max=args.kmax,
        d_min=args.dmin,
        d_max=args.dmax,
        n_max=args.Nmax,
        workers=worker_count(),
    )
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        if not args.quiet:
            for cell in report.cells:
                print(cell)
        print(report.summary())
    return 0 if report.all_ok else MISMATCH_ERROR


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "matrix": _cmd_matrix,
        "split": _cmd_split,
        "cohomology": _cmd_cohomology,
        "fiber": _cmd_fiber,
        "verify": _cmd_verify,
    }
    try:
        if args.command in ("matrix", "split", "fiber") and args.k < 0:
            parser.error("--k must be >= 0")
        if args.command == "verify":
            if args.kmax < 1:
                parser.error("--kmax must be >= 1")
            if args.dmin > args.dmax:
                parser.error("--dmin must be <= --dmax")
            if args.Nmax < 1:
                parser.error("--Nmax must be >= 1")
        if args.command in ("cohomology", "fiber") and args.N < 1:
            parser.error("--N must be >= 1")
        return handlers[args.command](args)
    except (UnsupportedCaseError, NotACocycleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
