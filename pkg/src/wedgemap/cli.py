"""Command-line interface.

Subcommands: ``negativity``, ``embed``, ``extract``, ``sweep``, ``verify``.
Exit codes: 0 success, 1 verify failure, 2 parse or validation failure,
3 dimension mismatch, 4 bad flag value. Errors go to stderr and name the
violated invariant.
"""

import argparse
import sys

from wedgemap.config import DEFAULT_SEED
from wedgemap.embedding import embed, extract
from wedgemap.entanglement import negativity
from wedgemap.errors import (
    DimensionMismatch,
    DimensionTooSmall,
    NoConvergence,
    NotAntisymmetric,
    NotHermitian,
    NotPositive,
    NotPure,
    ShapeMismatch,
    StateFileError,
    TraceNotOne,
)
from wedgemap.statefile import load_density, write_matrix
from wedgemap.sweep import sweep_csv
from wedgemap.verify import format_table, run_all

_VALIDATION_ERRORS = (
    StateFileError,
    NotHermitian,
    TraceNotOne,
    NotPositive,
    NotPure,
    NotAntisymmetric,
    NoConvergence,
)
_DIMENSION_ERRORS = (DimensionMismatch, DimensionTooSmall, ShapeMismatch)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedgemap",
        description="Entanglement carried by the two-fermion embedding of qudit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_neg = sub.add_parser("negativity", help="negativity report for an embedded state")
    p_neg.add_argument("input", help="state file holding the d(d-1)/2-dim input state")
    p_neg.add_argument("--d", type=int, default=3, help="single-fermion dimension (default 3)")
    p_neg.add_argument("--raw", action="store_true", help="skip density validation of the input")
    p_neg.set_defaults(func=cmd_negativity)

    p_embed = sub.add_parser("embed", help="write the d^2-dim embedded state")
    p_embed.add_argument("input", help="state file holding the d(d-1)/2-dim input state")
    p_embed.add_argument("--d", type=int, default=3)
    p_embed.add_argument("--output", required=True, help="destination state file")
    p_embed.add_argument("--raw", action="store_true", help="skip density validation of the input")
    p_embed.set_defaults(func=cmd_embed)

    p_extract = sub.add_parser("extract", help="invert the embedding of a d^2-dim state")
    p_extract.add_argument("input", help="state file holding the d^2-dim embedded state")
    p_extract.add_argument("--d", type=int, default=3)
    p_extract.add_argument("--output", required=True, help="destination state file")
    p_extract.add_argument("--raw", action="store_true", help="skip density validation of the input")
    p_extract.set_defaults(func=cmd_extract)

    p_sweep = sub.add_parser("sweep", help="CSV negativity sweep over diagonal states")
    p_sweep.add_argument("--step", type=float, required=True, help="grid step in (0, 0.5]")
    p_sweep.add_argument("--output", help="CSV destination (stdout when omitted)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="recompute every quantitative claim")
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def cmd_negativity(args) -> int:
    rho = load_density(args.input, raw=args.raw)
    state = embed(rho, args.d)
    report = negativity(state.rho, (args.d, args.d))
    negs = ", ".join(f"{x:.17g}" for x in report.neg_eigenvalues) or "none"
    print(f"negativity       = {report.negativity:.17g}")
    print(f"log_negativity   = {report.log_negativity:.17g}")
    print(f"neg_eigenvalues  = {negs}")
    print(f"entangled        = {'true' if report.entangled else 'false'}")
    return 0


def cmd_embed(args) -> int:
    rho = load_density(args.input, raw=args.raw)
    state = embed(rho, args.d)
    write_matrix(args.output, state.rho.mat)
    print(f"wrote {state.rho.dim}x{state.rho.dim} embedded state to {args.output}")
    return 0


def cmd_extract(args) -> int:
    rho = load_density(args.input, raw=args.raw)
    recovered = extract(rho, d=args.d)
    write_matrix(args.output, recovered.mat)
    print(f"wrote {recovered.dim}x{recovered.dim} extracted state to {args.output}")
    return 0


def cmd_sweep(args) -> int:
    if not 0.0 < args.step <= 0.5:
        print(f"error: --step must be in (0, 0.5], got {args.step!r}", file=sys.stderr)
        return 4
    text = sweep_csv(args.step)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    rows, ok = run_all(args.seed)
    print(format_table(rows))
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _VALIDATION_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except _DIMENSION_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())
