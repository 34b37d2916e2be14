"""Command-line interface.

Subcommands: triangle rendering, scalar queries (fib / fibonomial /
entry-point / valuation / expand / lucas), and conjecture sweeps.

Exit codes: 0 for a clean run, 1 when a sweep or witness search finds a
counterexample (that is a successful computation, not an error), 2 for
usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .conjecture import find_counterexample, lucas_binomial_residue, verify_conjecture
from .core import fib, fib_mod, fibonomial, fibonomial_row_mod
from .radix import expand_base_fp, expand_base_p
from .render import FORMATS, KINDS, RenderSpec, render
from .valuation import carry_valuation, entry_point, nu_p_fibonomial_oracle

SWEEP_DIR_ENV = "FIBONOMIAL_SWEEP_DIR"
DEFAULT_EXACT_CAP = 1000

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


def _emit(args: argparse.Namespace, value, payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(value)


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise ValueError(
            f"{what} at n={n} exceeds the exact-size cap {cap}; "
            "pass --mod for residues or raise --cap")


def _cmd_fib(args: argparse.Namespace) -> int:
    if args.mod is not None:
        value = fib_mod(args.n, args.mod)
    else:
        _check_cap(args.n, args.cap, "exact Fibonacci number")
        value = fib(args.n)
    _emit(args, value, {"n": args.n, "mod": args.mod, "value": value})
    return EXIT_OK


def _cmd_fibonomial(args: argparse.Namespace) -> int:
    if args.mod is not None:
        if args.k > args.n:
            value = 0
        else:
            value = fibonomial_row_mod(args.n, args.mod).entries[args.k]
    else:
        _check_cap(args.n, args.cap, "exact fibonomial coefficient")
        value = fibonomial(args.n, args.k)
    _emit(args, value,
          {"n": args.n, "k": args.k, "mod": args.mod, "value": value})
    return EXIT_OK


def _cmd_entry_point(args: argparse.Namespace) -> int:
    profile = entry_point(args.p)
    human = (f"p={profile.p} p_star={profile.p_star} "
             f"nu_p_F_pstar={profile.nu_p_F_pstar} relation={profile.relation.value}")
    _emit(args, human, profile.to_json())
    return EXIT_OK


def _cmd_valuation(args: argparse.Namespace) -> int:
    if args.k > args.n:
        raise ValueError(
            f"coefficient at (n={args.n}, k={args.k}) is zero and has no valuation")
    profile = entry_point(args.prime)
    method = args.method
    if method is None:
        method = "oracle" if args.prime == 2 else "carry"
    if method == "carry":
        val = carry_valuation(args.k, args.n - args.k, profile)
    else:
        _check_cap(args.n, args.cap, "oracle valuation")
        val = nu_p_fibonomial_oracle(args.n, args.k, args.prime)
    _emit(args, val.exponent,
          {"n": args.n, "k": args.k, "p": args.prime,
           "method": val.method, "exponent": val.exponent})
    return EXIT_OK


def _cmd_expand(args: argparse.Namespace) -> int:
    if args.base == "p":
        vec = expand_base_p(args.n, args.prime)
    else:
        vec = expand_base_fp(args.n, entry_point(args.prime))
    human = "(" + " ".join(str(d) for d in vec.digits) + ")"
    _emit(args, human, vec.to_json())
    return EXIT_OK


def _cmd_lucas(args: argparse.Namespace) -> int:
    residue = lucas_binomial_residue(args.n, args.k, args.prime)
    _emit(args, residue,
          {"n": args.n, "k": args.k, "p": args.prime, "residue": residue})
    return EXIT_OK


def _cmd_triangle(args: argparse.Namespace) -> int:
    if args.mod is None:
        _check_cap(args.rows - 1, args.cap, "exact triangle row")
    spec = RenderSpec(rows=args.rows, kind=args.kind,
                      modulus=args.mod, format=args.format)
    document = render(spec)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(document)
    else:
        sys.stdout.write(document)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    profile = entry_point(args.prime)

    if args.counterexample:
        n, k, verdict = find_counterexample(profile)
        print(f"p={profile.p} p_star={profile.p_star} "
              f"relation={profile.relation.value}")
        print(f"witness n={n} k={k}: lhs_divisible={verdict.lhs_divisible} "
              f"rhs_divisible={verdict.rhs_divisible} agrees={verdict.agrees}")
        return EXIT_COUNTEREXAMPLE if not verdict.agrees else EXIT_OK

    if args.rows is None:
        raise ValueError("--rows is required unless --counterexample is given")
    if profile.relation.value == "LESS":
        raise ValueError(
            f"entry point {profile.p_star} of {profile.p} is below the prime, so "
            "the biconditional provably fails; rerun with --counterexample")
    record = verify_conjecture(profile, args.rows, jobs=args.jobs,
                               oracle_stride=args.oracle_stride)
    out = args.out
    if out is None:
        directory = os.environ.get(SWEEP_DIR_ENV, ".")
        out = os.path.join(directory, f"sweep_p{args.prime}_rows{args.rows}.jsonl")
    with open(out, "w", encoding="ascii") as fh:
        record.write_jsonl(fh)
    print(f"p={record.p} rows={record.rows} method={record.method} "
          f"counterexamples={len(record.counterexamples)} "
          f"seconds={record.seconds:.2f}")
    print(f"wrote {out}")
    return EXIT_COUNTEREXAMPLE if record.counterexamples else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibonomial",
        description="Fibonomial triangles, entry-point digit expansions, "
                    "carry-counted valuations, and divisibility sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true",
                       help="emit a machine-readable JSON object")

    def add_cap(p: argparse.ArgumentParser) -> None:
        p.add_argument("--cap", type=int, default=DEFAULT_EXACT_CAP,
                       help="exact-mode size cap (default %(default)s)")

    p = sub.add_parser("fib", help="Fibonacci number, exact or mod m")
    p.add_argument("n", type=int)
    p.add_argument("--mod", type=int, default=None)
    add_cap(p)
    add_json(p)
    p.set_defaults(func=_cmd_fib)

    p = sub.add_parser("fibonomial", help="fibonomial coefficient, exact or mod m")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--mod", type=int, default=None)
    add_cap(p)
    add_json(p)
    p.set_defaults(func=_cmd_fibonomial)

    p = sub.add_parser("entry-point", help="entry point profile of a prime")
    p.add_argument("p", type=int)
    add_json(p)
    p.set_defaults(func=_cmd_entry_point)

    p = sub.add_parser("valuation",
                       help="p-adic valuation of a fibonomial coefficient")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--method", choices=("carry", "oracle"), default=None,
                   help="carry counting (odd p, default) or the exact oracle")
    add_cap(p)
    add_json(p)
    p.set_defaults(func=_cmd_valuation)

    p = sub.add_parser("expand", help="digit expansion of n")
    p.add_argument("n", type=int)
    p.add_argument("--base", choices=("p", "Fp"), required=True,
                   help="uniform base p, or the entry-point base of p")
    p.add_argument("--prime", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("lucas", help="binomial coefficient mod p by digits")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--prime", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_lucas)

    p = sub.add_parser("triangle", help="render a coefficient triangle")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default="fibonomial")
    p.add_argument("--mod", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="ascii")
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    add_cap(p)
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("verify", help="sweep the divisibility biconditional")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--rows", type=int, default=None)
    p.add_argument("--out", default=None,
                   help=f"JSONL path (default: ${SWEEP_DIR_ENV} or cwd)")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--oracle-stride", type=int, default=37,
                   help="oracle cross-check every Nth pair (0 disables)")
    p.add_argument("--counterexample", action="store_true",
                   help="construct the witness for primes with entry point "
                        "below the prime")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own message
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
