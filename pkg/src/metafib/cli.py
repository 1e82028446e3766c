"""Command-line front end.

Subcommands: compute, construct, verify {theorem|golomb|lemmas|wellposed},
detect. Sequences travel as b-files (stdout or a file); diagnostics go to
stderr. Exit codes are stable:

    0  success
    1  verification mismatch
    2  usage, parse, or validation error
    3  detection found no structure within bounds
    4  underflow under the strict policy
    5  forward reference
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from metafib.bfile import BFileError, format_bfile, read_bfile
from metafib.closedform import (
    check_piece_lower_bound,
    check_piece_pascal,
    closed_form_buffer,
)
from metafib.detect import detect_quasipoly
from metafib.engine import (
    ExplicitProvenance,
    ForwardReferenceError,
    NestedRecurrence,
    SequenceBuffer,
    UnderflowError,
    UnderflowPolicy,
    compute,
)
from metafib.exact import format_poly
from metafib.harness import verify_construction, verify_golomb, wellposed_scan

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NOT_FOUND = 3
EXIT_UNDERFLOW = 4
EXIT_FORWARD_REF = 5


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _policy(text: str) -> UnderflowPolicy:
    try:
        return UnderflowPolicy(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"policy must be 'zero' or 'strict', got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metafib",
        description="Nested meta-Fibonacci recurrences: exact computation, "
        "quasipolynomial construction, verification, and detection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="evaluate a recurrence from an initial condition")
    p_compute.add_argument("--shifts", type=_int_list, default=[1, 2],
                           help="inner shifts, comma-separated (default 1,2)")
    p_compute.add_argument("--init", type=_int_list, required=True,
                           help="initial condition, comma-separated")
    p_compute.add_argument("-n", type=int, required=True, help="number of terms")
    p_compute.add_argument("--policy", type=_policy, default=UnderflowPolicy.ZERO,
                           help="underflow policy: zero (default) or strict")
    p_compute.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p_compute.set_defaults(func=cmd_compute)

    p_construct = sub.add_parser("construct", help="emit a closed-form solution of degree d")
    p_construct.add_argument("-d", type=int, required=True, help="degree, >= 1")
    p_construct.add_argument("-n", type=int, required=True, help="number of terms")
    p_construct.add_argument("--weights", type=_int_list, default=None,
                             help="piece weights w_1,w_2,... (default 3i+2)")
    p_construct.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="run a verification campaign")
    vsub = p_verify.add_subparsers(dest="subject", required=True)

    v_theorem = vsub.add_parser("theorem", help="closed form vs engine for one degree")
    v_theorem.add_argument("-d", type=int, required=True)
    v_theorem.add_argument("-n", type=int, required=True)
    v_theorem.add_argument("--weights", type=_int_list, default=None)
    v_theorem.set_defaults(func=cmd_verify_theorem)

    v_golomb = vsub.add_parser("golomb", help="engine vs Golomb's quasilinear pieces")
    v_golomb.add_argument("-n", type=int, required=True)
    v_golomb.set_defaults(func=cmd_verify_golomb)

    v_lemmas = vsub.add_parser("lemmas", help="piece recurrence and lower-bound sweeps")
    v_lemmas.add_argument("--d-max", type=int, default=5)
    v_lemmas.add_argument("--k-max", type=int, default=6)
    v_lemmas.add_argument("--n-max", type=int, default=200)
    v_lemmas.set_defaults(func=cmd_verify_lemmas)

    v_well = vsub.add_parser("wellposed", help="scan for a(n) > n overshoots")
    v_well.add_argument("--init", type=_int_list, default=[1, 1])
    v_well.add_argument("-n", type=int, required=True)
    v_well.set_defaults(func=cmd_verify_wellposed)

    p_detect = sub.add_parser("detect", help="find eventual quasipolynomial structure")
    src = p_detect.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", default=None, help="b-file to analyze ('-' for stdin)")
    src.add_argument("--gen", default=None,
                     help="generation spec, e.g. 'construct d=3 n=500' or "
                     "'compute shifts=1,2 init=1,1 n=200'")
    p_detect.add_argument("--q-max", type=int, required=True, help="largest period to try")
    p_detect.add_argument("--deg-max", type=int, required=True, help="degree cap per class")
    p_detect.add_argument("--min-confirm", type=int, default=20,
                          help="matching samples required outside each window (default 20)")
    p_detect.set_defaults(func=cmd_detect)

    return parser


def _emit(terms: Sequence[int], output: Optional[str]) -> None:
    text = format_bfile(terms)
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_compute(args: argparse.Namespace) -> int:
    try:
        rec = NestedRecurrence(tuple(args.shifts))
        buf = compute(rec, args.init, args.n, args.policy)
    except UnderflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDERFLOW
    except ForwardReferenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORWARD_REF
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(buf.to_list(), args.output)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        buf = closed_form_buffer(args.d, args.n, args.weights)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(buf.to_list(), args.output)
    return EXIT_OK


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    try:
        report = verify_construction(args.d, args.n, args.weights)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"subject: {report.subject}")
    print(f"checked: m in [1, {report.range_checked[1]}]")
    print(f"first valid index: {report.first_valid_index}")
    if report.match:
        print("match: engine equals closed form on the whole range")
        return EXIT_OK
    index, expected, actual = report.first_mismatch
    print(f"MISMATCH at m={index}: closed form {expected}, engine {actual}")
    return EXIT_MISMATCH


def cmd_verify_golomb(args: argparse.Namespace) -> int:
    try:
        report = verify_golomb(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"subject: {report.subject}")
    print(f"checked: m in [1, {report.range_checked[1]}]")
    print(f"first valid index: {report.first_valid_index}")
    if report.match:
        print("match: engine equals the quasilinear pieces on the whole range")
        return EXIT_OK
    index, expected, actual = report.first_mismatch
    print(f"MISMATCH at m={index}: pieces {expected}, engine {actual}")
    return EXIT_MISMATCH


def cmd_verify_lemmas(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for d in range(1, args.d_max + 1):
        pascal = check_piece_pascal(d, args.k_max, args.n_max)
        if not pascal.holds:
            k, n, lhs, rhs = pascal.counterexample
            print(f"piece recurrence FAILS at d={d}, k={k}, n={n}: {lhs} != {rhs}")
            status = EXIT_MISMATCH
    if status == EXIT_OK:
        print(f"piece recurrence holds for d <= {args.d_max}, "
              f"k <= {args.k_max}, n <= {args.n_max}")
    witness_sets = []
    for d in range(1, args.d_max + 1):
        bound = check_piece_lower_bound(d, args.k_max, args.n_max)
        if not bound.holds:
            k, n, value, low = bound.counterexample
            print(f"lower bound FAILS at d={d}, k={k}, n={n}: {value} < {low}")
            status = EXIT_MISMATCH
        witness_sets.append(bound.equality_witnesses)
    if status == EXIT_OK:
        print(f"lower bound holds for d <= {args.d_max}, "
              f"k <= {args.k_max}, n <= {args.n_max}")
        shared = witness_sets[0]
        if all(w == shared for w in witness_sets):
            at_zero = sorted(k for k, n in shared if n == 0)
            others = sorted((k, n) for k, n in shared if n != 0)
            print(f"equality witnesses (every d): n=0 for k in {at_zero}; "
                  + (f"also {others}" if others else "no others"))
        else:
            for d, wits in enumerate(witness_sets, start=1):
                print(f"equality witnesses d={d}: {sorted(wits)}")
    return status


def cmd_verify_wellposed(args: argparse.Namespace) -> int:
    try:
        hit = wellposed_scan(args.init, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if hit is None:
        print(f"no overshoot: a(n) <= n for every computed n <= {args.n}")
        return EXIT_OK
    print(f"overshoot at n={hit}: a({hit}) > {hit}")
    return EXIT_MISMATCH


def _parse_gen_spec(spec: str) -> SequenceBuffer:
    tokens = spec.split()
    if not tokens:
        raise ValueError("empty generation spec")
    kind, pairs = tokens[0], tokens[1:]
    options: dict[str, str] = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"malformed generation option {pair!r}; expected key=value")
        key, _, value = pair.partition("=")
        options[key] = value
    if kind == "construct":
        missing = {"d", "n"} - options.keys()
        if missing:
            raise ValueError(f"construct spec needs {sorted(missing)}")
        weights = _int_list(options["weights"]) if "weights" in options else None
        return closed_form_buffer(int(options["d"]), int(options["n"]), weights)
    if kind == "compute":
        missing = {"init", "n"} - options.keys()
        if missing:
            raise ValueError(f"compute spec needs {sorted(missing)}")
        shifts = _int_list(options.get("shifts", "1,2"))
        policy = UnderflowPolicy(options.get("policy", "zero"))
        return compute(
            NestedRecurrence(tuple(shifts)),
            _int_list(options["init"]),
            int(options["n"]),
            policy,
        )
    raise ValueError(f"unknown generation spec kind {kind!r}")


def cmd_detect(args: argparse.Namespace) -> int:
    try:
        if args.gen is not None:
            buf = _parse_gen_spec(args.gen)
        elif args.input == "-":
            terms = read_bfile(sys.stdin)
            buf = SequenceBuffer(terms, ExplicitProvenance("b-file <stdin>"))
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                terms = read_bfile(fh)
            buf = SequenceBuffer(terms, ExplicitProvenance(f"b-file {args.input}"))
    except UnderflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDERFLOW
    except ForwardReferenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORWARD_REF
    except (BFileError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        fit = detect_quasipoly(buf, args.q_max, args.deg_max, args.min_confirm)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if fit is None:
        print(f"no quasipolynomial structure found with period <= {args.q_max}, "
              f"degree <= {args.deg_max}, min confirmations {args.min_confirm}")
        return EXIT_NOT_FOUND
    print(f"period {fit.period}, onset {fit.onset}, confirmed {fit.confirmed}")
    for r in range(fit.period):
        print(f"p_{r} = {format_poly(fit.residue_polys[r])}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
