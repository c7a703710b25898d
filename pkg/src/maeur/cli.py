"""Command line interface for single evaluations, sweeps and verification.

Exit codes: 0 success, 1 invariant violation (oracle mismatch or no
crossover), 2 bad arguments.
"""

from __future__ import annotations

import argparse
import sys

from . import analytic, scan
from .channels import PauliChannel

_PROCESS_NAMES = {"su": "single_use", "sw": "switch", "tf": "timeflip"}


def _parse_alpha(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("alpha must be three comma-separated numbers, e.g. 0.5,0.3,0.2")
    return tuple(float(v) for v in parts)


def _channel(args) -> PauliChannel:
    try:
        return PauliChannel(args.p, args.alpha)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _cmd_eval(args) -> int:
    ch = _channel(args)
    process = _PROCESS_NAMES[args.process]
    report = analytic.uncertainty_closed_form(scan._COEFFS[process](ch))
    if args.oracle_check:
        ref = scan.oracle_report(ch, process)
        if abs(ref.total_u - report.total_u) > args.tol or abs(ref.bound_b - report.bound_b) > args.tol:
            print("error: closed form disagrees with the brute-force oracle", file=sys.stderr)
            return 1
    print(f"process      : {process}")
    print(f"p            : {ch.p:.12g}")
    print(f"alpha        : ({ch.alpha[0]:.12g}, {ch.alpha[1]:.12g}, {ch.alpha[2]:.12g})")
    print(f"S(X|B)       : {report.s_x_given_b:.12g} bits")
    print(f"S(Z|B)       : {report.s_z_given_b:.12g} bits")
    print(f"total U      : {report.total_u:.12g} bits")
    print(f"bound B      : {report.bound_b:.12g} bits")
    print(f"slack U - B  : {report.slack:.12g} bits")
    if args.out:
        spec = _spec_common(args, process=process, alpha=ch.alpha, p_grid=(ch.p, ch.p, 1))
        scan.emit_csv(scan.sweep_1d(spec)[:1], args.out)
    return 0


def _spec_common(args, **overrides) -> scan.SweepSpec:
    base = dict(
        oracle_check=args.oracle_check,
        tol=args.tol,
    )
    base.update(overrides)
    return scan.SweepSpec(**base)


def _cmd_sweep(args) -> int:
    spec = _spec_common(
        args,
        process=_PROCESS_NAMES[args.process],
        alpha=args.alpha,
        p_grid=(args.pmin, args.pmax, args.steps),
    )
    scan.emit_csv(scan.sweep_1d(spec), args.out)
    return 0


def _cmd_simplex(args) -> int:
    spec = _spec_common(
        args,
        process=f"compare_{_PROCESS_NAMES[args.compare]}",
        fixed_p=args.p,
        simplex_step=args.step,
    )
    scan.emit_csv(scan.scan_simplex(spec), args.out)
    return 0


def _cmd_crossover(args) -> int:
    quantity = {"x": "x_uncertainty", "total": "total"}[args.quantity]
    try:
        root = scan.find_crossover(args.alpha, _PROCESS_NAMES[args.compare], quantity)
    except scan.NoCrossover as exc:
        print(f"no crossover: {exc}", file=sys.stderr)
        return 1
    print(f"{root:.6f}")
    return 0


def _cmd_verify(args) -> int:
    failures = scan.verify_oracle_equivalence(args.samples, args.seed, tol=args.tol)
    if failures:
        for line in failures:
            print(f"MISMATCH {line}", file=sys.stderr)
        print(f"{len(failures)} mismatches over {args.samples} samples", file=sys.stderr)
        return 1
    print(f"ok: {args.samples} random channels, all three processes match the oracle")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maeur",
        description="Entropic uncertainty with a quantum memory under Pauli noise, "
        "the quantum switch, and the quantum time-flip.",
    )
    parser.add_argument("--tol", type=float, default=1e-9, help="oracle comparison tolerance")
    parser.add_argument(
        "--no-oracle-check", dest="oracle_check", action="store_false",
        help="skip brute-force spot checks (faster for large scans)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one channel/process point")
    p_eval.add_argument("--process", choices=("su", "sw", "tf"), required=True)
    p_eval.add_argument("--p", type=float, required=True)
    p_eval.add_argument("--alpha", type=_parse_alpha, required=True)
    p_eval.add_argument("--out", help="also write a single-row CSV")
    p_eval.set_defaults(func=_cmd_eval)

    p_sweep = sub.add_parser("sweep", help="1-D sweep over p at fixed alpha")
    p_sweep.add_argument("--process", choices=("su", "sw", "tf"), required=True)
    p_sweep.add_argument("--alpha", type=_parse_alpha, required=True)
    p_sweep.add_argument("--pmin", type=float, default=0.0)
    p_sweep.add_argument("--pmax", type=float, default=1.0)
    p_sweep.add_argument("--steps", type=int, default=500)
    p_sweep.add_argument("--out", required=True)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_simplex = sub.add_parser("simplex", help="2-D bias-simplex scan at fixed p")
    p_simplex.add_argument("--compare", choices=("sw", "tf"), required=True)
    p_simplex.add_argument("--p", type=float, required=True)
    p_simplex.add_argument("--step", type=int, default=200, help="grid denominator N (spacing 1/N)")
    p_simplex.add_argument("--out", required=True)
    p_simplex.set_defaults(func=_cmd_simplex)

    p_cross = sub.add_parser("crossover", help="bisection root of the advantage difference")
    p_cross.add_argument("--compare", choices=("sw", "tf"), required=True)
    p_cross.add_argument("--alpha", type=_parse_alpha, required=True)
    p_cross.add_argument("--quantity", choices=("x", "total"), default="total")
    p_cross.set_defaults(func=_cmd_crossover)

    p_verify = sub.add_parser("verify", help="oracle-equivalence suite on random channels")
    p_verify.add_argument("--samples", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
