"""Command-line front end: plan ingestion, single computations, sweeps, self-checks.

Plan file format (JSON)::

    {"f_min_hz": 1000, "segments": [{"start_index": 54000, "count": 32768}, ...]}

Exit codes: 0 ok, 1 verify failure, 2 plan parse error, 3 invalid selection,
4 capability exceeded (plan too large to sieve).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import _selfcheck
from .estimator import (
    ProbabilityEstimate,
    SieveLimitError,
    prob_asymptotic,
    prob_exact,
    prob_montecarlo,
    sweep,
)
from .ranging import compute_ud
from .spectrum import (
    PlanError,
    SelectionError,
    load_plan,
    sample_selection,
    selection_from_indices,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PLAN_ERROR = 2
EXIT_SELECTION_ERROR = 3
EXIT_CAPABILITY = 4

METHODS = ("exact", "asymptotic", "monte_carlo")


def _parse_m_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"m-range must look like A..B, got {text!r}"
        ) from exc


def _write_out(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_prob_json(m: int, estimates: list[ProbabilityEstimate]) -> str:
    payload = {
        "m": m,
        "estimates": [
            {
                "method": e.method,
                "value": e.value,
                "trials": e.trials,
                "std_error": e.std_error,
                "exact_numerator": (
                    None if e.exact_numerator is None else str(e.exact_numerator)
                ),
                "exact_denominator": (
                    None if e.exact_denominator is None else str(e.exact_denominator)
                ),
            }
            for e in estimates
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cmd_ud(args: argparse.Namespace) -> int:
    plan = load_plan(args.plan)
    if args.indices:
        indices = [int(s) for s in args.indices.split(",")]
        selection = selection_from_indices(plan, indices)
    elif args.select:
        rng = np.random.default_rng(np.random.SeedSequence([args.seed]))
        selection = sample_selection(plan, args.select, rng)
    else:
        raise SelectionError("provide --indices or --select")
    result = compute_ud(plan, selection)
    lines = [
        f"indices = {','.join(str(k) for k in selection.indices)}",
        f"gcd = {result.gcd_k}",
        f"ud_m = {result.ud_m!r}",
    ]
    if result.ud_m >= 1e4:
        lines.append(f"ud_km = {result.ud_m / 1000.0!r}")
    lines.append(f"is_max = {'true' if result.is_max else 'false'}")
    _write_out("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_prob(args: argparse.Namespace) -> int:
    methods = [m.strip() for m in args.methods.split(",")]
    for method in methods:
        if method not in METHODS:
            raise argparse.ArgumentTypeError(f"unknown method {method!r}")
    needs_plan = any(m in methods for m in ("exact", "monte_carlo"))
    plan = load_plan(args.plan) if needs_plan else None
    if plan is None and args.plan:
        plan = load_plan(args.plan)

    if "monte_carlo" in methods and not args.trials:
        raise argparse.ArgumentTypeError("--trials is required for monte_carlo")
    if "asymptotic" in methods and args.m == 2:
        print(
            "warning: m = 2 is outside the asymptotic error analysis regime "
            "(it assumes more than 2 frequencies); 1/zeta(2) is still exact "
            "as a limit value",
            file=sys.stderr,
        )

    estimates = []
    for method in methods:
        if method == "exact":
            estimates.append(prob_exact(plan, args.m))
        elif method == "asymptotic":
            estimates.append(prob_asymptotic(args.m))
        else:
            estimates.append(
                prob_montecarlo(
                    plan, args.m, args.trials, args.seed, workers=args.workers
                )
            )

    if args.format == "json":
        _write_out(_render_prob_json(args.m, estimates), args.out)
    else:
        lines = [f"m = {args.m}"]
        for e in estimates:
            line = f"P_{e.method} = {e.value:.10f}"
            if e.method == "monte_carlo":
                line += f"  (trials={e.trials}, stderr={e.std_error:.2e})"
            if e.method == "exact":
                line += f"  ({e.exact_numerator}/{e.exact_denominator})"
            lines.append(line)
        _write_out("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    plans = [load_plan(p) for p in args.plan]
    rows = sweep(plans, args.m_range, args.trials, args.seed, workers=args.workers)
    if args.format == "json":
        payload = [
            {
                "L": r.n_segments,
                "N": r.n_frequencies,
                "M": r.m,
                "P_exact": r.exact,
                "P_asymptotic": r.asymptotic,
                "P_mc": r.monte_carlo,
                "stderr": r.std_error,
                "trials": r.trials,
                "seed": r.seed,
            }
            for r in rows
        ]
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = ["L,N,M,P_exact,P_asymptotic,P_mc,stderr,trials,seed"]
        for r in rows:
            lines.append(
                f"{r.n_segments},{r.n_frequencies},{r.m},"
                f"{r.exact:.10f},{r.asymptotic:.10f},{r.monte_carlo:.10f},"
                f"{r.std_error:.10f},{r.trials},{r.seed}"
            )
        text = "\n".join(lines) + "\n"
    _write_out(text, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = _selfcheck.run_checks(quick=args.quick, inject_fault=args.inject_fault)
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        detail = f": {r.detail}" if r.detail else ""
        print(f"{status} {r.name}{detail}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udrange",
        description=(
            "Unambiguous distance of phase-based ranging with hopping "
            "frequencies, and the probability it attains c/f_min."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ud = sub.add_parser("ud", help="UD of one selection of frequencies")
    p_ud.add_argument("--plan", required=True, help="plan JSON file")
    p_ud.add_argument("--indices", help="comma-separated grid indices")
    p_ud.add_argument("--select", type=int, help="draw this many indices at random")
    p_ud.add_argument("--seed", type=int, default=0)
    p_ud.add_argument("--out")
    p_ud.set_defaults(func=cmd_ud)

    p_prob = sub.add_parser("prob", help="probability that UD is maximal")
    p_prob.add_argument("--plan", help="plan JSON file")
    p_prob.add_argument("-m", type=int, required=True, help="frequencies per measurement")
    p_prob.add_argument("--methods", default="exact,asymptotic")
    p_prob.add_argument("--trials", type=int, default=0)
    p_prob.add_argument("--seed", type=int, default=0)
    p_prob.add_argument("--workers", type=int, default=1)
    p_prob.add_argument("--format", choices=("text", "json"), default="text")
    p_prob.add_argument("--out")
    p_prob.set_defaults(func=cmd_prob)

    p_sweep = sub.add_parser("sweep", help="(plan, M) sweep table for plotting")
    p_sweep.add_argument("--plan", action="append", required=True)
    p_sweep.add_argument("--m-range", type=_parse_m_range, required=True, dest="m_range")
    p_sweep.add_argument("--trials", type=int, default=100_000)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the built-in invariant checks")
    p_verify.add_argument("--quick", action="store_true")
    p_verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PlanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PLAN_ERROR
    except SelectionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SELECTION_ERROR
    except SieveLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
        raise AssertionError  # parser.error exits


if __name__ == "__main__":
    sys.exit(main())
