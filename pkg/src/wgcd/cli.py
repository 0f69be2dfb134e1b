"""Command-line surface: compute, normalize, verify, explain, bench, selftest.

Exit codes: 0 success, 1 verification or selftest failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from .core import (
    STRATEGIES,
    Counters,
    WeightedTuple,
    normalize,
    verify_wgcd,
    wgcd_auto,
    wgcd_bruteforce,
)
from .selftest import run_selftest

ORACLE_SCAN_LIMIT = 10**7


def _parse_int_list(text: str, what: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed {what} list {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"malformed {what} list {text!r}") from None


def _tuple_from_args(args) -> WeightedTuple:
    weights = _parse_int_list(args.weights, "weights")
    values = _parse_int_list(args.values, "values")
    return WeightedTuple(tuple(values), tuple(weights))


def _compute_d(t: WeightedTuple, strategy: str, seed: int, counters: Counters) -> int:
    if strategy == "oracle":
        return wgcd_bruteforce(t, seed, counters=counters, max_scan=ORACLE_SCAN_LIMIT)
    return STRATEGIES[strategy](t, seed, counters=counters)


def _counters_json(c: Counters) -> dict:
    return {
        "factor_calls": c.factor_calls,
        "max_factored_bits": c.max_factored_bits,
        "gcd_calls": c.gcd_calls,
    }


def _run_compute(args) -> int:
    t = _tuple_from_args(args)
    counters = Counters()
    d = _compute_d(t, args.strategy, args.seed, counters)
    if args.json:
        print(
            json.dumps(
                {
                    "d": str(d),
                    "strategy": args.strategy,
                    "counters": _counters_json(counters),
                }
            )
        )
    else:
        print(d)
    return 0


def _run_normalize(args) -> int:
    t = _tuple_from_args(args)
    normalized, d = normalize(t, args.seed)
    if args.json:
        print(
            json.dumps(
                {"values": [str(v) for v in normalized.values], "d": str(d)}
            )
        )
    else:
        print(f"{','.join(str(v) for v in normalized.values)} d={d}")
    return 0


def _run_verify(args) -> int:
    t = _tuple_from_args(args)
    if args.claim < 1:
        raise ValueError("claim must be >= 1")
    result = verify_wgcd(t, args.claim, args.seed)
    if args.json:
        print(json.dumps({"ok": result.ok, "reason": result.reason}))
    else:
        print("ok" if result.ok else result.reason)
    return 0 if result.ok else 1


def _run_explain(args) -> int:
    t = _tuple_from_args(args)
    result = wgcd_auto(t, args.seed)
    if args.json:
        print(
            json.dumps(
                {
                    "d": str(result.d),
                    "strategy": result.strategy,
                    "steps": [
                        {
                            "rule": step.rule,
                            "values": [str(v) for v in step.values],
                            "weights": list(step.weights),
                        }
                        for step in result.trace.steps
                    ],
                    "counters": _counters_json(result.counters),
                }
            )
        )
    else:
        print(f"d={result.d} strategy={result.strategy}")
        for step in result.trace.steps:
            values = ",".join(str(v) for v in step.values)
            weights = ",".join(str(q) for q in step.weights)
            print(f"  {step.rule}: values={values} weights={weights}")
    return 0


def _run_selftest(args) -> int:
    results = run_selftest(args.seed)
    if args.json:
        print(
            json.dumps(
                [
                    {"case": r.label, "passed": r.passed, "detail": r.detail}
                    for r in results
                ]
            )
        )
    else:
        for r in results:
            if r.passed:
                print(f"PASS {r.label}")
            else:
                print(f"FAIL {r.label}: {r.detail}")
    return 0 if all(r.passed for r in results) else 1


def _run_bench(args) -> int:
    with open(args.spec, "rb") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise ValueError("spec file must hold a JSON array of generator specs")
    specs = [bench_mod.GenSpec.from_json_dict(obj) for obj in raw]
    try:
        records = bench_mod.bench_run(specs, repetitions=args.reps, seed=args.seed)
    except bench_mod.StrategyDisagreement as exc:
        print(exc, file=sys.stderr)
        return 1
    blob = bench_mod.bench_report(records, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(blob)
    else:
        sys.stdout.buffer.write(blob)
        sys.stdout.buffer.write(b"\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wgcd",
        description="Weighted greatest common divisors of integer tuples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def tuple_flags(p, with_strategy=False):
        p.add_argument(
            "--weights", required=True, metavar="Q0,Q1,...",
            help="comma-separated positive integer weights",
        )
        p.add_argument(
            "--values", required=True, metavar="X0,X1,...",
            help="comma-separated integers of unbounded size",
        )
        if with_strategy:
            p.add_argument(
                "--strategy", choices=sorted(STRATEGIES), default="auto",
            )
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("compute", help="weighted gcd of a tuple")
    tuple_flags(p, with_strategy=True)
    p.set_defaults(handler=_run_compute)

    p = sub.add_parser("normalize", help="divide out the weighted gcd")
    tuple_flags(p)
    p.set_defaults(handler=_run_normalize)

    p = sub.add_parser("verify", help="check a claimed weighted gcd")
    tuple_flags(p)
    p.add_argument("--claim", type=int, required=True, metavar="N")
    p.set_defaults(handler=_run_verify)

    p = sub.add_parser("explain", help="show the reduction pipeline")
    tuple_flags(p)
    p.set_defaults(handler=_run_explain)

    p = sub.add_parser("bench", help="run the benchmark harness")
    p.add_argument("--spec", required=True, metavar="FILE",
                   help="JSON array of generator specs")
    p.add_argument("--out", metavar="FILE", help="write the report here")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_run_bench)

    p = sub.add_parser("selftest", help="run the embedded example corpus")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_run_selftest)

    return parser


def _merge_list_flags(argv: list[str]) -> list[str]:
    # argparse mistakes "-5760,13824" for an option; fold the payload of
    # list-taking flags into --flag=value form so negatives parse.
    merged = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--values", "--weights") and i + 1 < len(argv):
            merged.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_list_flags(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
