"""Weighted greatest common divisors of integer tuples.

The weighted gcd of (x_0, ..., x_n) under positive weights (q_0, ..., q_n)
is the largest integer d with d**q_i dividing x_i for every coordinate.
This package computes it through several cross-checkable strategies,
exposes the wgcd-preserving tuple reductions behind the fast path, and
ships known-answer generators plus an instrumented benchmark harness.
"""

from .bench import (
    BenchRecord,
    GenSpec,
    StrategyDisagreement,
    StrategyRun,
    bench_report,
    bench_run,
    gen_adversarial,
    gen_known,
    gen_random,
    known_answer_tuple,
    parse_report,
)
from .core import (
    STRATEGIES,
    Counters,
    ReductionTrace,
    TraceStep,
    VerifyResult,
    WeightedTuple,
    WeightVector,
    WgcdResult,
    abs_values,
    fold_merge,
    normalize,
    reduce_gcd_prefix,
    reduce_pair_gcd,
    reduce_pair_remainder,
    reduce_suffix_gcd,
    sort_by_weight,
    verify_wgcd,
    weighted_gcd,
    wgcd_auto,
    wgcd_bruteforce,
    wgcd_fold,
    wgcd_full_factorization,
    wgcd_gcd_factorization,
    wgcd_lcm_power,
    wgcd_single,
)
from .numtheory import (
    Factorization,
    factor,
    gcd,
    gcd_many,
    ipow,
    iroot,
    is_prime,
    valuation,
)
from .selftest import CORPUS, run_selftest

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "CORPUS",
    "Counters",
    "Factorization",
    "GenSpec",
    "ReductionTrace",
    "STRATEGIES",
    "StrategyDisagreement",
    "StrategyRun",
    "TraceStep",
    "VerifyResult",
    "WeightVector",
    "WeightedTuple",
    "WgcdResult",
    "abs_values",
    "bench_report",
    "bench_run",
    "factor",
    "fold_merge",
    "gcd",
    "gcd_many",
    "gen_adversarial",
    "gen_known",
    "gen_random",
    "ipow",
    "iroot",
    "is_prime",
    "known_answer_tuple",
    "normalize",
    "parse_report",
    "reduce_gcd_prefix",
    "reduce_pair_gcd",
    "reduce_pair_remainder",
    "reduce_suffix_gcd",
    "run_selftest",
    "sort_by_weight",
    "valuation",
    "verify_wgcd",
    "weighted_gcd",
    "wgcd_auto",
    "wgcd_bruteforce",
    "wgcd_fold",
    "wgcd_full_factorization",
    "wgcd_gcd_factorization",
    "wgcd_lcm_power",
    "wgcd_single",
]
