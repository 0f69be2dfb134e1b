"""Weighted-gcd domain model.

A weighted tuple assigns a positive integer weight q_i to each coordinate
x_i; its weighted gcd is the largest d with d**q_i dividing x_i for every
i.  This module provides that quantity through several independent,
cross-checkable strategies, the wgcd-preserving tuple rewrites the fast
strategies are built from, plus normalization and verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .numtheory import factor, gcd_many, iroot, lcm_many, valuation


@dataclass(frozen=True)
class WeightVector:
    """Ordered positive integer weights q_0..q_n."""

    q: tuple[int, ...]

    def __post_init__(self):
        q = tuple(int(w) for w in self.q)
        if not q:
            raise ValueError("weight vector must not be empty")
        if any(w < 1 for w in q):
            raise ValueError(f"weights must be positive, got {q}")
        object.__setattr__(self, "q", q)

    def __len__(self) -> int:
        return len(self.q)

    def __iter__(self):
        return iter(self.q)

    def __getitem__(self, i: int) -> int:
        return self.q[i]

    @property
    def common_divisor(self) -> int:
        """gcd of the weights."""
        return gcd_many(self.q)

    @property
    def common_multiple(self) -> int:
        """lcm of the weights."""
        return lcm_many(self.q)

    def is_sorted(self) -> bool:
        return all(a <= b for a, b in zip(self.q, self.q[1:]))


def _as_weights(w) -> WeightVector:
    return w if isinstance(w, WeightVector) else WeightVector(tuple(w))


@dataclass(frozen=True)
class WeightedTuple:
    """Integers x_0..x_n paired coordinate-wise with weights; not all zero."""

    values: tuple[int, ...]
    weights: WeightVector

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        weights = _as_weights(self.weights)
        if len(values) != len(weights):
            raise ValueError(
                f"{len(values)} values but {len(weights)} weights"
            )
        if not any(values):
            raise ValueError("the all-zero tuple has no weighted gcd")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.values)

    def pairs(self):
        return zip(self.values, self.weights)


@dataclass
class Counters:
    """Instrumentation for one strategy run."""

    factor_calls: int = 0
    max_factored_bits: int = 0
    gcd_calls: int = 0


class TraceStep(NamedTuple):
    rule: str
    values: tuple[int, ...]
    weights: tuple[int, ...]


TRACE_RULES = (
    "abs",
    "permute",
    "suffix-gcd",
    "pair-remainder",
    "gcd-prefix",
    "fold",
    "fastpath-one",
    "fastpath-equal-weights",
)


@dataclass(frozen=True)
class ReductionTrace:
    """Ordered rewrite steps; replaying them from the input reproduces
    each intermediate tuple."""

    steps: tuple[TraceStep, ...] = ()


@dataclass(frozen=True)
class WgcdResult:
    d: int
    strategy: str
    trace: ReductionTrace
    counters: Counters


class VerifyResult(NamedTuple):
    ok: bool
    reason: Optional[str]  # "divisibility" or "maximality" when not ok


# ---------------------------------------------------------------------------
# counted kernel access

def _gcd2(a: int, b: int, counters: Optional[Counters]) -> int:
    if counters is not None:
        counters.gcd_calls += 1
    return math.gcd(a, b)


def _gcd_all(xs, counters: Optional[Counters]) -> int:
    g = 0
    for x in xs:
        g = _gcd2(g, x, counters)
        if g == 1:
            break
    return g


def _factor(n: int, seed: int, counters: Optional[Counters]):
    if counters is not None:
        counters.factor_calls += 1
        bits = n.bit_length()
        if bits > counters.max_factored_bits:
            counters.max_factored_bits = bits
    return factor(n, seed)


# ---------------------------------------------------------------------------
# strategies

def wgcd_bruteforce(
    t: WeightedTuple,
    seed: int = 0,
    *,
    counters: Optional[Counters] = None,
    max_scan: Optional[int] = None,
) -> int:
    """Definition-level oracle: scan d downward from the root bound.

    The bound is min over nonzero coordinates of floor(|x_i| ** (1/q_i));
    zero coordinates impose no constraint.  `max_scan` caps the number of
    candidates examined and raises ValueError beyond it.
    """
    del seed  # uniform strategy signature; the scan needs no randomness
    upper = min(iroot(abs(x), q) for x, q in t.pairs() if x)
    if max_scan is not None and upper - 1 > max_scan:
        raise ValueError(
            f"oracle scan of {upper - 1} candidates exceeds the {max_scan} budget"
        )
    constraints = [(abs(x), q) for x, q in t.pairs() if x]
    for d in range(upper, 1, -1):
        if all(x % d**q == 0 for x, q in constraints):
            return d
    return 1


def wgcd_full_factorization(
    t: WeightedTuple, seed: int = 0, *, counters: Optional[Counters] = None
) -> int:
    """Product formula over the factorization of every nonzero coordinate:
    each prime contributes min over coordinates of floor(valuation/weight)."""
    factored = [
        (_factor(abs(x), seed, counters), q) for x, q in t.pairs() if x
    ]
    first, first_q = factored[0]
    exps = {p: e // first_q for p, e in first if e >= first_q}
    for f, q in factored[1:]:
        if not exps:
            break
        exps = {
            p: min(e_min, f.exponent(p) // q)
            for p, e_min in exps.items()
            if f.exponent(p) >= q
        }
    d = 1
    for p, e in exps.items():
        d *= p**e
    return d


def wgcd_gcd_factorization(
    t: WeightedTuple, seed: int = 0, *, counters: Optional[Counters] = None
) -> int:
    """Factor only g = gcd of the values.  Any valid d divides every x_i
    (the weights are >= 1), hence d | g, so g's primes are the only
    candidates; their exponents come from valuations of the coordinates."""
    g = _gcd_all((abs(x) for x in t.values), counters)
    if g == 1:
        return 1
    d = 1
    for p, _ in _factor(g, seed, counters):
        e = min(valuation(p, x) // q for x, q in t.pairs() if x)
        d *= p**e
    return d


def wgcd_lcm_power(
    t: WeightedTuple, seed: int = 0, *, counters: Optional[Counters] = None
) -> int:
    """With m = lcm of the weights, return the largest d with d**m dividing
    G = gcd over nonzero coordinates of |x_i| ** (m / q_i).

    Computed as the product of p ** floor(e_p / m) over G's factorization,
    which provably equals the per-prime min-floor formula; requiring the
    exact equality d**m = G instead would have no solution for tuples such
    as (8, 4) with weights (2, 3).
    """
    m = t.weights.common_multiple
    g_pow = _gcd_all(
        (abs(x) ** (m // q) for x, q in t.pairs() if x), counters
    )
    if g_pow == 1:
        return 1
    d = 1
    for p, e in _factor(g_pow, seed, counters):
        d *= p ** (e // m)
    return d


def wgcd_single(
    x: int, q: int, seed: int = 0, *, counters: Optional[Counters] = None
) -> int:
    """Weighted gcd of a single coordinate: product of p ** floor(e/q)
    over the factorization of |x|."""
    if x == 0:
        raise ValueError("wgcd of a single zero coordinate is undefined")
    if q < 1:
        raise ValueError("weight must be positive")
    a = abs(x)
    if q == 1:
        return a
    d = 1
    for p, e in _factor(a, seed, counters):
        d *= p ** (e // q)
    return d


def fold_merge(
    d_acc: int, x: int, q: int, seed: int = 0, *, counters: Optional[Counters] = None
) -> int:
    """Weighted gcd of the pair (d_acc, x) under weights (1, q).

    Only primes of d_acc survive: each contributes
    min(valuation in d_acc, floor(valuation in x / q)).  x = 0 imposes no
    constraint and returns d_acc unchanged.
    """
    if d_acc < 1:
        raise ValueError("accumulator must be >= 1")
    if q < 1:
        raise ValueError("weight must be positive")
    if x == 0 or d_acc == 1:
        return d_acc
    a = abs(x)
    if q == 1:
        return _gcd2(d_acc, a, counters)
    d = 1
    for p, e in _factor(d_acc, seed, counters):
        d *= p ** min(e, valuation(p, a) // q)
    return d


def wgcd_fold(
    t: WeightedTuple, seed: int = 0, *, counters: Optional[Counters] = None
) -> int:
    """Peel one coordinate at a time: fully factor a single seed coordinate,
    then merge the rest pairwise under weights (1, q_i).

    The seed coordinate is the nonzero one minimizing bit-length / weight,
    the cheapest full factorization on offer.
    """
    nonzero = [(i, abs(x)) for i, x in enumerate(t.values) if x]
    start, x0 = min(nonzero, key=lambda iv: iv[1].bit_length() / t.weights[iv[0]])
    d = wgcd_single(x0, t.weights[start], seed, counters=counters)
    for i, (x, q) in enumerate(t.pairs()):
        if i == start:
            continue
        if d == 1:
            break
        d = fold_merge(d, x, q, seed, counters=counters)
    return d


# ---------------------------------------------------------------------------
# reductions

def abs_values(t: WeightedTuple) -> WeightedTuple:
    """Coordinate-wise absolute value; the weighted gcd is sign-blind."""
    return WeightedTuple(tuple(abs(x) for x in t.values), t.weights)


def sort_by_weight(t: WeightedTuple) -> tuple[WeightedTuple, tuple[int, ...]]:
    """Permute coordinates so the weights ascend, stably on ties.

    Returns the permuted tuple and the permutation (new position -> old
    index).  Applying the same permutation to values and weights leaves
    the weighted gcd unchanged.
    """
    perm = tuple(sorted(range(len(t)), key=lambda i: (t.weights[i], i)))
    permuted = WeightedTuple(
        tuple(t.values[i] for i in perm),
        WeightVector(tuple(t.weights[i] for i in perm)),
    )
    return permuted, perm


def reduce_pair_remainder(x0: int, x1: int, q0: int, q1: int) -> tuple[int, int]:
    """Euclidean step on a pair with q0 < q1: divide the first coordinate
    by the second and keep the remainder.

    Returns (x0 mod x1, x1) when x0 > x1 and (0, x1) when they are equal;
    both preserve the weighted gcd.  When x1 > x0 the pair is returned
    unchanged: reducing x1 mod x0 instead, as one might hope, can grow the
    weighted gcd (e.g. (5, 12) with weights (1, 2) maps to (2, 12), whose
    wgcd is 2 instead of 1), so no remainder step is available there.
    A zero first coordinate signals callers to fall back to the single-
    coordinate wgcd of x1.
    """
    if q0 >= q1:
        raise ValueError("remainder reduction needs q0 < q1")
    if x0 <= 0 or x1 <= 0:
        raise ValueError("remainder reduction needs positive coordinates")
    if x0 > x1:
        return (x0 % x1, x1)
    if x0 == x1:
        return (0, x1)
    return (x0, x1)


def reduce_pair_gcd(x0: int, x1: int, q0: int, q1: int) -> tuple[int, int]:
    """Replace the first coordinate of a q0 < q1 pair by gcd(|x0|, |x1|)."""
    if q0 >= q1:
        raise ValueError("gcd pair reduction needs q0 < q1")
    if x0 == 0 and x1 == 0:
        raise ValueError("gcd pair reduction needs a nonzero coordinate")
    return (math.gcd(x0, x1), x1)


def _require_sorted(t: WeightedTuple, what: str) -> None:
    if not t.weights.is_sorted():
        raise ValueError(f"{what} needs nondecreasing weights, got {t.weights.q}")


def reduce_suffix_gcd(
    t: WeightedTuple, *, counters: Optional[Counters] = None
) -> WeightedTuple:
    """Replace each coordinate by the gcd of its suffix: y_n = |x_n| and
    y_i = gcd(|x_i|, y_{i+1}).

    Needs nondecreasing weights.  The output is a divisor chain
    (y_i | y_{i+1}, hence y_0 <= ... <= y_n) with the same weighted gcd.
    """
    _require_sorted(t, "suffix-gcd reduction")
    ys = [abs(x) for x in t.values]
    for i in range(len(ys) - 2, -1, -1):
        ys[i] = _gcd2(ys[i], ys[i + 1], counters)
    return WeightedTuple(tuple(ys), t.weights)


def reduce_gcd_prefix(
    t: WeightedTuple, *, counters: Optional[Counters] = None
) -> WeightedTuple:
    """Replace the first coordinate by the gcd of all values (weights
    nondecreasing); the other coordinates become absolute values."""
    _require_sorted(t, "gcd-prefix reduction")
    g = _gcd_all((abs(x) for x in t.values), counters)
    return WeightedTuple((g,) + tuple(abs(x) for x in t.values[1:]), t.weights)


# ---------------------------------------------------------------------------
# composed pipeline

def wgcd_auto(
    t: WeightedTuple, seed: int = 0, *, counters: Optional[Counters] = None
) -> WgcdResult:
    """Reduction pipeline: absolute values, weight sort, a remainder step
    for large pairs, suffix gcds, then fast paths or factoring the single
    suffix gcd.

    Never factors anything larger than the reduced tuple's gcd, records
    each rewrite in the trace, and agrees with the definition-level scan.
    """
    c = counters if counters is not None else Counters()
    steps: list[TraceStep] = []

    def record(rule: str, cur: WeightedTuple) -> None:
        steps.append(TraceStep(rule, cur.values, cur.weights.q))

    cur = abs_values(t)
    if cur.values != t.values:
        record("abs", cur)
    permuted, perm = sort_by_weight(cur)
    if perm != tuple(range(len(t))):
        cur = permuted
        record("permute", cur)

    # Euclidean shrink for pairs, when a wgcd-preserving step exists: only
    # dividing the first coordinate by the second qualifies.
    if len(cur) == 2 and cur.weights[0] < cur.weights[1]:
        x0, x1 = cur.values
        if x1 and x0 >= x1:
            x0, x1 = reduce_pair_remainder(x0, x1, cur.weights[0], cur.weights[1])
            cur = WeightedTuple((x0, x1), cur.weights)
            record("pair-remainder", cur)

    reduced = reduce_suffix_gcd(cur, counters=c)
    if reduced.values != cur.values:
        cur = reduced
        record("suffix-gcd", cur)

    y0 = cur.values[0]
    equal_weights = len(set(cur.weights.q)) == 1
    if y0 == 1:
        record("fastpath-one", cur)
        d = 1
    elif equal_weights:
        record("fastpath-equal-weights", cur)
        d = wgcd_single(y0, cur.weights[0], seed, counters=c)
    else:
        d = wgcd_gcd_factorization(cur, seed, counters=c)
    return WgcdResult(d, "auto", ReductionTrace(tuple(steps)), c)


def _auto_d(t: WeightedTuple, seed: int = 0, *, counters: Optional[Counters] = None) -> int:
    return wgcd_auto(t, seed, counters=counters).d


STRATEGIES = {
    "auto": _auto_d,
    "oracle": wgcd_bruteforce,
    "full-factor": wgcd_full_factorization,
    "gcd-factor": wgcd_gcd_factorization,
    "lcm-power": wgcd_lcm_power,
    "fold": wgcd_fold,
}


def weighted_gcd(values, weights, strategy: str = "auto", seed: int = 0) -> int:
    """Convenience entry point: the weighted gcd of `values` under
    `weights` using the named strategy."""
    t = WeightedTuple(tuple(values), _as_weights(weights))
    try:
        fn = STRATEGIES[strategy]
    except KeyError:
        raise ValueError(
            f"unknown strategy {strategy!r}, expected one of {sorted(STRATEGIES)}"
        ) from None
    return fn(t, seed)


# ---------------------------------------------------------------------------
# normalization and verification

def normalize(t: WeightedTuple, seed: int = 0) -> tuple[WeightedTuple, int]:
    """Divide out the weighted gcd: x_i -> x_i / d**q_i, signs preserved.

    Returns the normalized tuple (whose weighted gcd is 1) and d.
    """
    d = wgcd_auto(t, seed).d
    if d == 1:
        return t, 1
    values = tuple(x // d**q for x, q in t.pairs())
    return WeightedTuple(values, t.weights), d


def verify_wgcd(t: WeightedTuple, d: int, seed: int = 0) -> VerifyResult:
    """Check that d is the weighted gcd of t.

    Divisibility: d**q_i | x_i for every i.  Maximality: no prime of the
    gcd of the normalized values still divides every normalized coordinate
    with its full weight.
    """
    if d < 1:
        raise ValueError("claimed weighted gcd must be >= 1")
    for x, q in t.pairs():
        if x % d**q != 0:
            return VerifyResult(False, "divisibility")
    residues = [(x // d**q, q) for x, q in t.pairs()]
    g = gcd_many([r for r, _ in residues])
    if g > 1:
        for p, _ in factor(g, seed):
            if all(r == 0 or r % p**q == 0 for r, q in residues):
                return VerifyResult(False, "maximality")
    return VerifyResult(True, None)
