"""Known-answer tuple generators and the instrumented benchmark harness.

Generators pin ground truth by construction instead of trusting any
strategy; the harness times strategies against each other and refuses to
report anything when they disagree.
"""

from __future__ import annotations

import csv
import io
import json
import random
import statistics
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import core, numtheory
from .core import Counters, WeightedTuple, WeightVector

MODES = ("known-answer", "random", "adversarial-deficient")

# The oracle is excluded by default: its scan bound is astronomical on
# benchmark-scale inputs.  Pass it explicitly for small specs.
DEFAULT_STRATEGIES = ("auto", "gcd-factor", "full-factor", "lcm-power", "fold")

_COFACTOR_PRIME_BITS = (18, 28)  # keeps the slow strategies desk-scale


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated trial."""

    seed: int
    n_plus_1: int
    weights: WeightVector
    d_bits: int
    cofactor_bits: int
    mode: str

    def __post_init__(self):
        weights = (
            self.weights
            if isinstance(self.weights, WeightVector)
            else WeightVector(tuple(self.weights))
        )
        object.__setattr__(self, "weights", weights)
        if self.n_plus_1 != len(weights):
            raise ValueError(
                f"tuple length {self.n_plus_1} does not match {len(weights)} weights"
            )
        if self.d_bits < 1 or self.cofactor_bits < 1:
            raise ValueError("bit parameters must be >= 1")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}, expected one of {MODES}")

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n": self.n_plus_1,
            "weights": list(self.weights.q),
            "d_bits": self.d_bits,
            "cofactor_bits": self.cofactor_bits,
            "mode": self.mode,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "GenSpec":
        return cls(
            seed=int(obj["seed"]),
            n_plus_1=int(obj["n"]),
            weights=WeightVector(tuple(int(q) for q in obj["weights"])),
            d_bits=int(obj["d_bits"]),
            cofactor_bits=int(obj["cofactor_bits"]),
            mode=str(obj["mode"]),
        )


def _random_bits(rng: random.Random, bits: int) -> int:
    """Uniform integer with exactly `bits` bits."""
    if bits == 1:
        return 1
    return (1 << (bits - 1)) | rng.getrandbits(bits - 1)


def _random_prime(rng: random.Random, bits: int) -> int:
    if bits < 2:
        raise ValueError("primes need at least 2 bits")
    if bits == 2:
        return rng.choice((2, 3))
    while True:
        cand = (1 << (bits - 1)) | rng.getrandbits(bits - 1) | 1
        if numtheory.is_prime(cand):
            return cand


def _random_cofactor(rng: random.Random, bits: int, d: int) -> int:
    """Integer with exactly `bits` bits, coprime to d, built as a product
    of moderately sized primes so it stays factorable at desk scale."""
    if bits == 1:
        return 1
    lo, hi = _COFACTOR_PRIME_BITS
    attempts = 512 if bits <= 16 else 100_000
    for _ in range(attempts):
        c = 1
        while bits - c.bit_length() + 1 > hi:
            c *= _random_prime(rng, rng.randint(lo, hi))
        rest = bits - c.bit_length() + 1
        if rest >= 2:
            c *= _random_prime(rng, rest)
        if c.bit_length() == bits and numtheory.gcd(c, d) == 1:
            return c
    raise ValueError(f"no {bits}-bit cofactor coprime to {d} found")


def known_answer_tuple(d: int, weights, cofactors) -> WeightedTuple:
    """Tuple with weighted gcd exactly d: x_i = d**q_i * c_i.

    A unit cofactor pins the answer: at that coordinate each prime of d
    contributes its exact exponent and every other prime contributes
    nothing, so extra structure in the remaining cofactors cannot raise
    the result above d.
    """
    w = weights if isinstance(weights, WeightVector) else WeightVector(tuple(weights))
    cofactors = tuple(int(c) for c in cofactors)
    if d < 1:
        raise ValueError("d must be >= 1")
    if len(cofactors) != len(w):
        raise ValueError("one cofactor per coordinate required")
    if any(c < 1 for c in cofactors):
        raise ValueError("cofactors must be positive")
    if 1 not in cofactors:
        raise ValueError("one cofactor must be 1 to pin the answer")
    values = tuple(d**q * c for c, q in zip(cofactors, w))
    return WeightedTuple(values, w)


def gen_known(spec: GenSpec) -> tuple[WeightedTuple, int]:
    """Draw a known-answer tuple and its exact weighted gcd.

    A unit cofactor forces the cofactor part of the tuple to carry no
    weighted gcd, and the cofactors share no prime with d, so the answer
    is d by construction.
    """
    if spec.mode != "known-answer":
        raise ValueError(f"gen_known expects known-answer mode, got {spec.mode!r}")
    rng = random.Random(spec.seed)
    for _ in range(10_000):
        d = _random_bits(rng, spec.d_bits)
        try:
            cofactors = [
                _random_cofactor(rng, spec.cofactor_bits, d)
                for _ in range(spec.n_plus_1)
            ]
        except ValueError:
            # tiny cofactor spaces can be exhausted by d's primes
            # (e.g. 2 bits against a multiple of 6); redraw d
            continue
        cofactors[rng.randrange(spec.n_plus_1)] = 1
        return known_answer_tuple(d, spec.weights, cofactors), d
    raise ValueError(f"no cofactors of {spec.cofactor_bits} bits fit any d for {spec}")


def gen_adversarial(spec: GenSpec) -> WeightedTuple:
    """Prime-power-heavy tuple plus deficient-exponent noise.

    The base is p**q_i for a fresh prime p, so the weighted gcd is p.
    Noise primes enter every coordinate with exponent >= 1 but stay below
    the weight in one coordinate, so they inflate the plain gcd while
    contributing nothing to the weighted gcd.
    """
    if spec.mode != "adversarial-deficient":
        raise ValueError(
            f"gen_adversarial expects adversarial-deficient mode, got {spec.mode!r}"
        )
    rng = random.Random(spec.seed)
    weights = spec.weights.q
    p = _random_prime(rng, max(spec.d_bits, 2))
    values = [p**q for q in weights]
    deficient_at = [i for i, q in enumerate(weights) if q >= 2]
    if deficient_at:
        noise = [1] * len(weights)
        used = {p}
        while min(n.bit_length() for n in noise) - 1 < spec.cofactor_bits:
            r = _random_prime(rng, rng.randint(16, 24))
            if r in used:
                continue
            used.add(r)
            k = rng.choice(deficient_at)
            for i, q in enumerate(weights):
                e = rng.randint(1, q - 1) if i == k else q
                noise[i] *= r**e
        values = [v * n for v, n in zip(values, noise)]
    return WeightedTuple(tuple(values), spec.weights)


def gen_random(spec: GenSpec) -> WeightedTuple:
    """Unstructured signed tuple; magnitudes bounded by cofactor_bits."""
    if spec.mode != "random":
        raise ValueError(f"gen_random expects random mode, got {spec.mode!r}")
    rng = random.Random(spec.seed)
    while True:
        values = tuple(
            (1 - 2 * rng.randint(0, 1)) * rng.getrandbits(spec.cofactor_bits)
            for _ in range(spec.n_plus_1)
        )
        if any(values):
            return WeightedTuple(values, spec.weights)


def generate(spec: GenSpec) -> tuple[WeightedTuple, Optional[int]]:
    """Dispatch on mode; the expected answer is only known for
    known-answer specs."""
    if spec.mode == "known-answer":
        return gen_known(spec)
    if spec.mode == "adversarial-deficient":
        return gen_adversarial(spec), None
    return gen_random(spec), None


# ---------------------------------------------------------------------------
# harness

@dataclass(frozen=True)
class StrategyRun:
    strategy: str
    ns_median: int
    factor_calls: int
    max_factored_bits: int
    gcd_calls: int
    d: int


@dataclass(frozen=True)
class BenchRecord:
    spec: GenSpec
    results: tuple[StrategyRun, ...]
    agreement: bool


class StrategyDisagreement(RuntimeError):
    """Strategies returned different answers: a correctness bug, so the
    whole run aborts rather than report meaningless timings."""

    def __init__(self, record: BenchRecord):
        self.record = record
        answers = ", ".join(f"{r.strategy}={r.d}" for r in record.results)
        super().__init__(f"strategy disagreement on {record.spec}: {answers}")


def bench_run(
    specs: Sequence[GenSpec],
    strategies: Sequence[str] = DEFAULT_STRATEGIES,
    repetitions: int = 3,
    seed: int = 0,
) -> list[BenchRecord]:
    """One record per spec: median wall time over `repetitions` and the
    counters of a single canonical run, per strategy.

    Known-answer specs additionally check every strategy against the
    constructed answer.  Aborts on any disagreement.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    unknown = [s for s in strategies if s not in core.STRATEGIES]
    if unknown or not strategies:
        raise ValueError(f"unknown strategies {unknown}")
    records = []
    for spec in specs:
        t, expected = generate(spec)
        runs = []
        answers = set() if expected is None else {expected}
        for name in strategies:
            fn = core.STRATEGIES[name]
            counters = Counters()
            d = fn(t, seed, counters=counters)
            times = []
            for _ in range(repetitions):
                t0 = time.perf_counter_ns()
                fn(t, seed)
                times.append(time.perf_counter_ns() - t0)
            runs.append(
                StrategyRun(
                    strategy=name,
                    ns_median=int(statistics.median(times)),
                    factor_calls=counters.factor_calls,
                    max_factored_bits=counters.max_factored_bits,
                    gcd_calls=counters.gcd_calls,
                    d=d,
                )
            )
            answers.add(d)
        record = BenchRecord(spec, tuple(runs), len(answers) == 1)
        if not record.agreement:
            raise StrategyDisagreement(record)
        records.append(record)
    return records


_CSV_FIELDS = (
    "seed",
    "n",
    "weights",
    "d_bits",
    "cofactor_bits",
    "mode",
    "strategy",
    "ns_median",
    "factor_calls",
    "max_factored_bits",
    "gcd_calls",
    "d",
    "agreement",
)


def _record_to_json(record: BenchRecord) -> dict:
    return {
        "spec": record.spec.to_json_dict(),
        "results": [
            {
                "strategy": r.strategy,
                "ns_median": r.ns_median,
                "factor_calls": r.factor_calls,
                "max_factored_bits": r.max_factored_bits,
                "gcd_calls": r.gcd_calls,
                "d": str(r.d),
            }
            for r in record.results
        ],
        "agreement": record.agreement,
    }


def bench_report(records: Sequence[BenchRecord], format: str = "json") -> bytes:
    """Serialize records with stable field order; json or csv."""
    if format == "json":
        payload = json.dumps([_record_to_json(r) for r in records], indent=2)
        return payload.encode()
    if format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(_CSV_FIELDS)
        for record in records:
            spec = record.spec
            for r in record.results:
                writer.writerow(
                    (
                        spec.seed,
                        spec.n_plus_1,
                        "|".join(str(q) for q in spec.weights),
                        spec.d_bits,
                        spec.cofactor_bits,
                        spec.mode,
                        r.strategy,
                        r.ns_median,
                        r.factor_calls,
                        r.max_factored_bits,
                        r.gcd_calls,
                        r.d,
                        str(record.agreement).lower(),
                    )
                )
        return out.getvalue().encode()
    raise ValueError(f"unknown report format {format!r}")


def parse_report(blob: bytes, format: str = "json") -> list[BenchRecord]:
    """Inverse of bench_report, for round-tripping and downstream tools."""
    if format == "json":
        records = []
        for obj in json.loads(blob.decode()):
            runs = tuple(
                StrategyRun(
                    strategy=r["strategy"],
                    ns_median=int(r["ns_median"]),
                    factor_calls=int(r["factor_calls"]),
                    max_factored_bits=int(r["max_factored_bits"]),
                    gcd_calls=int(r["gcd_calls"]),
                    d=int(r["d"]),
                )
                for r in obj["results"]
            )
            records.append(
                BenchRecord(
                    GenSpec.from_json_dict(obj["spec"]), runs, bool(obj["agreement"])
                )
            )
        return records
    if format == "csv":
        rows = list(csv.reader(io.StringIO(blob.decode())))
        if not rows or tuple(rows[0]) != _CSV_FIELDS:
            raise ValueError("missing or unexpected csv header")
        records = []
        current: Optional[tuple[GenSpec, bool, list[StrategyRun]]] = None

        def flush():
            if current is not None:
                records.append(
                    BenchRecord(current[0], tuple(current[2]), current[1])
                )

        for row in rows[1:]:
            vals = dict(zip(_CSV_FIELDS, row))
            spec = GenSpec(
                seed=int(vals["seed"]),
                n_plus_1=int(vals["n"]),
                weights=WeightVector(
                    tuple(int(q) for q in vals["weights"].split("|"))
                ),
                d_bits=int(vals["d_bits"]),
                cofactor_bits=int(vals["cofactor_bits"]),
                mode=vals["mode"],
            )
            run = StrategyRun(
                strategy=vals["strategy"],
                ns_median=int(vals["ns_median"]),
                factor_calls=int(vals["factor_calls"]),
                max_factored_bits=int(vals["max_factored_bits"]),
                gcd_calls=int(vals["gcd_calls"]),
                d=int(vals["d"]),
            )
            # rows of one record are contiguous; a repeated strategy name
            # or a new spec starts the next record (specs may repeat)
            if (
                current is None
                or current[0] != spec
                or any(r.strategy == run.strategy for r in current[2])
            ):
                flush()
                current = (spec, vals["agreement"] == "true", [])
            current[2].append(run)
        flush()
        return records
    raise ValueError(f"unknown report format {format!r}")
