"""Arbitrary-precision integer primitives.

Everything the weighted-gcd strategies stand on: gcd, exact powers, floor
roots, p-adic valuations, primality testing, and integer factorization.
All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

TRIAL_DIVISION_LIMIT = 10_000


def _primes_below(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_SMALL_PRIMES = _primes_below(TRIAL_DIVISION_LIMIT)

# Deterministic Miller-Rabin witness sets, tiered by magnitude.  Each set is
# exact for every n below its bound; the last tier covers all n < 2**64.
_WITNESS_TIERS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

_PROBABILISTIC_ROUNDS = 40  # error probability below 4**-40 past 2**64


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) = 0 and gcd(a, 0) = |a|."""
    return math.gcd(a, b)


def gcd_many(xs) -> int:
    """Left fold of gcd over a nonempty sequence."""
    xs = list(xs)
    if not xs:
        raise ValueError("gcd_many needs at least one integer")
    g = abs(xs[0])
    for x in xs[1:]:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def lcm_many(xs) -> int:
    """Least common multiple of a nonempty sequence of positive integers."""
    xs = list(xs)
    if not xs:
        raise ValueError("lcm_many needs at least one integer")
    return math.lcm(*xs)


def ipow(base: int, exp: int) -> int:
    """Exact integer power; 0**0 is defined as 1 for fold convenience."""
    if base < 0:
        raise ValueError("ipow expects a nonnegative base")
    if exp < 0:
        raise ValueError("ipow expects a nonnegative exponent")
    return base**exp


def iroot(x: int, n: int) -> int:
    """Floor of the n-th root: the r with r**n <= x < (r+1)**n.

    Newton iteration seeded from the bit length; the seed always
    overestimates, so the iteration decreases monotonically onto the root.
    """
    if n < 1:
        raise ValueError("root order must be positive")
    if x < 0:
        raise ValueError("iroot expects a nonnegative integer")
    if x == 0:
        return 0
    if n == 1:
        return x
    if n >= x.bit_length():
        return 1
    r = 1 << -(-x.bit_length() // n)
    while True:
        t = ((n - 1) * r + x // r ** (n - 1)) // n
        if t >= r:
            break
        r = t
    while r**n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def valuation(p: int, x: int) -> int:
    """Largest e with p**e dividing x.  Rejects x = 0 (the valuation would
    be infinite; callers must special-case zeros)."""
    if p < 2:
        raise ValueError("valuation needs p >= 2")
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    x = abs(x)
    if p == 2:
        return (x & -x).bit_length() - 1
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def _miller_rabin_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, seed: int = 0) -> bool:
    """Primality test: deterministic and exact for n < 2**64, Miller-Rabin
    with 40 witnesses from the seeded generator beyond that."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 41 * 41:
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    if n < _WITNESS_TIERS[-1][0]:
        for bound, witnesses in _WITNESS_TIERS:
            if n < bound:
                break
    else:
        rng = random.Random(seed)
        witnesses = tuple(rng.randrange(2, n - 1) for _ in range(_PROBABILISTIC_ROUNDS))
    return all(_miller_rabin_round(n, d, s, a) for a in witnesses)


@dataclass(frozen=True)
class Factorization:
    """Multiset of (prime, exponent) pairs, ascending by prime.

    The empty factorization represents 1.
    """

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        entries = tuple((int(p), int(e)) for p, e in self.entries)
        for i, (p, e) in enumerate(entries):
            if p < 2 or not is_prime(p):
                raise ValueError(f"factor {p} is not a prime")
            if e < 1:
                raise ValueError(f"exponent {e} of {p} must be positive")
            if i > 0 and entries[i - 1][0] >= p:
                raise ValueError("entries must be strictly ascending by prime")
        object.__setattr__(self, "entries", entries)

    def value(self) -> int:
        n = 1
        for p, e in self.entries:
            n *= p**e
        return n

    def exponent(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
        return 0

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _pollard_rho_brent(n: int, rng: random.Random) -> int:
    """Nontrivial factor of an odd composite n via Brent's cycle variant."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor(n: int, seed: int = 0) -> Factorization:
    """Prime factorization of n >= 1, deterministic for a given (n, seed).

    Trial division by the precomputed primes below 10**4, then a primality
    test, then Pollard rho with Brent cycle detection on the cofactors.
    """
    if n < 1:
        raise ValueError("factor expects n >= 1")
    counts: dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 1
            m //= p
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = e
    if m > 1:
        if m < TRIAL_DIVISION_LIMIT**2 or is_prime(m, seed):
            counts[m] = counts.get(m, 0) + 1
        else:
            rng = random.Random(seed)
            pending = [m]
            while pending:
                v = pending.pop()
                if is_prime(v, seed):
                    counts[v] = counts.get(v, 0) + 1
                    continue
                d = _pollard_rho_brent(v, rng)
                pending.append(d)
                pending.append(v // d)
    return Factorization(tuple(sorted(counts.items())))
