"""Independent oracles and random generators shared across the test suite.

Everything here deliberately avoids the library's own code paths where an
independent route exists: brute-force partition enumeration, hook-length
dimensions, and naive arithmetic functions.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial, gcd

from symlie import Partition, Series, SymFunc, p_of, partitions_of


def brute_partitions(n: int) -> set[tuple[int, ...]]:
    """All partitions of n by a different recursion (ascending construction)."""
    out: set[tuple[int, ...]] = set()

    def rec(remaining: int, min_part: int, acc: tuple[int, ...]) -> None:
        if remaining == 0:
            out.add(tuple(sorted(acc, reverse=True)))
            return
        for a in range(min_part, remaining + 1):
            rec(remaining - a, a, acc + (a,))

    rec(n, 1, ())
    return out


def hook_length_dimension(shape: tuple[int, ...]) -> int:
    """Number of standard Young tableaux via the hook length formula."""
    if not shape:
        return 1
    cols = [0] * shape[0]
    for a in shape:
        for j in range(a):
            cols[j] += 1
    n = sum(shape)
    denom = 1
    for i, row in enumerate(shape):
        for j in range(row):
            denom *= row - j + cols[j] - i - 1
    return factorial(n) // denom


def naive_moebius(n: int) -> int:
    count = 0
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            count += 1
        p += 1
    if m > 1:
        count += 1
    return -1 if count % 2 else 1


def naive_totient(n: int) -> int:
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def random_symfunc(rng: random.Random, degree: int, nterms: int = 3) -> SymFunc:
    parts = list(partitions_of(degree))
    terms = {}
    for _ in range(nterms):
        lam = rng.choice(parts)
        terms[lam] = terms.get(lam, Fraction(0)) + Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return SymFunc(degree, terms)


def random_series(rng: random.Random, n: int, density: float = 0.8) -> Series:
    comps = {}
    for d in range(1, n + 1):
        if rng.random() < density:
            f = random_symfunc(rng, d, nterms=2)
            if not f.is_zero:
                comps[d] = f
    return Series(n, comps)


def random_unit_series(rng: random.Random, n: int) -> Series:
    """Random series with degree-1 component exactly p_1 (invertible)."""
    s = random_series(rng, n, density=0.7)
    comps = dict(s.components)
    comps[1] = p_of((1,))
    return Series(n, comps)


def frac(num: int, den: int = 1) -> Fraction:
    return Fraction(num, den)


def P(*parts: int) -> Partition:
    return Partition.of(parts)
