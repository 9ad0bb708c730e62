"""Integer partitions and divisor-lattice arithmetic.

Partitions are weakly decreasing tuples of positive integers, interned so
equal partitions share one instance (cheap hashing for the memo tables).
Enumeration is always in descending lexicographic order, which fixes one
deterministic layout for every table in the package.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, isqrt

__all__ = [
    "EMPTY",
    "Partition",
    "PrimeSet",
    "divisors",
    "factorize",
    "is_prime",
    "moebius",
    "partition_index",
    "partitions_of",
    "totient",
    "z_of",
]

_interned: dict[tuple[int, ...], "Partition"] = {}


class Partition:
    """A weakly decreasing sequence of positive integers.

    The empty partition (of zero) is admitted and unique.  Text form is
    comma-separated parts in square brackets, e.g. ``[3,1,1]``.
    """

    __slots__ = ("parts", "size", "_hash")

    def __init__(self, parts=()):
        pt = tuple(int(a) for a in parts)
        prev = None
        for a in pt:
            if a < 1:
                raise ValueError(f"parts must be positive integers: {pt!r}")
            if prev is not None and a > prev:
                raise ValueError(f"parts must be weakly decreasing: {pt!r}")
            prev = a
        self.parts = pt
        self.size = sum(pt)
        self._hash = hash(pt)

    @classmethod
    def of(cls, parts) -> "Partition":
        """Interning constructor: equal partitions share one instance."""
        key = parts if isinstance(parts, tuple) else tuple(parts)
        hit = _interned.get(key)
        if hit is None:
            hit = cls(key)
            _interned[hit.parts] = hit
        return hit

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a in self.parts:
            out[a] = out.get(a, 0) + 1
        return out

    def conjugate(self) -> "Partition":
        if not self.parts:
            return EMPTY
        cols = [0] * self.parts[0]
        for a in self.parts:
            for j in range(a):
                cols[j] += 1
        return Partition.of(tuple(cols))

    def index(self) -> int:
        """Rank of this partition within partitions_of(self.size)."""
        return partition_index(self)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return "[" + ",".join(str(a) for a in self.parts) + "]"

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        t = text.strip()
        if not (t.startswith("[") and t.endswith("]")):
            raise ValueError(f"malformed partition text: {text!r}")
        inner = t[1:-1].strip()
        if not inner:
            return EMPTY
        return cls.of(tuple(int(x) for x in inner.split(",")))


EMPTY = Partition.of(())


@lru_cache(maxsize=None)
def _partitions_raw(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_raw(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _partitions_interned(n: int) -> tuple[Partition, ...]:
    return tuple(Partition.of(t) for t in _partitions_raw(n, max(n, 1)))


def partitions_of(n: int, part_filter=None) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order.

    ``part_filter``, when given, is a predicate on a single part value; only
    partitions whose every part satisfies it are returned.
    """
    if n < 0:
        raise ValueError("partitions of negative integers are not defined")
    allp = _partitions_interned(n)
    if part_filter is None:
        return allp
    return tuple(p for p in allp if all(part_filter(a) for a in p.parts))


@lru_cache(maxsize=None)
def _index_map(n: int) -> dict[tuple[int, ...], int]:
    return {p.parts: i for i, p in enumerate(_partitions_interned(n))}


def partition_index(p: Partition) -> int:
    """Position of p in the descending-lex enumeration of its degree."""
    return _index_map(p.size)[p.parts]


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...) by trial division."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Ascending divisors of n >= 1."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return tuple(sorted(out))


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError(f"moebius requires n >= 1, got {n}")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient requires n >= 1, got {n}")
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def z_of(p: Partition) -> int:
    """Centralizer order prod_i i^{m_i} * m_i! of a permutation of cycle type p."""
    out = 1
    for i, m in p.multiplicities().items():
        out *= i**m * factorial(m)
    return out


class PrimeSet:
    """A finite set of distinct primes with smooth/rough membership tests.

    ``is_smooth(n)`` holds when every prime factor of n lies in the set;
    ``is_rough(n)`` holds when none does.  Both hold exactly for n = 1.
    """

    __slots__ = ("primes",)

    def __init__(self, primes=()):
        ps = tuple(sorted({int(q) for q in primes}))
        for q in ps:
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
        self.primes = ps

    def factor_split(self, n: int) -> tuple[int, int]:
        """Split n = smooth * rough with smooth the maximal in-set prime-power part.

        The empty set gives (1, n).  The two factors are coprime.
        """
        if n < 1:
            raise ValueError(f"factor_split requires n >= 1, got {n}")
        smooth = 1
        rest = n
        for q in self.primes:
            while rest % q == 0:
                rest //= q
                smooth *= q
        return smooth, rest

    def smooth_part(self, n: int) -> int:
        return self.factor_split(n)[0]

    def rough_part(self, n: int) -> int:
        return self.factor_split(n)[1]

    def is_smooth(self, n: int) -> bool:
        return self.factor_split(n)[1] == 1

    def is_rough(self, n: int) -> bool:
        return self.factor_split(n)[0] == 1

    def __contains__(self, q: int) -> bool:
        return q in self.primes

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def __eq__(self, other):
        return isinstance(other, PrimeSet) and self.primes == other.primes

    def __hash__(self):
        return hash(("PrimeSet", self.primes))

    def __repr__(self):
        return "{" + ",".join(str(q) for q in self.primes) + "}"

    @classmethod
    def from_text(cls, text: str) -> "PrimeSet":
        t = text.strip().strip("{}")
        if t in ("", "-", "none"):
            return cls(())
        return cls(int(x) for x in t.split(","))
