"""Representation families built from weight functions on divisors.

Every family here goes through one template: given an integer-valued weight
w on positive integers, the degree-n member is

    (1/n) * sum_{d | n} w(d) * p_d^(n/d),

the Frobenius characteristic of a (possibly virtual) character induced from
the cyclic group generated by an n-cycle.  The classical cases are w = mu
(the free Lie module) and w = phi (the conjugacy action on n-cycles).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .partitions import Partition, PrimeSet, divisors, moebius, totient
from .plethysm import Series, pleth_p
from .symfunc import SymFunc

__all__ = [
    "DivisorWeight",
    "MOEBIUS",
    "PartSet",
    "TOTIENT",
    "conj",
    "conj_series",
    "exponent_eval",
    "exponent_poly",
    "family_series",
    "foulkes",
    "foulkes_series",
    "from_divisor_weight",
    "lie",
    "lie_primes",
    "lie_primes_bar",
    "lie_primes_bar_series",
    "lie_primes_series",
    "lie_series",
    "part_family",
    "part_family_ext",
    "part_family_ext_series",
    "part_family_series",
    "part_family_via_lie",
]


class PartSet:
    """A set of allowed positive integers with a finite symbolic description.

    Kinds: explicit list, ``le(k)`` (n <= k), ``div(k)`` (n | k),
    ``mod1(k)`` (n = 1 mod k), ``pow(k)`` (powers of k, including 1),
    ``all``, and prime-set membership (``smooth``: all prime factors inside
    the set; ``rough``: none).  Membership of 1 is computed, never assumed.
    """

    __slots__ = ("kind", "param")

    _KINDS = ("explicit", "le", "div", "mod1", "pow", "all", "smooth", "rough")

    def __init__(self, kind: str, param=None):
        if kind not in self._KINDS:
            raise ValueError(f"unknown part-set kind {kind!r}")
        if kind == "explicit":
            param = tuple(sorted({int(x) for x in param}))
            if not param or any(x < 1 for x in param):
                raise ValueError("explicit part set must be nonempty positive integers")
        elif kind in ("le", "div", "mod1", "pow"):
            param = int(param)
            if param < 1:
                raise ValueError(f"{kind} parameter must be >= 1")
        elif kind in ("smooth", "rough"):
            if not isinstance(param, PrimeSet):
                param = PrimeSet(param)
        self.kind = kind
        self.param = param

    @classmethod
    def of(cls, *values) -> "PartSet":
        return cls("explicit", values)

    @classmethod
    def up_to(cls, k: int) -> "PartSet":
        return cls("le", k)

    @classmethod
    def divisors_of(cls, k: int) -> "PartSet":
        return cls("div", k)

    @classmethod
    def mod_one(cls, k: int) -> "PartSet":
        return cls("mod1", k)

    @classmethod
    def powers_of(cls, k: int) -> "PartSet":
        return cls("pow", k)

    @classmethod
    def everything(cls) -> "PartSet":
        return cls("all")

    @classmethod
    def smooth_over(cls, primes) -> "PartSet":
        return cls("smooth", primes)

    @classmethod
    def rough_over(cls, primes) -> "PartSet":
        return cls("rough", primes)

    def __contains__(self, n: int) -> bool:
        if n < 1:
            return False
        kind, q = self.kind, self.param
        if kind == "explicit":
            return n in q
        if kind == "le":
            return n <= q
        if kind == "div":
            return q % n == 0
        if kind == "mod1":
            return n % q == 1 % q
        if kind == "pow":
            if q == 1:
                return n == 1
            m = n
            while m % q == 0:
                m //= q
            return m == 1
        if kind == "all":
            return True
        if kind == "smooth":
            return q.is_smooth(n)
        return q.is_rough(n)

    def members_up_to(self, n: int) -> tuple[int, ...]:
        return tuple(m for m in range(1, n + 1) if m in self)

    def descriptor(self) -> str:
        kind, q = self.kind, self.param
        if kind == "explicit":
            return ",".join(str(x) for x in q)
        if kind == "all":
            return "all"
        if kind in ("smooth", "rough"):
            inner = ",".join(str(p) for p in q.primes)
            return f"{kind}({inner})"
        return f"{kind}({q})"

    @classmethod
    def parse(cls, text: str) -> "PartSet":
        t = text.strip()
        if not t:
            raise ValueError("empty part-set descriptor")
        if t == "all":
            return cls.everything()
        for kind in ("le", "div", "mod1", "pow"):
            if t.startswith(kind + "(") and t.endswith(")"):
                return cls(kind, int(t[len(kind) + 1 : -1]))
        for kind in ("smooth", "rough"):
            if t.startswith(kind + "(") and t.endswith(")"):
                return cls(kind, PrimeSet.from_text(t[len(kind) + 1 : -1]))
        try:
            return cls("explicit", (int(x) for x in t.split(",")))
        except ValueError:
            raise ValueError(f"malformed part-set descriptor {text!r}") from None

    def key(self) -> str:
        return self.descriptor()

    def __eq__(self, other):
        return isinstance(other, PartSet) and self.kind == other.kind and self.param == other.param

    def __hash__(self):
        return hash(("PartSet", self.kind, self.param))

    def __repr__(self):
        return self.descriptor()


class DivisorWeight:
    """An integer-valued function on positive integers with a symbolic tag.

    The tag doubles as the memoization key for every family built from the
    weight, so weights constructed twice with equal parameters share caches.
    """

    __slots__ = ("tag", "_fn", "_cache")

    def __init__(self, tag: str, fn):
        self.tag = tag
        self._fn = fn
        self._cache: dict[int, int] = {}

    def __call__(self, d: int) -> int:
        if d < 1:
            raise ValueError("weights are defined on positive integers only")
        hit = self._cache.get(d)
        if hit is None:
            hit = self._fn(d)
            self._cache[d] = hit
        return hit

    @classmethod
    def moebius_weight(cls) -> "DivisorWeight":
        return cls("mu", moebius)

    @classmethod
    def totient_weight(cls) -> "DivisorWeight":
        return cls("phi", totient)

    @classmethod
    def prime_split(cls, primes) -> "DivisorWeight":
        """w(d) = phi(smooth) * mu(rough) for the split d = smooth * rough."""
        sset = primes if isinstance(primes, PrimeSet) else PrimeSet(primes)

        def fn(d: int) -> int:
            smooth, rough = sset.factor_split(d)
            return totient(smooth) * moebius(rough)

        return cls(f"primes[{sset!r}]", fn)

    @classmethod
    def prime_split_bar(cls, primes) -> "DivisorWeight":
        """w(d) = phi(rough) * mu(smooth), the complementary interpretation."""
        sset = primes if isinstance(primes, PrimeSet) else PrimeSet(primes)

        def fn(d: int) -> int:
            smooth, rough = sset.factor_split(d)
            return totient(rough) * moebius(smooth)

        return cls(f"primesbar[{sset!r}]", fn)

    @classmethod
    def part_set(cls, parts: PartSet) -> "DivisorWeight":
        """w(d) = sum over m | d with m in the set of m * mu(d/m)."""

        def fn(d: int) -> int:
            return sum(m * moebius(d // m) for m in divisors(d) if m in parts)

        return cls(f"parts[{parts.key()}]", fn)

    @classmethod
    def ramanujan(cls, r: int) -> "DivisorWeight":
        """w(d) = phi(d) * mu(d/(d,r)) / phi(d/(d,r)); always an integer.

        This is the sum of the r-th powers of the primitive d-th roots of
        unity, the value driving the eigenvalue-r induced character.
        """
        r = int(r)
        if r < 1:
            raise ValueError("ramanujan weight requires r >= 1")

        def fn(d: int) -> int:
            co = d // gcd(d, r)
            num = totient(d) * moebius(co)
            den = totient(co)
            if num % den:
                raise ArithmeticError(f"non-integer ramanujan weight at d={d}, r={r}")
            return num // den

        return cls(f"ramanujan[{r}]", fn)

    @classmethod
    def table(cls, mapping: dict[int, int]) -> "DivisorWeight":
        vals = {int(k): int(v) for k, v in mapping.items()}

        def fn(d: int) -> int:
            if d not in vals:
                raise KeyError(f"table weight not defined at {d}")
            return vals[d]

        body = ",".join(f"{k}:{v}" for k, v in sorted(vals.items()))
        return cls(f"table[{body}]", fn)

    def __eq__(self, other):
        return isinstance(other, DivisorWeight) and self.tag == other.tag

    def __hash__(self):
        return hash(("DivisorWeight", self.tag))

    def __repr__(self):
        return self.tag


MOEBIUS = DivisorWeight.moebius_weight()
TOTIENT = DivisorWeight.totient_weight()

_family_cache: dict[tuple[str, int], SymFunc] = {}


def from_divisor_weight(n: int, w: DivisorWeight) -> SymFunc:
    """The degree-n member (1/n) sum_{d|n} w(d) p_d^(n/d).

    The coefficient of p_{1^n} is w(1)/n, so the dimension of the underlying
    virtual character is (n-1)! * w(1).
    """
    if n < 1:
        raise ValueError("family members are indexed by n >= 1")
    key = (w.tag, n)
    hit = _family_cache.get(key)
    if hit is None:
        terms = {}
        for d in divisors(n):
            c = w(d)
            if c:
                terms[Partition.of((d,) * (n // d))] = Fraction(c, n)
        hit = SymFunc._make(n, terms)
        _family_cache[key] = hit
    return hit


def exponent_eval(n: int, w: DivisorWeight, v) -> Fraction:
    """Value of the one-variable polynomial (1/n) sum_{d|n} w(d) v^(n/d).

    At v = +1/-1 these are the exponents appearing in the power-sum product
    formulas for the symmetric and exterior powers of the family.
    """
    if n < 1:
        raise ValueError("exponent_eval requires n >= 1")
    v = Fraction(v)
    return Fraction(sum(w(d) * v ** (n // d) for d in divisors(n)), 1) / n


def exponent_poly(n: int, w: DivisorWeight) -> dict[int, Fraction]:
    """The same polynomial as a map exponent -> coefficient (in v)."""
    out: dict[int, Fraction] = {}
    for d in divisors(n):
        c = w(d)
        if c:
            e = n // d
            out[e] = out.get(e, Fraction(0)) + Fraction(c, n)
    return {e: c for e, c in out.items() if c}


def family_series(w: DivisorWeight, n: int) -> Series:
    return Series(n, {d: from_divisor_weight(d, w) for d in range(1, n + 1)})


def lie(n: int) -> SymFunc:
    """Frobenius characteristic of the free Lie module: weight mu."""
    return from_divisor_weight(n, MOEBIUS)


def conj(n: int) -> SymFunc:
    """Frobenius characteristic of the conjugacy action on n-cycles: weight phi."""
    return from_divisor_weight(n, TOTIENT)


def foulkes(n: int, r: int) -> SymFunc:
    """The eigenvalue-r character induced from the cyclic group C_n.

    Schur multiplicities count standard Young tableaux by major index
    congruent to r mod n; requires 1 <= r <= n.
    """
    if not 1 <= r <= n:
        raise ValueError(f"foulkes requires 1 <= r <= n, got r={r}, n={n}")
    return from_divisor_weight(n, DivisorWeight.ramanujan(r))


def lie_primes(n: int, primes) -> SymFunc:
    """The Lie-module variant attached to a prime set (weight phi*mu on the split)."""
    sset = primes if isinstance(primes, PrimeSet) else PrimeSet(primes)
    return from_divisor_weight(n, DivisorWeight.prime_split(sset))


def lie_primes_bar(n: int, primes) -> SymFunc:
    sset = primes if isinstance(primes, PrimeSet) else PrimeSet(primes)
    return from_divisor_weight(n, DivisorWeight.prime_split_bar(sset))


def part_family(n: int, parts: PartSet) -> SymFunc:
    """The family whose symmetrized powers expand prod_{m in set} (1 - p_m)^{-1}."""
    return from_divisor_weight(n, DivisorWeight.part_set(parts))


def part_family_via_lie(n: int, parts: PartSet) -> SymFunc:
    """Same member assembled the other way: sum over m in the set, m | n, of Lie_{n/m}[p_m]."""
    out = SymFunc.zero()
    for m in divisors(n):
        if m in parts:
            out = out + pleth_p(m, lie(n // m))
    return out


def part_family_ext(n: int, parts: PartSet) -> SymFunc:
    """Degree-n piece of the exterior-side companion sum_{k>=0, m in set} Lie[p_{m*2^k}].

    Pairs (m, k) with m * 2^k equal are counted with multiplicity.
    """
    out = SymFunc.zero()
    for j in divisors(n):
        count = 0
        m = j
        while True:
            if m in parts:
                count += 1
            if m % 2:
                break
            m //= 2
        if count:
            out = out + pleth_p(j, lie(n // j)).scaled(count)
    return out


def lie_series(n: int) -> Series:
    return family_series(MOEBIUS, n)


def conj_series(n: int) -> Series:
    return family_series(TOTIENT, n)


def lie_primes_series(primes, n: int) -> Series:
    sset = primes if isinstance(primes, PrimeSet) else PrimeSet(primes)
    return family_series(DivisorWeight.prime_split(sset), n)


def lie_primes_bar_series(primes, n: int) -> Series:
    sset = primes if isinstance(primes, PrimeSet) else PrimeSet(primes)
    return family_series(DivisorWeight.prime_split_bar(sset), n)


def part_family_series(parts: PartSet, n: int) -> Series:
    return family_series(DivisorWeight.part_set(parts), n)


def part_family_ext_series(parts: PartSet, n: int) -> Series:
    return Series(n, {d: part_family_ext(d, parts) for d in range(1, n + 1)})


def foulkes_series(k: int, n: int) -> Series:
    """Series whose degree-d component is the eigenvalue-k character of C_d.

    For d < k the exponent reduces mod d (the character only sees k mod d).
    """
    if k < 1:
        raise ValueError("foulkes_series requires k >= 1")
    return Series(n, {d: foulkes(d, ((k - 1) % d) + 1) for d in range(1, n + 1)})
