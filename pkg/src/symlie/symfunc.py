"""Sparse exact symmetric functions in the power-sum basis.

A SymFunc is homogeneous: a degree n together with a map from partitions of
n to nonzero rationals, read as f = sum_mu c_mu * p_mu.  The zero function
carries no degree and absorbs additions.  Schur expansions go through
symmetric-group characters computed by the Murnaghan-Nakayama rule on
beta-sets, memoized across all calls.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import EMPTY, Partition, partitions_of, z_of

__all__ = [
    "SchurExpansion",
    "SymFunc",
    "character",
    "character_table",
    "d_dp1",
    "e_of",
    "h_of",
    "is_schur_positive",
    "p_of",
    "s_of",
    "syt_maj_distribution",
    "to_schur",
]


def _merge_parts(a: Partition, b: Partition) -> Partition:
    return Partition.of(tuple(sorted(a.parts + b.parts, reverse=True)))


class SymFunc:
    """A homogeneous symmetric function, stored in the power-sum basis."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        clean: dict[Partition, Fraction] = {}
        for key, c in dict(terms or {}).items():
            part = key if isinstance(key, Partition) else Partition.of(key)
            c = Fraction(c)
            if not c:
                continue
            if part.size != degree:
                raise ValueError(f"term {part} has size {part.size}, expected degree {degree}")
            clean[part] = c
        self.terms = clean
        self.degree = degree if clean else None

    @classmethod
    def _make(cls, degree, terms: dict[Partition, Fraction]) -> "SymFunc":
        # internal fast path: terms already clean (Partition keys, no zeros)
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.degree = degree if terms else None
        return obj

    @classmethod
    def zero(cls) -> "SymFunc":
        return ZERO

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, part) -> Fraction:
        key = part if isinstance(part, Partition) else Partition.of(part)
        return self.terms.get(key, Fraction(0))

    def support(self) -> tuple[Partition, ...]:
        return tuple(sorted(self.terms, key=lambda q: q.parts, reverse=True))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch in add: {self.degree} vs {other.degree}")
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                del out[k]
        return SymFunc._make(self.degree, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __neg__(self) -> "SymFunc":
        return SymFunc._make(self.degree, {k: -c for k, c in self.terms.items()})

    def scaled(self, c) -> "SymFunc":
        c = Fraction(c)
        if not c or self.is_zero:
            return ZERO
        return SymFunc._make(self.degree, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            if self.is_zero or other.is_zero:
                return ZERO
            out: dict[Partition, Fraction] = {}
            for pa, ca in self.terms.items():
                for pb, cb in other.terms.items():
                    key = _merge_parts(pa, pb)
                    s = out.get(key)
                    out[key] = ca * cb if s is None else s + ca * cb
            return SymFunc._make(self.degree + other.degree, {k: v for k, v in out.items() if v})
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def omega(self) -> "SymFunc":
        """The involution p_mu -> (-1)^{|mu| - l(mu)} p_mu (h_n <-> e_n)."""
        if self.is_zero:
            return ZERO
        out = {}
        for k, c in self.terms.items():
            out[k] = c if (k.size - k.length) % 2 == 0 else -c
        return SymFunc._make(self.degree, out)

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def to_text(self, symbol: str = "p") -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for part in self.support():
            c = self.terms[part]
            mono = symbol if part is EMPTY else f"{symbol}{part!r}"
            if abs(c) == 1 and part is not EMPTY:
                body = mono
            elif part is EMPTY:
                body = str(abs(c))
            else:
                body = f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def to_json_dict(self) -> dict:
        return {
            "degree": 0 if self.degree is None else self.degree,
            "basis": "p",
            "terms": [
                {
                    "partition": list(part.parts),
                    "num": str(self.terms[part].numerator),
                    "den": str(self.terms[part].denominator),
                }
                for part in self.support()
            ],
        }

    def __repr__(self):
        return self.to_text()


ZERO = SymFunc._make(0, {})
ONE = SymFunc._make(0, {EMPTY: Fraction(1)})


def p_of(parts) -> SymFunc:
    """The power-sum basis element p_lambda."""
    part = parts if isinstance(parts, Partition) else Partition.of(parts)
    return SymFunc._make(part.size, {part: Fraction(1)})


def _p1(k: int) -> SymFunc:
    return p_of((k,)) if k else ONE


@lru_cache(maxsize=None)
def h_of(n: int) -> SymFunc:
    """Complete homogeneous h_n via the Newton recurrence n*h_n = sum p_k h_{n-k}."""
    if n < 0:
        raise ValueError("h_of requires n >= 0")
    if n == 0:
        return ONE
    acc = ZERO
    for k in range(1, n + 1):
        acc = acc + _p1(k) * h_of(n - k)
    return acc.scaled(Fraction(1, n))


@lru_cache(maxsize=None)
def e_of(n: int) -> SymFunc:
    """Elementary e_n via n*e_n = sum (-1)^{k-1} p_k e_{n-k}."""
    if n < 0:
        raise ValueError("e_of requires n >= 0")
    if n == 0:
        return ONE
    acc = ZERO
    for k in range(1, n + 1):
        t = _p1(k) * e_of(n - k)
        acc = acc + (t if k % 2 else -t)
    return acc.scaled(Fraction(1, n))


def d_dp1(f: SymFunc) -> SymFunc:
    """Partial derivative with respect to p_1 (removes one part equal to 1)."""
    if f.is_zero:
        return ZERO
    out: dict[Partition, Fraction] = {}
    for part, c in f.terms.items():
        m1 = 0
        for a in reversed(part.parts):
            if a != 1:
                break
            m1 += 1
        if not m1:
            continue
        smaller = Partition.of(part.parts[:-1])
        s = out.get(smaller)
        v = c * m1
        out[smaller] = v if s is None else s + v
    return SymFunc._make(f.degree - 1, {k: v for k, v in out.items() if v})


# ---------------------------------------------------------------------------
# Characters of the symmetric group (Murnaghan-Nakayama on beta-sets)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _char(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r = mu[0]
    rest = mu[1:]
    L = len(lam)
    beta = tuple(lam[i] + L - 1 - i for i in range(L))
    bset = set(beta)
    total = 0
    for i in range(L):
        nb = beta[i] - r
        if nb < 0 or nb in bset:
            continue
        leg = 0
        for c in beta:
            if nb < c < beta[i]:
                leg += 1
        nbeta = sorted([nb] + [c for j, c in enumerate(beta) if j != i], reverse=True)
        lam2 = []
        for j, c in enumerate(nbeta):
            a = c - (L - 1 - j)
            if a:
                lam2.append(a)
        sub = _char(tuple(lam2), rest)
        total += -sub if leg % 2 else sub
    return total


def character(lam, mu) -> int:
    """Irreducible character chi^lam evaluated on the class of cycle type mu."""
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    mu = mu if isinstance(mu, Partition) else Partition.of(mu)
    if lam.size != mu.size:
        raise ValueError(f"character requires |lam| == |mu|, got {lam.size} vs {mu.size}")
    return _char(lam.parts, mu.parts)


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """Full character table of S_n, keyed by (irreducible, class)."""
    ps = partitions_of(n)
    return {(lam, mu): _char(lam.parts, mu.parts) for lam in ps for mu in ps}


# ---------------------------------------------------------------------------
# Schur expansions
# ---------------------------------------------------------------------------


class SchurExpansion:
    """A homogeneous symmetric function expressed in the Schur basis."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        clean: dict[Partition, Fraction] = {}
        for key, c in dict(terms or {}).items():
            part = key if isinstance(key, Partition) else Partition.of(key)
            c = Fraction(c)
            if not c:
                continue
            if part.size != degree:
                raise ValueError(f"term {part} has size {part.size}, expected degree {degree}")
            clean[part] = c
        self.terms = clean
        self.degree = degree if clean else None

    def coefficient(self, part) -> Fraction:
        key = part if isinstance(part, Partition) else Partition.of(part)
        return self.terms.get(key, Fraction(0))

    def support(self) -> tuple[Partition, ...]:
        return tuple(sorted(self.terms, key=lambda q: q.parts, reverse=True))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_positive(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def negatives(self) -> dict[Partition, Fraction]:
        return {k: c for k, c in self.terms.items() if c < 0}

    def __eq__(self, other):
        return isinstance(other, SchurExpansion) and self.terms == other.terms

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for part in self.support():
            c = self.terms[part]
            body = f"s{part!r}" if abs(c) == 1 else f"{abs(c)}*s{part!r}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def to_json_dict(self) -> dict:
        return {
            "degree": 0 if self.degree is None else self.degree,
            "basis": "schur",
            "terms": [
                {
                    "partition": list(part.parts),
                    "num": str(self.terms[part].numerator),
                    "den": str(self.terms[part].denominator),
                }
                for part in self.support()
            ],
        }

    def __repr__(self):
        return self.to_text()


def s_of(lam) -> SymFunc:
    """Schur function s_lam in the power-sum basis: sum_mu chi^lam(mu)/z_mu p_mu."""
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    out: dict[Partition, Fraction] = {}
    for mu in partitions_of(lam.size):
        chi = _char(lam.parts, mu.parts)
        if chi:
            out[mu] = Fraction(chi, z_of(mu))
    return SymFunc._make(lam.size, out)


def to_schur(f: SymFunc, require_integer: bool = False) -> SchurExpansion:
    """Expand f in the Schur basis: coefficient of s_lam is sum_mu c_mu chi^lam(mu).

    With ``require_integer`` the expansion is checked to have denominator 1
    everywhere (true for Frobenius images of genuine virtual characters).
    """
    if f.is_zero:
        return SchurExpansion(0, {})
    items = list(f.terms.items())
    out: dict[Partition, Fraction] = {}
    for lam in partitions_of(f.degree):
        c = Fraction(0)
        for mu, coef in items:
            chi = _char(lam.parts, mu.parts)
            if chi:
                c += coef * chi
        if c:
            out[lam] = c
    if require_integer:
        bad = {k: v for k, v in out.items() if v.denominator != 1}
        if bad:
            raise ValueError(f"non-integer Schur coefficients: {bad}")
    return SchurExpansion(f.degree, out)


def is_schur_positive(f: SymFunc) -> tuple[bool, dict[Partition, Fraction]]:
    """Whether every Schur coefficient of f is >= 0, plus all negative witnesses."""
    neg = to_schur(f).negatives()
    return (not neg, neg)


# ---------------------------------------------------------------------------
# Standard Young tableaux major-index oracle
# ---------------------------------------------------------------------------


def syt_maj_distribution(shape, bound: int = 10) -> dict[int, int]:
    """Counts of standard Young tableaux of the given shape by maj mod n.

    Independent enumeration oracle: tableaux are generated directly and the
    major index (sum of descent positions i where i+1 sits in a lower row)
    is accumulated by residue class.  Sizes above ``bound`` are refused.
    """
    shape = shape if isinstance(shape, Partition) else Partition.of(shape)
    n = shape.size
    if n > bound:
        raise ValueError(f"shape size {n} exceeds the oracle bound {bound}")
    if n == 0:
        return {0: 1}
    rows = shape.parts
    k = len(rows)
    filled = [0] * k
    row_of = [0] * (n + 1)
    counts: dict[int, int] = {}

    def place(v: int, maj: int) -> None:
        if v > n:
            counts[maj % n] = counts.get(maj % n, 0) + 1
            return
        for r in range(k):
            if filled[r] < rows[r] and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                row_of[v] = r
                place(v + 1, maj + (v - 1 if v > 1 and r > row_of[v - 1] else 0))
                filled[r] -= 1

    place(1, 0)
    return counts
