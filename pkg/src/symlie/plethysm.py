"""Plethysm of symmetric functions and truncated generating series.

A Series holds homogeneous components for degrees 1..N plus a rational
constant term.  N is a mandatory explicit truncation window: every
operation silently drops anything above N, which turns each identity in
the catalog into a finite exact check.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import EMPTY, Partition
from .symfunc import ONE, ZERO, SymFunc, e_of, h_of, p_of

__all__ = [
    "Series",
    "alt_omega",
    "e_pm_series",
    "e_series",
    "ext_power_layers",
    "ext_powers",
    "ext_powers_signed",
    "h_pm_series",
    "h_series",
    "higher_module",
    "p1_series",
    "pleth",
    "pleth_homog",
    "pleth_inverse",
    "pleth_p",
    "product_series",
    "series_exp",
    "sym_power_layers",
    "sym_powers",
    "sym_powers_signed",
]


class Series:
    """Symmetric-function series truncated at a fixed maximum degree."""

    __slots__ = ("max_degree", "constant", "components")

    def __init__(self, max_degree: int, components=None, constant=0):
        n = int(max_degree)
        if n < 0:
            raise ValueError("max_degree must be >= 0")
        self.max_degree = n
        self.constant = Fraction(constant)
        comps: dict[int, SymFunc] = {}
        for d, f in dict(components or {}).items():
            if f.is_zero:
                continue
            if not 1 <= d <= n:
                raise ValueError(f"component degree {d} outside 1..{n}")
            if f.degree != d:
                raise ValueError(f"component at degree {d} has degree {f.degree}")
            comps[d] = f
        self.components = comps

    @classmethod
    def zero(cls, n: int) -> "Series":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Series":
        return cls(n, constant=1)

    @classmethod
    def from_symfunc(cls, f: SymFunc, n: int) -> "Series":
        if f.is_zero:
            return cls(n)
        if f.degree == 0:
            return cls(n, constant=f.coefficient(EMPTY))
        if f.degree > n:
            return cls(n)
        return cls(n, {f.degree: f})

    def component(self, d: int) -> SymFunc:
        if not 1 <= d <= self.max_degree:
            raise ValueError(f"degree {d} outside the truncation window 1..{self.max_degree}")
        return self.components.get(d, ZERO)

    @property
    def is_constant_free(self) -> bool:
        return not self.constant

    def _require_same_window(self, other: "Series") -> None:
        if self.max_degree != other.max_degree:
            raise ValueError(f"truncation mismatch: {self.max_degree} vs {other.max_degree}")

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_window(other)
        comps = dict(self.components)
        for d, f in other.components.items():
            g = comps.get(d)
            s = f if g is None else g + f
            if s.is_zero:
                comps.pop(d, None)
            else:
                comps[d] = s
        out = Series(self.max_degree)
        out.constant = self.constant + other.constant
        out.components = comps
        return out

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __neg__(self) -> "Series":
        out = Series(self.max_degree)
        out.constant = -self.constant
        out.components = {d: -f for d, f in self.components.items()}
        return out

    def scaled(self, c) -> "Series":
        c = Fraction(c)
        out = Series(self.max_degree)
        if c:
            out.constant = self.constant * c
            out.components = {d: f.scaled(c) for d, f in self.components.items()}
        return out

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scaled(other)
        self._require_same_window(other)
        n = self.max_degree
        comps: dict[int, SymFunc] = {}

        def bump(d: int, f: SymFunc) -> None:
            if f.is_zero:
                return
            g = comps.get(d)
            s = f if g is None else g + f
            if s.is_zero:
                comps.pop(d, None)
            else:
                comps[d] = s

        if self.constant:
            for d, f in other.components.items():
                bump(d, f.scaled(self.constant))
        if other.constant:
            for d, f in self.components.items():
                bump(d, f.scaled(other.constant))
        for a, fa in self.components.items():
            for b, fb in other.components.items():
                if a + b <= n:
                    bump(a + b, fa * fb)
        out = Series(n)
        out.constant = self.constant * other.constant
        out.components = comps
        return out

    def __rmul__(self, other):
        return self.scaled(other)

    def omega_each(self) -> "Series":
        """Apply the omega involution to every homogeneous component."""
        out = Series(self.max_degree)
        out.constant = self.constant
        out.components = {d: f.omega() for d, f in self.components.items()}
        return out

    def alt_omega(self) -> "Series":
        """Degree-d component becomes (-1)^{d-1} omega(component)."""
        if self.constant:
            raise ValueError("alt_omega requires a constant-free series")
        out = Series(self.max_degree)
        comps = {}
        for d, f in self.components.items():
            g = f.omega()
            comps[d] = g if d % 2 else -g
        out.components = comps
        return out

    def truncated(self, n: int) -> "Series":
        out = Series(n)
        out.constant = self.constant
        out.components = {d: f for d, f in self.components.items() if d <= n}
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Series)
            and self.max_degree == other.max_degree
            and self.constant == other.constant
            and self.components == other.components
        )

    def __repr__(self):
        bits = []
        if self.constant:
            bits.append(str(self.constant))
        for d in sorted(self.components):
            bits.append(f"({self.components[d].to_text()})")
        return " + ".join(bits) if bits else "0"

    def to_json_dict(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "constant_num": str(self.constant.numerator),
            "constant_den": str(self.constant.denominator),
            "components": [self.components[d].to_json_dict() for d in sorted(self.components)],
        }


def p1_series(n: int) -> Series:
    return Series(n, {1: p_of((1,))})


def h_series(n: int) -> Series:
    """H = sum h_i, constant term 1."""
    return Series(n, {d: h_of(d) for d in range(1, n + 1)}, constant=1)


def e_series(n: int) -> Series:
    return Series(n, {d: e_of(d) for d in range(1, n + 1)}, constant=1)


def h_pm_series(n: int) -> Series:
    """H^pm = sum (-1)^r h_r."""
    return Series(n, {d: h_of(d) if d % 2 == 0 else -h_of(d) for d in range(1, n + 1)}, constant=1)


def e_pm_series(n: int) -> Series:
    return Series(n, {d: e_of(d) if d % 2 == 0 else -e_of(d) for d in range(1, n + 1)}, constant=1)


def alt_omega(F: Series) -> Series:
    return F.alt_omega()


# ---------------------------------------------------------------------------
# Plethysm
# ---------------------------------------------------------------------------


def _stretch(f: SymFunc, k: int) -> SymFunc:
    # p_k[f]: every part of every p-monomial is multiplied by k
    if f.is_zero or k == 1:
        return f
    return SymFunc._make(
        f.degree * k,
        {Partition.of(tuple(a * k for a in part.parts)): c for part, c in f.terms.items()},
    )


def pleth_p(k: int, g):
    """p_k[g] for g a SymFunc or a Series (series components above N are dropped)."""
    if k < 1:
        raise ValueError("pleth_p requires k >= 1")
    if isinstance(g, SymFunc):
        return _stretch(g, k)
    n = g.max_degree
    out = Series(n)
    out.constant = g.constant
    out.components = {d * k: _stretch(f, k) for d, f in g.components.items() if d * k <= n}
    return out


def pleth_homog(f: SymFunc, g: SymFunc) -> SymFunc:
    """Plethysm f[g] for homogeneous f and g; the result is homogeneous."""
    if f.is_zero:
        return ZERO
    if f.degree == 0:
        return f
    if g.is_zero:
        return ZERO
    out = ZERO
    for mu, c in f.terms.items():
        prod = ONE.scaled(c)
        for a in mu.parts:
            prod = prod * _stretch(g, a)
        out = out + prod
    return out


def _components_slice(parts: tuple[int, ...], g: Series, target: int) -> SymFunc:
    """Degree-``target`` component of prod_i p_{parts[i]}[g] for constant-free g."""
    degs = sorted(g.components)
    if not degs:
        return ZERO
    dmin, dmax = degs[0], degs[-1]
    order = tuple(sorted(parts, reverse=True))
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + order[i]

    total = ZERO

    def rec(idx: int, remaining: int, acc: SymFunc) -> None:
        nonlocal total
        if idx == len(order):
            if remaining == 0:
                total = total + acc
            return
        a = order[idx]
        rest = suffix[idx + 1]
        for j in degs:
            d = a * j
            if d > remaining - rest * dmin:
                break
            if remaining - d > rest * dmax:
                continue
            rec(idx + 1, remaining - d, acc * _stretch(g.components[j], a))

    rec(0, target, ONE)
    return total


def pleth(f, g) -> Series:
    """Plethysm f[g] with f a SymFunc or Series, truncated at g's window.

    g must be constant-free (plethysm of an infinite sum into a constant is
    not defined here).  A SymFunc inner argument is wrapped as a series
    truncated at f.degree * g.degree.
    """
    if isinstance(g, SymFunc):
        if isinstance(f, SymFunc):
            return Series.from_symfunc(pleth_homog(f, g), max((f.degree or 0) * (g.degree or 0), 1))
        g = Series.from_symfunc(g, g.degree * f.max_degree if not g.is_zero else f.max_degree)
    if not g.is_constant_free:
        raise ValueError("plethysm requires a constant-free inner series")
    n = g.max_degree
    if isinstance(f, SymFunc):
        monos = [(part.parts, c) for part, c in f.terms.items() if part is not EMPTY]
        const = f.coefficient(EMPTY) if not f.is_zero and f.degree == 0 else Fraction(0)
    else:
        monos = []
        const = f.constant
        for comp in f.components.values():
            monos.extend((part.parts, c) for part, c in comp.terms.items())
    comps: dict[int, SymFunc] = {}
    for target in range(1, n + 1):
        acc = ZERO
        for parts, c in monos:
            if sum(parts) > target:
                continue
            piece = _components_slice(parts, g, target)
            if not piece.is_zero:
                acc = acc + piece.scaled(c)
        if not acc.is_zero:
            comps[target] = acc
    out = Series(n)
    out.constant = const
    out.components = comps
    return out


# ---------------------------------------------------------------------------
# Symmetric and exterior power series H[F], E[F], signed variants, layers
# ---------------------------------------------------------------------------


def series_exp(x: Series) -> Series:
    """exp(x) for a constant-free series, truncated at x's window."""
    if not x.is_constant_free:
        raise ValueError("series_exp requires a constant-free argument")
    n = x.max_degree
    out = Series.one(n)
    for j in range(n, 0, -1):
        out = Series.one(n) + (x * out).scaled(Fraction(1, j))
    return out


def _log_sum(F: Series, alternating: bool) -> Series:
    # sum_k p_k[F]/k, or with signs (-1)^{k-1} for the exterior variant
    if not F.is_constant_free:
        raise ValueError("power series of modules require a constant-free argument")
    n = F.max_degree
    acc = Series.zero(n)
    for k in range(1, n + 1):
        t = pleth_p(k, F).scaled(Fraction(1, k) if not alternating or k % 2 else Fraction(-1, k))
        acc = acc + t
    return acc


def sym_powers(F: Series) -> Series:
    """H[F] = sum_r h_r[F] = exp(sum_k p_k[F]/k), constant term 1."""
    return series_exp(_log_sum(F, alternating=False))


def ext_powers(F: Series) -> Series:
    """E[F] = sum_r e_r[F]."""
    return series_exp(_log_sum(F, alternating=True))


def sym_powers_signed(F: Series) -> Series:
    """H^pm[F] = sum_r (-1)^r h_r[F] = 1/E[F]."""
    return series_exp(-_log_sum(F, alternating=True))


def ext_powers_signed(F: Series) -> Series:
    """E^pm[F] = sum_r (-1)^r e_r[F] = 1/H[F]."""
    return series_exp(-_log_sum(F, alternating=False))


def sym_power_layers(F: Series) -> list[Series]:
    """[h_0[F], h_1[F], ..., h_N[F]] via the recurrence r*h_r[F] = sum p_k[F] h_{r-k}[F].

    Layer r is the length-r slice of the symmetrized powers: summed over
    degrees it contributes sum_{l(lam)=r} H_lam[F].
    """
    n = F.max_degree
    P = [None] + [pleth_p(k, F) for k in range(1, n + 1)]
    layers = [Series.one(n)]
    for r in range(1, n + 1):
        acc = Series.zero(n)
        for k in range(1, r + 1):
            acc = acc + P[k] * layers[r - k]
        layers.append(acc.scaled(Fraction(1, r)))
    return layers


def ext_power_layers(F: Series) -> list[Series]:
    """[e_0[F], ..., e_N[F]] via r*e_r[F] = sum (-1)^{k-1} p_k[F] e_{r-k}[F]."""
    n = F.max_degree
    P = [None] + [pleth_p(k, F) for k in range(1, n + 1)]
    layers = [Series.one(n)]
    for r in range(1, n + 1):
        acc = Series.zero(n)
        for k in range(1, r + 1):
            t = P[k] * layers[r - k]
            acc = acc + (t if k % 2 else -t)
        layers.append(acc.scaled(Fraction(1, r)))
    return layers


def higher_module(Q: Series, lam, exterior: bool = False) -> SymFunc:
    """The product prod_i h_{m_i}[q_i] (or e_{m_i}[q_i]) over the parts i of lam.

    q_i is the degree-i component of Q; lam with a part above Q's window is
    rejected since the needed component is not defined.
    """
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    if lam.size == 0:
        return ONE
    if lam.parts[0] > Q.max_degree:
        raise ValueError(f"series truncated at {Q.max_degree}, needs degree {lam.parts[0]}")
    base = e_of if exterior else h_of
    out = ONE
    for i, m in sorted(lam.multiplicities().items()):
        out = out * pleth_homog(base(m), Q.component(i))
        if out.is_zero:
            return ZERO
    return out


# ---------------------------------------------------------------------------
# Combinatorial product expansions and plethystic inversion
# ---------------------------------------------------------------------------


def product_series(factors, n: int) -> Series:
    """Expand prod (1 + sign*p_m)^{exponent} combinatorially, truncated at n.

    ``factors`` is an iterable of (m, sign, exponent) with sign and exponent
    in {+1, -1}; part values m must be distinct.  The expansion enumerates
    partitions with parts drawn from the factor values (each exponent-(+1)
    part at most once) rather than dividing series, so it provides a side
    independent of the plethysm machinery.
    """
    fl = []
    seen = set()
    for m, s, e in factors:
        m = int(m)
        if m < 1 or s not in (1, -1) or e not in (1, -1):
            raise ValueError(f"malformed factor {(m, s, e)}")
        if m in seen:
            raise ValueError(f"duplicate factor value {m}")
        seen.add(m)
        if m <= n:
            fl.append((m, s, e))
    fl.sort(reverse=True)
    comps: dict[int, dict[Partition, Fraction]] = {d: {} for d in range(1, n + 1)}

    def rec(idx: int, total: int, parts: tuple[int, ...], coeff: int) -> None:
        if idx == len(fl):
            if total:
                key = Partition.of(parts)
                bucket = comps[total]
                bucket[key] = bucket.get(key, Fraction(0)) + coeff
            return
        m, s, e = fl[idx]
        jmax = (n - total) // m
        if e == 1:
            jmax = min(jmax, 1)
        c = coeff
        for j in range(jmax + 1):
            if j:
                c *= s if e == 1 else -s
                # (1 + s p)^{-1} = sum (-s)^j p^j ;  (1 + s p)^{+1} = 1 + s p
            rec(idx + 1, total + m * j, parts + (m,) * j, c)

    rec(0, 0, (), 1)
    out = Series(n)
    out.constant = Fraction(1)
    out.components = {
        d: SymFunc._make(d, {k: v for k, v in bucket.items() if v})
        for d, bucket in comps.items()
        if any(bucket.values())
    }
    out.components = {d: f for d, f in out.components.items() if not f.is_zero}
    return out


def pleth_inverse(F: Series) -> Series:
    """The series G with F[G] = G[F] = p_1 up to the truncation window.

    Requires F constant-free with degree-1 component exactly p_1; computed
    by degree-by-degree back-substitution.
    """
    n = F.max_degree
    if not F.is_constant_free:
        raise ValueError("plethystic inversion requires a constant-free series")
    if F.component(1) != p_of((1,)):
        raise ValueError("plethystic inversion requires degree-1 component p_1")
    tail_monos = []
    for d in range(2, n + 1):
        comp = F.components.get(d)
        if comp is not None:
            tail_monos.extend((part.parts, c) for part, c in comp.terms.items())
    g = Series(n)
    g.components = {1: p_of((1,))}
    for target in range(2, n + 1):
        acc = ZERO
        for parts, c in tail_monos:
            if sum(parts) > target:
                continue
            piece = _components_slice(parts, g, target)
            if not piece.is_zero:
                acc = acc + piece.scaled(c)
        if not acc.is_zero:
            g.components[target] = -acc
    return g
