"""The identity catalog and Schur-positivity scanning harness.

Each catalog entry is a named, parameterized identity between truncated
symmetric-function series, checked by exact equality per graded slice.
Right-hand sides of product identities are always expanded combinatorially
(partition enumeration), never re-derived through the plethysm path that
produced the left side, so the two routes stay independent.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import Partition, PrimeSet, divisors, is_prime, moebius, partitions_of
from .plethysm import (
    Series,
    alt_omega,
    e_series,
    ext_power_layers,
    ext_powers,
    ext_powers_signed,
    h_series,
    higher_module,
    p1_series,
    pleth,
    pleth_inverse,
    pleth_p,
    product_series,
    sym_power_layers,
    sym_powers,
    sym_powers_signed,
)
from .symfunc import SymFunc, e_of, h_of, is_schur_positive, p_of, to_schur
from .families import (
    DivisorWeight,
    MOEBIUS,
    PartSet,
    TOTIENT,
    conj,
    conj_series,
    exponent_poly,
    family_series,
    foulkes,
    foulkes_series,
    lie,
    lie_primes_bar_series,
    lie_primes_series,
    lie_series,
    part_family,
    part_family_ext_series,
    part_family_series,
    part_family_via_lie,
)

__all__ = [
    "BudgetError",
    "PositivityReport",
    "ScanVerdict",
    "UnknownIdentityError",
    "VerifyReport",
    "build_clauses",
    "hook_content_check",
    "identity_info",
    "lifting_check",
    "list_identities",
    "scan_families",
    "scan_positivity",
    "verify",
]

DEFAULT_SCAN_BUDGET = 20
DEFAULT_LIFT_BUDGET = 32

# Schur-negativity exception lists for p_1 * L_{n-1} - L_n over the
# single-prime families, recorded up to n = 32.
LIFTING_EXCEPTIONS = {3: (3, 6, 9, 10, 18, 27), 5: (5, 6, 10, 25, 26)}


class UnknownIdentityError(KeyError):
    pass


class BudgetError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _witness_json(witnesses) -> list:
    return [
        {"partition": list(part.parts), "num": str(c.numerator), "den": str(c.denominator)}
        for part, c in sorted(witnesses.items(), key=lambda kv: kv[0].parts, reverse=True)
    ]


@dataclass
class VerifyReport:
    id: str
    params: dict
    N: int
    status: str  # "pass" | "fail"
    first_mismatch: dict | None = None
    witnesses: list = field(default_factory=list)
    elapsed_ms: float | None = None
    details: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self, timing: bool = False) -> dict:
        return {
            "id": self.id,
            "params": self.params,
            "N": self.N,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "witnesses": self.witnesses,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
            "details": self.details,
        }


@dataclass
class ScanVerdict:
    n: int
    positive: bool
    witnesses: dict
    elapsed_ms: float

    def to_json_dict(self, timing: bool = False) -> dict:
        return {
            "n": self.n,
            "positive": self.positive,
            "witnesses": _witness_json(self.witnesses),
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else None,
        }


@dataclass
class PositivityReport:
    family: str
    params: dict
    verdicts: list[ScanVerdict]

    @property
    def all_positive(self) -> bool:
        return all(v.positive for v in self.verdicts)

    def negatives(self) -> list[int]:
        return [v.n for v in self.verdicts if not v.positive]

    def to_json_dict(self, timing: bool = False) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "all_positive": self.all_positive,
            "verdicts": [v.to_json_dict(timing) for v in self.verdicts],
        }


# ---------------------------------------------------------------------------
# Comparison of graded slices
# ---------------------------------------------------------------------------


def _diff_symfunc(a: SymFunc, b: SymFunc) -> list[dict]:
    keys = set(a.terms) | set(b.terms)
    out = []
    for k in sorted(keys, key=lambda q: q.parts, reverse=True):
        ca, cb = a.coefficient(k), b.coefficient(k)
        if ca != cb:
            out.append({"partition": list(k.parts), "lhs": _fmt_frac(ca), "rhs": _fmt_frac(cb)})
    return out


def _series_mismatch(lhs: Series, rhs: Series) -> dict | None:
    if lhs.constant != rhs.constant:
        return {
            "degree": 0,
            "diffs": [{"partition": [], "lhs": _fmt_frac(lhs.constant), "rhs": _fmt_frac(rhs.constant)}],
        }
    for d in range(1, min(lhs.max_degree, rhs.max_degree) + 1):
        fa, fb = lhs.component(d), rhs.component(d)
        if fa != fb:
            return {"degree": d, "diffs": _diff_symfunc(fa, fb)}
    return None


def _vgraded_mismatch(lhs: dict[int, Series], rhs: dict[int, Series], n: int) -> dict | None:
    for r in range(n + 1):
        a = lhs.get(r, Series.zero(n))
        b = rhs.get(r, Series.zero(n))
        m = _series_mismatch(a, b)
        if m is not None:
            m["length"] = r
            return m
    return None


# ---------------------------------------------------------------------------
# Length-graded product expansion prod (1 + s p_m)^{poly_m(v)}
# ---------------------------------------------------------------------------


def _v_product(factors, n: int) -> dict[int, Series]:
    """Expand prod (1 + s*p_m)^{poly_m(v)} as a map v-power -> Series.

    ``factors`` is a list of (m, s, poly) with poly a map from v-exponent to
    rational coefficient.  Computed as exp of the explicit logarithm, so the
    v-grading is carried exactly.
    """
    log_terms: dict[int, Series] = {}
    for m, s, poly in factors:
        j = 1
        while m * j <= n:
            c = Fraction((s**j) * (-1 if j % 2 == 0 else 1), j)
            f = p_of((m,) * j).scaled(c)
            for e, ce in poly.items():
                g = f.scaled(ce)
                if g.is_zero:
                    continue
                cur = log_terms.get(e, Series.zero(n))
                log_terms[e] = cur + Series.from_symfunc(g, n)
            j += 1

    def vmul(A: dict[int, Series], B: dict[int, Series]) -> dict[int, Series]:
        out: dict[int, Series] = {}
        zero = Series.zero(n)
        for a, fa in A.items():
            for b, fb in B.items():
                if a + b > n:
                    continue
                p = fa * fb
                cur = out.get(a + b)
                out[a + b] = p if cur is None else cur + p
        return {k: v for k, v in out.items() if v != zero}

    result = {0: Series.one(n)}
    for j in range(n, 0, -1):
        scaled = {e: f.scaled(Fraction(1, j)) for e, f in log_terms.items()}
        result = vmul(scaled, result)
        base = result.get(0, Series.zero(n))
        result[0] = base + Series.one(n)
    return result


def _negpoly(p: dict) -> dict:
    return {e: -c for e, c in p.items()}


def _flippoly(p: dict) -> dict:
    # substitute v -> -v
    return {e: (c if e % 2 == 0 else -c) for e, c in p.items()}


def _layer_dict(layers: list[Series], signed: bool = False) -> dict[int, Series]:
    out = {}
    for r, s in enumerate(layers):
        out[r] = s.scaled(-1) if signed and r % 2 else s
    return out


# ---------------------------------------------------------------------------
# Shared builder helpers
# ---------------------------------------------------------------------------


def _geom(members, n: int) -> Series:
    return product_series([(m, -1, -1) for m in members], n)


def _smooth_members(S: PrimeSet, n: int) -> list[int]:
    return [m for m in range(1, n + 1) if S.is_smooth(m)]


def _cancel_factors(factors) -> list:
    counts: dict[tuple[int, int], int] = {}
    for m, s, e in factors:
        counts[(m, s)] = counts.get((m, s), 0) + e
    out = []
    for (m, s), e in sorted(counts.items()):
        if e == 0:
            continue
        if e not in (1, -1):
            raise ValueError(f"cannot reduce factor (1 + {s}*p_{m})^{e}")
        out.append((m, s, e))
    return out


def _ones(n: int) -> Series:
    return Series(n, {d: p_of((1,) * d) for d in range(1, n + 1)})


def _alt_e_series(n: int) -> Series:
    """sum_{r>=1} (-1)^{r-1} e_r as an explicit constant-free series."""
    return Series(n, {d: e_of(d) if d % 2 else -e_of(d) for d in range(1, n + 1)})


def _lieq_series(q: int, n: int) -> Series:
    return lie_primes_series(PrimeSet((q,)), n)


def _p1_minus_pq(q: int, n: int) -> Series:
    comps = {1: p_of((1,))}
    if q <= n:
        comps[q] = comps.get(q, SymFunc.zero()) + (-p_of((q,)))
    if q == 1:
        return Series(n)  # p_1 - p_1
    return Series(n, comps)


def _p1_plus_pq(q: int, n: int) -> Series:
    comps = {1: p_of((1,))}
    if q <= n and q != 1:
        comps[q] = p_of((q,))
    return Series(n, comps)


def _mod1_h(k: int, n: int, elementary: bool = False) -> Series:
    base = e_of if elementary else h_of
    return Series(n, {d: base(d) for d in range(1, n + 1) if d % k == 1 % k})


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    statement: str
    param_schema: dict
    defaults: dict
    default_N: int
    builder: object  # callable(params, N) -> list of (label, kind, lhs, rhs)
    custom: object = None  # callable(params, N) -> VerifyReport pieces


_REGISTRY: dict[str, IdentityEntry] = {}


def _register(id, statement, builder=None, schema=None, defaults=None, N=10, custom=None):
    _REGISTRY[id] = IdentityEntry(id, statement, schema or {}, defaults or {}, N, builder, custom)


def _clause(label, lhs, rhs):
    return (label, "series", lhs, rhs)


def _vclause(label, lhs, rhs):
    return (label, "vgraded", lhs, rhs)


# -- classical decompositions ------------------------------------------------


def _b_thrall(p, n):
    return [_clause("H[Lie] = (1-p_1)^{-1}", sym_powers(lie_series(n)), _geom([1], n))]


def _b_cadogan(p, n):
    rhs = Series(n, {1: p_of((1,))}, constant=1)
    return [_clause("H[sum (-1)^{d-1} w(Lie_d)] = 1 + p_1", sym_powers(alt_omega(lie_series(n))), rhs)]


def _b_solomon(p, n):
    return [_clause("H[Conj] = prod (1-p_m)^{-1}", sym_powers(conj_series(n)), _geom(range(1, n + 1), n))]


def _b_symLS(p, n):
    S = p["S"]
    lhs = sym_powers(lie_primes_series(S, n))
    return [_clause("H[L] = prod over smooth m of (1-p_m)^{-1}", lhs, _geom(_smooth_members(S, n), n))]


def _b_altsymLS(p, n):
    S = p["S"]
    lhs = sym_powers(alt_omega(lie_primes_series(S, n)))
    rhs = product_series([(m, 1, 1) for m in _smooth_members(S, n)], n)
    return [_clause("H[alt-w(L)] = prod over smooth m of (1+p_m)", lhs, rhs)]


def _b_extLS(p, n):
    S = p["S"]
    lhs = ext_powers(lie_primes_series(S, n))
    sm = _smooth_members(S, n)
    if 2 in S:
        rhs = _geom([m for m in sm if m % 2], n)
        label = "E[L] = prod over odd smooth m of (1-p_m)^{-1}  (2 in S)"
    else:
        evens = [m for m in range(2, n + 1, 2) if S.is_smooth(m // 2)]
        rhs = product_series([(m, -1, -1) for m in sm] + [(m, -1, 1) for m in evens], n)
        label = "E[L] = prod smooth (1-p_m)^{-1} * prod half-smooth even (1-p_m)  (2 not in S)"
    return [_clause(label, lhs, rhs)]


def _b_extLS_omega(p, n):
    S = p["S"]
    if 2 in S:
        raise ValueError("the omega-form of the exterior identity requires 2 not in S")
    lhs = ext_powers(lie_primes_series(S, n)).omega_each()
    sm = _smooth_members(S, n)
    evens = [m for m in range(2, n + 1, 2) if S.is_smooth(m // 2)]
    rhs = product_series([(m, -1, -1) for m in sm] + [(m, 1, 1) for m in evens], n)
    return [_clause("w(E[L]) = prod smooth (1-p_m)^{-1} * prod half-smooth even (1+p_m)", lhs, rhs)]


def _b_altextLS(p, n):
    S = p["S"]
    lhs = ext_powers(alt_omega(lie_primes_series(S, n)))
    sm = _smooth_members(S, n)
    if 2 in S:
        rhs = product_series([(m, 1, 1) for m in sm if m % 2], n)
        label = "E[alt-w(L)] = prod over odd smooth m of (1+p_m)  (2 in S)"
    else:
        evens = [m for m in range(2, n + 1, 2) if S.is_smooth(m // 2)]
        rhs = product_series([(m, 1, 1) for m in sm] + [(m, 1, -1) for m in evens], n)
        label = "E[alt-w(L)] = prod smooth (1+p_m) * prod half-smooth even (1+p_m)^{-1}  (2 not in S)"
    return [_clause(label, lhs, rhs)]


def _b_extLieConj1(p, n):
    lhs = ext_powers(lie_series(n)).omega_each()
    return [_clause("w(E[Lie]) = (1+p_2)(1-p_1)^{-1}", lhs, product_series([(2, 1, 1), (1, -1, -1)], n))]


def _b_extLieConj2(p, n):
    rhs = _geom(range(1, n + 1, 2), n)
    return [_clause("E[Conj] = prod over odd m of (1-p_m)^{-1}", ext_powers(conj_series(n)), rhs)]


def _b_extLieConj3(p, n):
    direct = Series(n)
    comps = {}
    for d in range(1, n + 1):
        acc = SymFunc.zero()
        L = lie_series(n)
        for lam in partitions_of(d):
            t = higher_module(L, lam)
            if (d - lam.length) % 2:
                t = -t
            acc = acc + t
        if not acc.is_zero:
            comps[d] = acc
    direct = Series(n, comps, constant=1)
    lhs2 = ext_powers(alt_omega(lie_series(n))).omega_each()
    rhs = product_series([(1, 1, 1), (2, -1, -1)], n)
    return [
        _clause("sum (-1)^{|lam|-l} H_lam[Lie] = w(E[alt-w(Lie)])", direct, lhs2),
        _clause("w(E[alt-w(Lie)]) = (1+p_1)(1-p_2)^{-1}", lhs2, rhs),
    ]


def _b_extLieConj4(p, n):
    lhs = ext_powers(alt_omega(conj_series(n)))
    rhs = product_series([(m, 1, 1) for m in range(1, n + 1, 2)], n)
    return [_clause("E[alt-w(Conj)] = prod over odd m of (1+p_m)", lhs, rhs)]


def _b_dualityA(p, n):
    rhs = _geom([1], n)
    return [
        _clause("H[Lie] = (1-p_1)^{-1}", sym_powers(lie_series(n)), rhs),
        _clause("E[L^(2)] = (1-p_1)^{-1}", ext_powers(_lieq_series(2, n)), rhs),
    ]


def _b_dualityB(p, n):
    rhs = _geom(range(1, n + 1, 2), n)
    return [
        _clause("H[Lbar^(2)] = prod odd (1-p_m)^{-1}", sym_powers(lie_primes_bar_series(PrimeSet((2,)), n)), rhs),
        _clause("E[Conj] = prod odd (1-p_m)^{-1}", ext_powers(conj_series(n)), rhs),
    ]


def _b_lie2_reg(p, n):
    return [_clause("E[L^(2)] = (1-p_1)^{-1}", ext_powers(_lieq_series(2, n)), _geom([1], n))]


def _b_lie2_hpm(p, n):
    rhs = Series(n, {1: -p_of((1,))}, constant=1)
    return [_clause("Hpm[L^(2)] = 1 - p_1", sym_powers_signed(_lieq_series(2, n)), rhs)]


def _b_lie2_cadogan(p, n):
    rhs = Series(n, {1: p_of((1,))}, constant=1)
    return [_clause("E[sum (-1)^{d-1} w(L^(2)_d)] = 1 + p_1", ext_powers(alt_omega(_lieq_series(2, n))), rhs)]


# -- part-set families --------------------------------------------------------


def _b_fT_sym(p, n):
    T = p["T"]
    lhs = sym_powers(part_family_series(T, n))
    return [_clause("H[F] = prod over the part set of (1-p_m)^{-1}", lhs, _geom(T.members_up_to(n), n))]


def _b_fT_decomp(p, n):
    T = p["T"]
    lhs = part_family_series(T, n)
    rhs = Series(n, {d: part_family_via_lie(d, T) for d in range(1, n + 1)})
    return [_clause("f_d = sum over set members m | d of Lie_{d/m}[p_m]", lhs, rhs)]


def _b_fT_ext(p, n):
    T = p["T"]
    lhs = ext_powers(part_family_ext_series(T, n))
    return [_clause("E[G] = prod over the part set of (1-p_m)^{-1}", lhs, _geom(T.members_up_to(n), n))]


def _b_conj_decomp(p, n):
    L = lie_series(n)
    acc = Series.zero(n)
    for m in range(1, n + 1):
        acc = acc + pleth_p(m, L)
    return [_clause("sum_m p_m[Lie] = sum Conj_d", acc, conj_series(n))]


def _b_conj_psums(p, n):
    lhs = pleth(conj_series(n), _alt_e_series(n))
    rhs = Series(n, {d: p_of((d,)) for d in range(1, n + 1)})
    return [_clause("Conj[sum (-1)^{r-1} e_r] = sum_m p_m", lhs, rhs)]


def _b_conj_inverse(p, n):
    M = Series(n, {d: p_of((d,)).scaled(moebius(d)) for d in range(1, n + 1) if moebius(d)})
    rhs = Series.one(n) - ext_powers_signed(M)
    C = conj_series(n)
    return [
        _clause("Conj^{<-1>} = sum (-1)^{r-1} e_r[sum mu(m) p_m]", pleth_inverse(C), rhs),
        _clause("Conj[candidate inverse] = p_1", pleth(C, rhs), p1_series(n)),
    ]


def _b_lieq_decomp(p, n):
    q = p["q"]
    if not is_prime(q):
        raise ValueError("lieq-decomp requires a prime q")
    comps = {}
    for d in range(1, n + 1):
        acc = SymFunc.zero()
        qr = 1
        while d % qr == 0:
            acc = acc + pleth_p(qr, lie(d // qr))
            qr *= q
        comps[d] = acc
    rhs = Series(n, comps)
    return [_clause("L^(q)_d = sum over q-power divisors q^r of Lie_{d/q^r}[p_{q^r}]", _lieq_series(q, n), rhs)]


def _b_lieq_transport(p, n):
    q = p["q"]
    if not is_prime(q):
        raise ValueError("lieq-transport requires a prime q")
    # (p_1 - p_q) composed outermost: L^(q) - p_q[L^(q)]
    Lq = _lieq_series(q, n)
    lhs = Lq - pleth_p(q, Lq)
    return [_clause("(p_1 - p_q)[L^(q)] = L^(q) - L^(q)[p_q] = Lie", lhs, lie_series(n))]


def _b_lieq_inverse(p, n):
    q = p["q"]
    if not is_prime(q):
        raise ValueError("lieq-inverse requires a prime q")
    B = Series.one(n) - ext_powers_signed(_p1_minus_pq(q, n))
    Lq = _lieq_series(q, n)
    return [
        _clause("(L^(q))^{<-1>} = (sum (-1)^{r-1} e_r)[p_1 - p_q]", pleth_inverse(Lq), B),
        _clause("L^(q)[candidate inverse] = p_1", pleth(Lq, B), p1_series(n)),
    ]


def _b_powk_recurrence(p, n):
    k = p["k"]
    if k < 2:
        raise ValueError("powk-recurrence requires k >= 2")
    T = PartSet.powers_of(k)
    comps = {}
    for d in range(1, n + 1):
        f = lie(d)
        if d % k == 0:
            f = f + pleth_p(k, part_family(d // k, T))
        comps[d] = f
    return [_clause("f_d = Lie_d (+ f_{d/k}[p_k] when k | d)", part_family_series(T, n), Series(n, comps))]


def _b_onek(p, n):
    k = p["k"]
    if k < 2:
        raise ValueError("onek requires k >= 2")
    T = PartSet.of(1, k)
    comps = {}
    for d in range(1, n + 1):
        f = lie(d)
        if d % k == 0:
            f = f + pleth_p(k, lie(d // k))
        comps[d] = f
    clauses = [_clause("f_d = Lie_d (+ Lie_{d/k}[p_k] when k | d)", part_family_series(T, n), Series(n, comps))]
    if is_prime(k):
        clauses.append(
            _clause("for prime k the family is the eigenvalue-k induced character", part_family_series(T, n), foulkes_series(k, n))
        )
    return clauses


def _b_onek_ext(p, n):
    k = p["k"]
    if k < 2:
        raise ValueError("onek-ext requires k >= 2")
    T = PartSet.of(1, k)
    lhs = ext_powers(part_family_series(T, n)).omega_each()
    sgn = -1 if k % 2 else 1
    rhs = product_series(_cancel_factors([(1, -1, -1), (k, sgn, -1), (2, 1, 1), (2 * k, 1, 1)]), n)
    return [_clause("w(E[F]) = (1-p_1)^{-1}(1-(-1)^{k-1}p_k)^{-1}(1+p_2)(1+p_{2k})", lhs, rhs)]


def _b_lek(p, n):
    k = p["k"]
    if k < 2:
        raise ValueError("lek requires k >= 2")
    T = PartSet.up_to(k)
    return _b_fT_sym({"T": T}, n) + _b_fT_decomp({"T": T}, n)


def _b_divk(p, n):
    k = p["k"]
    if k < 2:
        raise ValueError("divk requires k >= 2")
    T = PartSet.divisors_of(k)
    clauses = [
        _clause("f_d equals the eigenvalue-k induced character", part_family_series(T, n), foulkes_series(k, n)),
    ]
    clauses += _b_fT_decomp({"T": T}, n)
    clauses += _b_fT_sym({"T": T}, n)
    return clauses


def _b_regdecomp(p, n):
    comps1, comps2, ones = {}, {}, {}
    for d in range(1, n + 1):
        acc = SymFunc.zero()
        for e in divisors(d):
            acc = acc + pleth_p(d // e, lie(e)).scaled(e)
        comps1[d] = acc
        acc2 = SymFunc.zero()
        for r in range(1, d + 1):
            acc2 = acc2 + foulkes(d, r)
        comps2[d] = acc2
        ones[d] = p_of((1,) * d)
    target = Series(n, ones)
    return [
        _clause("sum_{e | d} e * Lie_e[p_{d/e}] = p_1^d", Series(n, comps1), target),
        _clause("sum over eigenvalues r of the induced characters = p_1^d", Series(n, comps2), target),
    ]


def _b_mod1k(p, n):
    k = p["k"]
    if k < 1:
        raise ValueError("mod1k requires k >= 1")
    T = PartSet.mod_one(k)
    return _b_fT_sym({"T": T}, n) + _b_fT_decomp({"T": T}, n)


def _b_oddlie(p, n):
    T = PartSet.mod_one(2)
    lhs = Series(n, {d: part_family_via_lie(d, T) for d in range(1, n + 1)})
    return [_clause("sum over odd m | d of Lie_{d/m}[p_m] = Lbar^(2)_d", lhs, lie_primes_bar_series(PrimeSet((2,)), n))]


def _b_conj_via_lieq(p, n):
    q = p["q"]
    if q < 2:
        raise ValueError("conj-via-lieq requires q >= 2")
    L = lie_series(n)
    B = Series.zero(n)
    qk = 1
    while qk <= n:
        B = B + pleth_p(qk, L)
        qk *= q
    acc = Series.zero(n)
    for m in range(1, n + 1):
        if m % q:
            acc = acc + pleth_p(m, B)
    clauses = [_clause("sum over m coprime-position of p_m[sum_k Lie[p_{q^k}]] = sum Conj", acc, conj_series(n))]
    if is_prime(q):
        acc2 = Series.zero(n)
        Lq = _lieq_series(q, n)
        for m in range(1, n + 1):
            if m % q:
                acc2 = acc2 + pleth_p(m, Lq)
        clauses.append(_clause("for prime q: sum_{q not | m} p_m[L^(q)] = sum Conj", acc2, conj_series(n)))
    return clauses


# -- plethystic-inverse catalog ------------------------------------------------


def _b_pq(p, n):
    q = p["q"]
    if q < 2:
        raise ValueError("pq requires q >= 2")
    A = _p1_minus_pq(q, n)
    comps = {}
    qk = 1
    while qk <= n:
        comps[qk] = p_of((qk,))
        qk *= q
    B = Series(n, comps)
    return [
        _clause("(p_1 - p_q)[sum p_{q^k}] = p_1", pleth(A, B), p1_series(n)),
        _clause("(sum p_{q^k})[p_1 - p_q] = p_1", pleth(B, A), p1_series(n)),
    ]


def _b_pq_alt(p, n):
    q = p["q"]
    if q < 2:
        raise ValueError("pq-alt requires q >= 2")
    A = _p1_plus_pq(q, n)
    comps = {}
    qk, sign = 1, 1
    while qk <= n:
        comps[qk] = p_of((qk,)).scaled(sign)
        qk *= q
        sign = -sign
    B = Series(n, comps)
    return [
        _clause("(p_1 + p_q)[sum (-1)^k p_{q^k}] = p_1", pleth(A, B), p1_series(n)),
        _clause("(sum (-1)^k p_{q^k})[p_1 + p_q] = p_1", pleth(B, A), p1_series(n)),
    ]


def _b_Hquot(p, n):
    q = p["q"]
    if q < 2:
        raise ValueError("Hquot requires q >= 2")
    H = h_series(n)
    lhs = sym_powers(_p1_minus_pq(q, n)) * pleth_p(q, H)
    return [_clause("H[p_1 - p_q] * H[p_q] = H  (quotient form cross-multiplied)", lhs, H)]


def _b_HE(p, n):
    return [_clause("H[p_1 - p_2] = E", sym_powers(_p1_minus_pq(2, n)), e_series(n))]


def _b_HFEG(p, n):
    fam = p["family"]
    if fam == "lie":
        F = lie_series(n)
    elif fam == "conj":
        F = conj_series(n)
    else:
        raise ValueError(f"HF-EG family must be 'lie' or 'conj', got {fam!r}")
    G = Series.zero(n)
    k = 1
    while k <= n:
        G = G + pleth_p(k, F)
        k *= 2
    return [
        _clause("H[F] = E[sum_k F[p_{2^k}]]", sym_powers(F), ext_powers(G)),
        _clause("F = G - G[p_2]", F, G - pleth_p(2, G)),
    ]


def _b_psibar(p, n):
    q, w, sign = p["q"], p["weight"], p["sign"]
    if q < 2:
        raise ValueError("psibar requires q >= 2")
    if sign not in (1, -1):
        raise ValueError("psibar sign must be +1 or -1")
    G = family_series(w, n)
    lhs = G + pleth_p(q, G).scaled(sign)

    def barred(d: int) -> int:
        return w(d) + sign * q * w(d // q) if d % q == 0 else w(d)

    wb = DivisorWeight(f"pbar[{w.tag},{q},{sign:+d}]", barred)
    return [_clause("(p_1 +/- p_q)[G] has the shifted divisor weight", lhs, family_series(wb, n))]


def _b_gmult(p, n, odd_only=False):
    gname = p["g"]
    if gname == "one":
        g = lambda m: 1
    elif gname == "id":
        g = lambda m: m
    else:
        raise ValueError(f"multiplicative g must be 'one' or 'id', got {gname!r}")
    rng = range(1, n + 1, 2) if odd_only else range(1, n + 1)
    A = Series(n, {m: p_of((m,)).scaled(g(m)) for m in rng})
    B = Series(n, {m: p_of((m,)).scaled(g(m) * moebius(m)) for m in rng if moebius(m)})
    return [
        _clause("(sum g(m) p_m)[sum g(m) mu(m) p_m] = p_1", pleth(A, B), p1_series(n)),
        _clause("(sum g(m) mu(m) p_m)[sum g(m) p_m] = p_1", pleth(B, A), p1_series(n)),
    ]


def _b_odd_gmult(p, n):
    return _b_gmult(p, n, odd_only=True)


def _b_lie_inv(p, n):
    B = _alt_e_series(n)
    L = lie_series(n)
    return [
        _clause("Lie^{<-1>} = sum (-1)^{r-1} e_r", pleth_inverse(L), B),
        _clause("Lie[sum (-1)^{r-1} e_r] = p_1", pleth(L, B), p1_series(n)),
    ]


def _b_lie2_inv(p, n):
    B = Series(n, {d: h_of(d) if d % 2 else -h_of(d) for d in range(1, n + 1)})
    Lq = _lieq_series(2, n)
    return [
        _clause("(L^(2))^{<-1>} = sum (-1)^{r-1} h_r", pleth_inverse(Lq), B),
        _clause("L^(2)[sum (-1)^{r-1} h_r] = p_1", pleth(Lq, B), p1_series(n)),
    ]


def _b_pp_frac(p, n):
    A = Series(n, {d: p_of((1,) * d).scaled(1 if d % 2 else -1) for d in range(1, n + 1)})
    B = Series(n, {d: p_of((1,) * d) for d in range(1, n + 1)})
    return [
        _clause("(p_1/(1+p_1))[p_1/(1-p_1)] = p_1", pleth(A, B), p1_series(n)),
        _clause("(p_1/(1-p_1))[p_1/(1+p_1)] = p_1", pleth(B, A), p1_series(n)),
    ]


def _b_cadogan_inverse(p, n):
    Hm1 = Series(n, {d: h_of(d) for d in range(1, n + 1)})
    return [_clause("(H-1)^{<-1>} = sum (-1)^{d-1} w(Lie_d)", pleth_inverse(Hm1), alt_omega(lie_series(n)))]


def _b_lie2_cadogan_inverse(p, n):
    Em1 = Series(n, {d: e_of(d) for d in range(1, n + 1)})
    return [_clause("(E-1)^{<-1>} = sum (-1)^{d-1} w(L^(2)_d)", pleth_inverse(Em1), alt_omega(_lieq_series(2, n)))]


def _b_mod1k_beta(p, n):
    k = p["k"]
    if k < 2:
        raise ValueError("mod1k-beta requires k >= 2")
    A = _mod1_h(k, n)
    B = pleth_inverse(A)
    filtered = Series(n, {d: f for d, f in B.components.items() if d % k == 1 % k})
    clauses = [
        _clause("(sum_{d=1 mod k} h_d)[candidate inverse] is inverted back to p_1", pleth(B, A), p1_series(n)),
        _clause("the inverse is supported in degrees = 1 mod k", B, filtered),
    ]
    if k % 2 == 0:
        Ae = _mod1_h(k, n, elementary=True)
        clauses.append(
            _clause("omega transport: (sum_{d=1 mod k} e_d)[w-transported inverse] = p_1", pleth(Ae, B.omega_each()), p1_series(n))
        )
    return clauses


def _details_mod1k_beta(p, n):
    k = p["k"]
    B = pleth_inverse(_mod1_h(k, n))
    out = []
    for d in sorted(B.components):
        idx = (d - 1) // k
        f = B.component(d) if idx % 2 == 0 else -B.component(d)
        pos, _ = is_schur_positive(f)
        out.append(f"homology candidate at degree {d}: schur-positive={pos} (informational)")
    return out


def _b_jordan_eta(p, n):
    # Stand-in derivative family: d/dp_1 of e_{2m} is e_{2m-1}; the genuine
    # even-block homology modules are out of scope, so the transport
    # mechanics are exercised on this exterior stand-in.
    D = Series(n, {d: e_of(d) if ((d + 1) // 2) % 2 else -e_of(d) for d in range(1, n + 1, 2)})
    eta = pleth_inverse(D)
    odd_only = Series(n, {d: f for d, f in eta.components.items() if d % 2})
    return [
        _clause("odd-degree alternating e-derivative series inverts back to p_1", pleth(eta, D), p1_series(n)),
        _clause("the inverse is supported in odd degrees", eta, odd_only),
        _clause("omega transport commutes with inversion on odd-supported series", pleth_inverse(D.omega_each()), eta.omega_each()),
    ]


# -- length-graded master identities -------------------------------------------


def _b_meta(which):
    def build(p, n):
        w = p["weight"]
        F = family_series(w, n)
        polys = {m: exponent_poly(m, w) for m in range(1, n + 1)}
        if which == "sym":
            lhs = _layer_dict(sym_power_layers(F))
            rhs = _v_product([(m, -1, _negpoly(polys[m])) for m in polys], n)
            label = "H(v)[F] = prod (1-p_m)^{-poly_m(v)}"
            return [_vclause(label, lhs, rhs)]
        if which == "ext":
            lhs = _layer_dict(ext_power_layers(F))
            rhs = _v_product([(m, -1, _flippoly(polys[m])) for m in polys], n)
            return [_vclause("E(v)[F] = prod (1-p_m)^{poly_m(-v)}", lhs, rhs)]
        if which == "altext":
            lhs = _layer_dict(sym_power_layers(alt_omega(F)))
            rhs = _v_product([(m, 1, polys[m]) for m in polys], n)
            return [_vclause("H(v)[alt-w(F)] = prod (1+p_m)^{poly_m(v)}", lhs, rhs)]
        if which == "altsym":
            lhs = _layer_dict(ext_power_layers(alt_omega(F)))
            rhs = _v_product([(m, 1, _negpoly(_flippoly(polys[m]))) for m in polys], n)
            return [_vclause("E(v)[alt-w(F)] = prod (1+p_m)^{-poly_m(-v)}", lhs, rhs)]
        if which == "equiv":
            lhs1 = _layer_dict(ext_power_layers(F), signed=True)
            rhs1 = _v_product([(m, -1, polys[m]) for m in polys], n)
            lhs2 = _layer_dict(sym_power_layers(F), signed=True)
            rhs2 = _v_product([(m, -1, _negpoly(_flippoly(polys[m]))) for m in polys], n)
            return [
                _vclause("Epm(v)[F] = prod (1-p_m)^{poly_m(v)}", lhs1, rhs1),
                _vclause("Hpm(v)[F] = prod (1-p_m)^{-poly_m(-v)}", lhs2, rhs2),
            ]
        raise AssertionError(which)

    return build


def _b_selfconj_powq(p, n):
    q = p["q"]
    if not is_prime(q) or q == 2:
        raise ValueError("selfconj-powq requires an odd prime q")
    T = PartSet.powers_of(q)
    prod = _geom(T.members_up_to(n), n)
    return [_clause("the power-sum sum over q-power parts is w-invariant", prod.omega_each(), prod)]


# -- custom runners -------------------------------------------------------------


def _c_conj_hooks(p, n):
    details, mismatch = [], None
    for d in range(2, n + 1):
        rep = hook_content_check(d)
        details.append(f"n={d}: {rep['status']}")
        if rep["status"] != "pass" and mismatch is None:
            mismatch = {"degree": d, "diffs": rep["failures"]}
    status = "pass" if mismatch is None else "fail"
    return status, mismatch, details


def _c_lifting(p, n):
    q, n_max = p["q"], p["n_max"]
    report = lifting_check(q, n_max)
    negs = report.negatives()
    details = [f"negatives: {negs}"]
    if q in LIFTING_EXCEPTIONS and n_max <= 32:
        expected = [m for m in LIFTING_EXCEPTIONS[q] if m <= n_max]
        if negs == expected:
            return "pass", None, details
        return (
            "fail",
            {"degree": (set(negs) ^ set(expected)) and min(set(negs) ^ set(expected)) or 0,
             "diffs": [{"partition": [], "lhs": str(negs), "rhs": str(expected)}]},
            details,
        )
    details.append("no recorded exception list for this q: informational run")
    return "pass", None, details


# -- registration ---------------------------------------------------------------

_S_SCHEMA = {"S": "comma-separated primes (empty for the empty set)"}
_T_SCHEMA = {"T": "part set: explicit list, le(k), div(k), mod1(k), pow(k), all, smooth(..), rough(..)"}
_Q_SCHEMA = {"q": "integer >= 2"}
_K_SCHEMA = {"k": "integer >= 2"}
_W_SCHEMA = {"weight": "divisor weight: mu, phi, primes:2,3, primesbar:2,3, parts:<set>, ramanujan:r"}

_register("thrall", "H[Lie](t) = (1 - t p_1)^{-1}  (Thrall)", _b_thrall)
_register("cadogan", "H[sum (-1)^{d-1} w(Lie_d)](t) = 1 + t p_1  (Cadogan)", _b_cadogan)
_register("solomon", "H[sum Conj_d](t) = prod (1 - t^m p_m)^{-1}  (Solomon)", _b_solomon)
_register("symLS", "H[L] = prod over smooth m of (1 - p_m)^{-1}", _b_symLS, _S_SCHEMA, {"S": PrimeSet((2,))})
_register("altsymLS", "H[alt-w(L)] = prod over smooth m of (1 + p_m)", _b_altsymLS, _S_SCHEMA, {"S": PrimeSet((2,))})
_register("extLS", "E[L]: smooth product with the 2-in-S / 2-not-in-S branches", _b_extLS, _S_SCHEMA, {"S": PrimeSet((2,))})
_register("extLS-omega", "w(E[L]) product form (needs 2 not in S)", _b_extLS_omega, _S_SCHEMA, {"S": PrimeSet((3,))})
_register("altextLS", "E[alt-w(L)]: signed product with both branches", _b_altextLS, _S_SCHEMA, {"S": PrimeSet((2,))})
_register("extLieConj1", "w(E[Lie]) = (1+p_2)(1-p_1)^{-1}", _b_extLieConj1)
_register("extLieConj2", "E[Conj] = prod over odd m of (1-p_m)^{-1}", _b_extLieConj2)
_register("extLieConj3", "sum (-1)^{|lam|-l} H_lam[Lie] = (1+p_1)(1-p_2)^{-1}", _b_extLieConj3, N=8)
_register("extLieConj4", "E[sum (-1)^{d-1} w(Conj_d)] = prod over odd m of (1+p_m)", _b_extLieConj4)
_register("dualityA", "(1-p_1)^{-1} = H[Lie] = E[L^(2)]", _b_dualityA)
_register("dualityB", "prod odd (1-p_m)^{-1} = H[Lbar^(2)] = E[Conj]", _b_dualityB)
_register("lie2-reg", "E[L^(2)](t) = (1 - t p_1)^{-1}", _b_lie2_reg)
_register("lie2-hpm", "Hpm[L^(2)](t) = 1 - t p_1", _b_lie2_hpm)
_register("lie2-cadogan", "E[sum (-1)^{d-1} w(L^(2)_d)](t) = 1 + t p_1", _b_lie2_cadogan)
_register("fT-sym", "H[F] = prod over the part set of (1-p_m)^{-1}", _b_fT_sym, _T_SCHEMA, {"T": PartSet.of(1, 3)}, N=12)
_register("fT-decomp", "F = (sum over the part set of p_m)[Lie]", _b_fT_decomp, _T_SCHEMA, {"T": PartSet.of(1, 3)}, N=12)
_register("fT-ext", "E[G] = prod over the part set of (1-p_m)^{-1} = H[F]", _b_fT_ext, _T_SCHEMA, {"T": PartSet.of(1, 3)}, N=12)
_register("conj-decomp", "sum_m p_m[Lie] = sum Conj_d", _b_conj_decomp)
_register("conj-psums", "Conj[sum (-1)^{r-1} e_r] = sum_m p_m", _b_conj_psums)
_register("conj-inverse", "Conj^{<-1>} = sum (-1)^{r-1} e_r[sum mu(m) p_m]", _b_conj_inverse)
_register("lieq-decomp", "L^(q)_d = sum_r Lie_{d/q^r}[p_{q^r}]", _b_lieq_decomp, _Q_SCHEMA, {"q": 3})
_register("lieq-transport", "Lie = (p_1 - p_q)[L^(q)] = L^(q) - L^(q)[p_q]", _b_lieq_transport, _Q_SCHEMA, {"q": 3})
_register("lieq-inverse", "(L^(q))^{<-1>} = (sum (-1)^{r-1} e_r)[p_1 - p_q]", _b_lieq_inverse, _Q_SCHEMA, {"q": 3})
_register("powk-recurrence", "powers-of-k family: f_d = Lie_d + f_{d/k}[p_k] when k | d", _b_powk_recurrence, _K_SCHEMA, {"k": 4})
_register("onek", "T={1,k}: f_d = Lie_d (+ Lie_{d/k}[p_k]); prime k gives the induced character", _b_onek, _K_SCHEMA, {"k": 3})
_register("onek-ext", "w(E[F^{1,k}]) = (1-p_1)^{-1}(1-(-1)^{k-1}p_k)^{-1}(1+p_2)(1+p_{2k})", _b_onek_ext, _K_SCHEMA, {"k": 3})
_register("lek", "T={m <= k}: product and Lie-decomposition forms", _b_lek, _K_SCHEMA, {"k": 3})
_register("divk", "T={m | k}: the family is the eigenvalue-k induced character", _b_divk, _K_SCHEMA, {"k": 6})
_register("regdecomp", "p_1^d = sum_{e|d} e Lie_e[p_{d/e}] = sum_r (eigenvalue-r characters)", _b_regdecomp)
_register("mod1k", "T={m = 1 mod k}: product and Lie-decomposition forms", _b_mod1k, _K_SCHEMA, {"k": 3})
_register("oddlie", "sum over odd m | d of Lie_{d/m}[p_m] = Lbar^(2)_d", _b_oddlie)
_register("conj-via-lieq", "sum Conj = sum over positions m not divisible by q of p_m[L^(q)]", _b_conj_via_lieq, _Q_SCHEMA, {"q": 3})
_register("pq", "p_1 - p_q and sum p_{q^k} are plethystic inverses", _b_pq, _Q_SCHEMA, {"q": 2})
_register("pq-alt", "p_1 + p_q and sum (-1)^k p_{q^k} are plethystic inverses", _b_pq_alt, _Q_SCHEMA, {"q": 3})
_register("Hquot", "H[p_1 - p_q] = H / H[p_q]", _b_Hquot, _Q_SCHEMA, {"q": 3})
_register("HE", "H[p_1 - p_2] = E", _b_HE)
_register(
    "HF-EG",
    "H[F] = E[G] with G = sum_k F[p_{2^k}], and F = G - G[p_2]",
    _b_HFEG,
    {"family": "'lie' or 'conj'"},
    {"family": "lie"},
)
_register(
    "psibar",
    "(p_1 +/- p_q)[G] shifts the divisor weight by w(d) +/- q w(d/q) at multiples of q",
    _b_psibar,
    {"q": "integer >= 2", "weight": _W_SCHEMA["weight"], "sign": "+1 or -1"},
    {"q": 2, "weight": MOEBIUS, "sign": -1},
)
_register(
    "gmult",
    "sum g(m) p_m and sum g(m) mu(m) p_m are plethystic inverses (multiplicative g)",
    _b_gmult,
    {"g": "'one' or 'id'"},
    {"g": "one"},
)
_register(
    "odd-gmult",
    "odd-indexed restriction of the multiplicative inverse pair",
    _b_odd_gmult,
    {"g": "'one' or 'id'"},
    {"g": "one"},
)
_register("lie-inv", "Lie and (H-1)/H = sum (-1)^{r-1} e_r are plethystic inverses", _b_lie_inv)
_register("lie2-inv", "L^(2) and (E-1)/E = sum (-1)^{r-1} h_r are plethystic inverses", _b_lie2_inv)
_register("pp-frac", "p_1/(1+p_1) and p_1/(1-p_1) are plethystic inverses", _b_pp_frac)
_register("cadogan-inverse", "(H-1)^{<-1>} = sum (-1)^{d-1} w(Lie_d)", _b_cadogan_inverse)
_register("lie2-cadogan-inverse", "(E-1)^{<-1>} = sum (-1)^{d-1} w(L^(2)_d)", _b_lie2_cadogan_inverse)
_register(
    "mod1k-beta",
    "inversion of sum_{d=1 mod k} h_d: support, composition, and even-k omega transport",
    _b_mod1k_beta,
    _K_SCHEMA,
    {"k": 2},
)
_register(
    "jordan-eta",
    "inversion of an odd-degree alternating derivative series: odd support and omega transport",
    _b_jordan_eta,
)
_register("meta-sym", "H(v)[F] = prod (1-p_m)^{-poly_m(v)} (length-graded)", _b_meta("sym"), _W_SCHEMA, {"weight": MOEBIUS}, N=8)
_register("meta-ext", "E(v)[F] = prod (1-p_m)^{poly_m(-v)} (length-graded)", _b_meta("ext"), _W_SCHEMA, {"weight": MOEBIUS}, N=8)
_register("meta-altext", "H(v)[alt-w(F)] = prod (1+p_m)^{poly_m(v)} (length-graded)", _b_meta("altext"), _W_SCHEMA, {"weight": MOEBIUS}, N=8)
_register("meta-altsym", "E(v)[alt-w(F)] = prod (1+p_m)^{-poly_m(-v)} (length-graded)", _b_meta("altsym"), _W_SCHEMA, {"weight": MOEBIUS}, N=8)
_register("meta-equiv", "Epm(v)[F] and Hpm(v)[F] product forms (length-graded)", _b_meta("equiv"), _W_SCHEMA, {"weight": MOEBIUS}, N=8)
_register("selfconj-powq", "sum of p_lam over q-power parts is w-invariant (odd prime q)", _b_selfconj_powq, _Q_SCHEMA, {"q": 3})
_register("conj-hooks", "hook multiplicities of Conj_n follow the three-exception pattern", None, {}, {}, 10, custom=_c_conj_hooks)
_register(
    "lifting",
    "p_1 L^(q)_{n-1} - L^(q)_n schur-negative exactly on the recorded exception lists (q=3,5)",
    None,
    {"q": "odd prime", "n_max": "scan ceiling"},
    {"q": 3, "n_max": 18},
    18,
    custom=_c_lifting,
)

_DETAILS = {"mod1k-beta": _details_mod1k_beta}


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------


def identity_info(id: str) -> IdentityEntry:
    try:
        return _REGISTRY[id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity id {id!r}") from None


def list_identities() -> list[dict]:
    """Stable, sorted catalog dump: id, statement, parameter schema, defaults."""
    out = []
    for id in sorted(_REGISTRY):
        e = _REGISTRY[id]
        out.append(
            {
                "id": e.id,
                "statement": e.statement,
                "params": dict(e.param_schema),
                "defaults": {k: _param_text(v) for k, v in e.defaults.items()},
                "default_N": e.default_N,
            }
        )
    return out


def _param_text(v) -> str:
    if isinstance(v, PrimeSet):
        return repr(v)
    if isinstance(v, PartSet):
        return v.descriptor()
    if isinstance(v, DivisorWeight):
        return v.tag
    return str(v)


def build_clauses(id: str, params: dict | None = None, N: int | None = None):
    """Resolve an identity to its list of (label, kind, lhs, rhs) clauses."""
    entry = identity_info(id)
    if entry.builder is None:
        raise ValueError(f"identity {id!r} uses a custom runner and has no series clauses")
    p = dict(entry.defaults)
    p.update(params or {})
    n = entry.default_N if N is None else int(N)
    if n < 1:
        raise ValueError("N must be >= 1")
    return entry.builder(p, n)


def verify(id: str, params: dict | None = None, N: int | None = None) -> VerifyReport:
    """Check one catalog identity exactly; failure pinpoints the first bad slice."""
    entry = identity_info(id)
    p = dict(entry.defaults)
    p.update(params or {})
    n = entry.default_N if N is None else int(N)
    if n < 1:
        raise ValueError("N must be >= 1")
    printable = {k: _param_text(v) for k, v in p.items()}
    t0 = time.perf_counter()
    if entry.custom is not None:
        status, mismatch, details = entry.custom(p, n)
        return VerifyReport(id, printable, n, status, mismatch, [], (time.perf_counter() - t0) * 1000, details)
    status, mismatch = "pass", None
    for label, kind, lhs, rhs in entry.builder(p, n):
        m = _series_mismatch(lhs, rhs) if kind == "series" else _vgraded_mismatch(lhs, rhs, n)
        if m is not None:
            m["clause"] = label
            status, mismatch = "fail", m
            break
    details = _DETAILS[id](p, n) if id in _DETAILS and status == "pass" else []
    return VerifyReport(id, printable, n, status, mismatch, [], (time.perf_counter() - t0) * 1000, details)


# ---------------------------------------------------------------------------
# Positivity scans
# ---------------------------------------------------------------------------


def _slice_sum(n: int, part_pred, coeff=None) -> SymFunc:
    terms = {}
    for lam in partitions_of(n):
        if all(part_pred(a) for a in lam.parts):
            c = Fraction(1) if coeff is None else coeff(lam)
            if c:
                terms[lam] = c
    return SymFunc(n, terms)


def _scan_symfunc(family: str, n: int, p: dict) -> SymFunc:
    if family == "powk":
        return part_family(n, PartSet.powers_of(p["k"]))
    if family == "product-powk":
        T = PartSet.powers_of(p["k"])
        return _slice_sum(n, lambda a: a in T)
    if family == "onek":
        return part_family(n, PartSet.of(1, p["k"]))
    if family == "lek":
        return part_family(n, PartSet.up_to(p["k"]))
    if family == "divk":
        return part_family(n, PartSet.divisors_of(p["k"]))
    if family == "mod1k-product":
        T = PartSet.mod_one(p["k"])
        return _slice_sum(n, lambda a: a in T)
    if family == "fT":
        return part_family(n, p["T"])
    if family == "fT-product":
        T = p["T"]
        return _slice_sum(n, lambda a: a in T)
    if family == "symLS-sum":
        S = p["S"]
        return _slice_sum(n, S.is_smooth)
    if family == "symLSbar-sum":
        S = p["S"]
        return _slice_sum(n, S.is_rough)
    if family == "symLS-even-sum":
        S = p["S"]
        terms = {}
        for lam in partitions_of(n):
            if all(S.is_smooth(a) for a in lam.parts) and sum(1 for a in lam.parts if a % 2 == 0) % 2 == 0:
                terms[lam] = Fraction(1)
        return SymFunc(n, terms)
    if family == "altsymLS-sum":
        S = p["S"]
        terms = {}
        for lam in partitions_of(n):
            if all(S.is_smooth(a) for a in lam.parts) and len(set(lam.parts)) == lam.length:
                terms[lam] = Fraction(1)
        return SymFunc(n, terms)
    if family == "extLS-sum":
        S = p["S"]
        if 2 in S:
            raise ValueError("extLS-sum requires 2 not in S")
        terms = {}
        for lam in partitions_of(n):
            evens = [a for a in lam.parts if a % 2 == 0]
            if len(set(evens)) != len(evens):
                continue
            if all((a % 2 and S.is_smooth(a)) or (a % 2 == 0 and (a // 2) % 2 and S.is_smooth(a // 2)) for a in lam.parts):
                terms[lam] = Fraction(1)
        return SymFunc(n, terms)
    raise ValueError(f"unknown scan family {family!r}")


_SCAN_SCHEMAS = {
    "powk": {"k": "integer >= 2"},
    "product-powk": {"k": "integer >= 2"},
    "onek": {"k": "integer >= 2"},
    "lek": {"k": "integer >= 2"},
    "divk": {"k": "integer >= 2"},
    "mod1k-product": {"k": "integer >= 1"},
    "fT": {"T": "part-set descriptor"},
    "fT-product": {"T": "part-set descriptor"},
    "symLS-sum": {"S": "prime set"},
    "symLSbar-sum": {"S": "prime set"},
    "symLS-even-sum": {"S": "prime set"},
    "altsymLS-sum": {"S": "prime set"},
    "extLS-sum": {"S": "prime set without 2"},
}


def scan_families() -> dict[str, dict]:
    return {k: dict(v) for k, v in sorted(_SCAN_SCHEMAS.items())}


def scan_positivity(family: str, ns, params: dict | None = None, budget: int = DEFAULT_SCAN_BUDGET, jobs: int = 1) -> PositivityReport:
    """Schur-positivity verdicts for one family over the given degrees.

    Degrees beyond ``budget`` are refused explicitly (raise, never silently
    truncate).  Results are deterministic and independent of ``jobs``.
    """
    if family not in _SCAN_SCHEMAS:
        raise ValueError(f"unknown scan family {family!r}")
    p = dict(params or {})
    ns = sorted(set(int(x) for x in ns))
    if not ns or ns[0] < 1:
        raise ValueError("scan degrees must be positive")
    if ns[-1] > budget:
        raise BudgetError(f"degree {ns[-1]} exceeds the scan budget {budget}; raise the budget explicitly")

    def one(n: int) -> ScanVerdict:
        t0 = time.perf_counter()
        f = _scan_symfunc(family, n, p)
        pos, neg = is_schur_positive(f)
        return ScanVerdict(n, pos, neg, (time.perf_counter() - t0) * 1000)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(one, ns))
    else:
        verdicts = [one(n) for n in ns]
    verdicts.sort(key=lambda v: v.n)
    printable = {k: _param_text(v) for k, v in p.items()}
    return PositivityReport(family, printable, verdicts)


def lifting_check(q: int, n_max: int, budget: int = DEFAULT_LIFT_BUDGET, jobs: int = 1) -> PositivityReport:
    """Per-n Schur positivity of p_1 * L^(q)_{n-1} - L^(q)_n for n in 2..n_max."""
    if not is_prime(q):
        raise ValueError("lifting_check requires a prime q")
    if n_max > budget:
        raise BudgetError(f"n_max {n_max} exceeds the lifting budget {budget}; raise the budget explicitly")
    from .families import lie_primes

    def one(n: int) -> ScanVerdict:
        t0 = time.perf_counter()
        f = p_of((1,)) * lie_primes(n - 1, (q,)) - lie_primes(n, (q,))
        pos, neg = is_schur_positive(f)
        return ScanVerdict(n, pos, neg, (time.perf_counter() - t0) * 1000)

    ns = list(range(2, n_max + 1))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(one, ns))
    else:
        verdicts = [one(n) for n in ns]
    verdicts.sort(key=lambda v: v.n)
    return PositivityReport("lifting", {"q": str(q), "n_max": str(n_max)}, verdicts)


def hook_content_check(n: int) -> dict:
    """Check the hook multiplicities of the conjugacy character at degree n.

    Hooks (n-r, 1^r) must appear with coefficient >= 1 except the recorded
    exceptions, which must vanish: (n-1, 1) for all n >= 2, (2, 1^{n-2}) for
    odd n >= 3, and (1^n) for even n.
    """
    if n < 2:
        raise ValueError("hook_content_check requires n >= 2")
    exp = to_schur(conj(n))
    exceptions = {Partition.of((n - 1, 1))}
    if n % 2 and n >= 3:
        exceptions.add(Partition.of((2,) + (1,) * (n - 2)))
    if n % 2 == 0:
        exceptions.add(Partition.of((1,) * n))
    failures = []
    for r in range(n):
        shape = Partition.of((n - r,) + (1,) * r)
        c = exp.coefficient(shape)
        if shape in exceptions:
            if c != 0:
                failures.append({"partition": list(shape.parts), "lhs": _fmt_frac(c), "rhs": "0"})
        elif c < 1:
            failures.append({"partition": list(shape.parts), "lhs": _fmt_frac(c), "rhs": ">=1"})
    return {
        "n": n,
        "status": "pass" if not failures else "fail",
        "exceptions": sorted([list(s.parts) for s in exceptions]),
        "failures": failures,
    }
