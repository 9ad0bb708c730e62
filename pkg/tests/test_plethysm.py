"""Series arithmetic, plethysm, power-series operators, inversion."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from symlie import (
    Series,
    alt_omega,
    conj_series,
    e_of,
    ext_power_layers,
    ext_powers,
    ext_powers_signed,
    h_of,
    higher_module,
    lie,
    lie_series,
    p1_series,
    p_of,
    partitions_of,
    pleth,
    pleth_homog,
    pleth_inverse,
    pleth_p,
    product_series,
    sym_power_layers,
    sym_powers,
    sym_powers_signed,
)

from symlie import SymFunc
from symlie.symfunc import ZERO

from helpers import P, frac, random_series, random_symfunc, random_unit_series

H2_STRETCHED = SymFunc(4, {P(2, 2): frac(1, 2), P(4): frac(1, 2)})
LIE2_STRETCHED = SymFunc(4, {P(2, 2): frac(1, 2), P(4): frac(-1, 2)})


class TestSeries:
    def test_component_window(self):
        s = Series(5, {2: h_of(2)})
        assert s.component(2) == h_of(2)
        assert s.component(3).is_zero
        with pytest.raises(ValueError):
            s.component(6)

    def test_component_degree_validation(self):
        with pytest.raises(ValueError):
            Series(5, {3: h_of(2)})
        with pytest.raises(ValueError):
            Series(2, {3: h_of(3)})

    def test_arithmetic(self):
        a = Series(4, {1: p_of((1,))}, constant=1)
        b = Series(4, {1: p_of((1,))})
        assert (a - b) == Series.one(4)
        assert (a * b).component(2) == p_of((1, 1))

    def test_mul_truncates(self):
        a = Series(3, {2: p_of((2,))})
        assert (a * a).component(3).is_zero
        assert all(d <= 3 for d in (a * a).components)

    def test_alt_omega(self):
        s = alt_omega(lie_series(4))
        assert s.component(2) == -h_of(2)
        assert s.component(1) == p_of((1,))
        with pytest.raises(ValueError):
            alt_omega(Series.one(4))


class TestPlethP:
    def test_substitution(self):
        f = p_of((3,)) + p_of((2, 1))
        assert pleth_p(2, f) == p_of((6,)) + p_of((4, 2))

    def test_identity(self):
        rng = random.Random(3)
        f = random_symfunc(rng, 5)
        assert pleth_p(1, f) == f

    def test_on_h2(self):
        assert pleth_p(2, h_of(2)) == H2_STRETCHED

    def test_series_truncation_contract(self):
        s = pleth_p(2, lie_series(5))
        assert set(s.components) <= {2, 4}
        assert s.component(4) == pleth_p(2, lie(2))


class TestPleth:
    def test_p1_is_identity(self):
        f = h_of(2)
        out = pleth(f, p1_series(6))
        assert out.component(2) == f
        assert all(d == 2 for d in out.components)

    def test_p2_of_lie_degree_4(self):
        out = pleth(p_of((2,)), lie_series(4))
        assert out.component(4) == LIE2_STRETCHED

    def test_e2_of_p2(self):
        out = pleth(e_of(2), p_of((2,)))
        assert out.component(4) == pleth_homog(e_of(2), p_of((2,)))
        assert out.component(4) == LIE2_STRETCHED

    def test_inner_constant_rejected(self):
        with pytest.raises(ValueError):
            pleth(h_of(2), Series.one(4))

    def test_associativity_samples(self):
        rng = random.Random(17)
        for f in (h_of(2), e_of(2), p_of((3,))):
            for _ in range(3):
                g = random_series(rng, 8)
                k = random_unit_series(rng, 8)
                lhs = pleth(pleth(f, g), k)
                rhs = pleth(f, pleth(g, k))
                assert lhs == rhs

    def test_omega_transport_odd_inner(self):
        # w(f[g]) = w(f)[w(g)] when g is homogeneous of odd degree
        rng = random.Random(23)
        for gdeg in (1, 3, 5):
            g = random_symfunc(rng, gdeg)
            for fdeg in (2, 3):
                f = random_symfunc(rng, fdeg)
                assert pleth_homog(f, g).omega() == pleth_homog(f.omega(), g.omega())


class TestPowerOperators:
    def test_layers_match_higher_modules(self):
        for Q in (lie_series(8), conj_series(8)):
            layers = sym_power_layers(Q)
            elayers = ext_power_layers(Q)
            for r in range(5):
                for n in range(1, 9):
                    want_h = ZERO
                    want_e = ZERO
                    for lam in partitions_of(n):
                        if lam.length == r:
                            want_h = want_h + higher_module(Q, lam)
                            want_e = want_e + higher_module(Q, lam, exterior=True)
                    assert layers[r].component(n) == want_h
                    assert elayers[r].component(n) == want_e

    def test_sum_of_layers_matches_exponential_form(self):
        rng = random.Random(29)
        F = random_series(rng, 8)
        layers = sym_power_layers(F)
        total = Series.zero(8)
        for s in layers:
            total = total + s
        assert total == sym_powers(F)
        elayers = ext_power_layers(F)
        etotal = Series.zero(8)
        for s in elayers:
            etotal = etotal + s
        assert etotal == ext_powers(F)

    def test_reciprocity(self):
        rng = random.Random(31)
        for _ in range(3):
            F = random_series(rng, 10)
            assert sym_powers(F) * ext_powers_signed(F) == Series.one(10)
            assert ext_powers(F) * sym_powers_signed(F) == Series.one(10)

    def test_higher_module_examples(self):
        L = lie_series(4)
        assert higher_module(L, P(1, 1)) == h_of(2)
        assert higher_module(L, P(2)) == e_of(2)
        acc = ZERO
        for lam in partitions_of(3):
            acc = acc + higher_module(L, lam)
        assert acc == p_of((1, 1, 1))

    def test_higher_module_truncation_guard(self):
        with pytest.raises(ValueError):
            higher_module(lie_series(3), P(4))


class TestProductSeries:
    def test_geometric(self):
        s = product_series([(1, -1, -1)], 6)
        for n in range(1, 7):
            assert s.component(n) == p_of((1,) * n)

    def test_odd_parts_degree_4(self):
        s = product_series([(m, -1, -1) for m in (1, 3)], 4)
        assert s.component(4) == p_of((3, 1)) + p_of((1, 1, 1, 1))

    def test_distinct_odd_parts_degree_4(self):
        s = product_series([(m, 1, 1) for m in (1, 3)], 4)
        assert s.component(4) == p_of((3, 1))

    def test_signs(self):
        # (1 + p_1)^{-1} = sum (-1)^j p_1^j
        s = product_series([(1, 1, -1)], 4)
        assert s.component(3) == -p_of((1, 1, 1))
        # (1 - p_2) alone
        s2 = product_series([(2, -1, 1)], 4)
        assert s2.component(2) == -p_of((2,))
        assert s2.component(4).is_zero

    def test_duplicate_factors_rejected(self):
        with pytest.raises(ValueError):
            product_series([(2, -1, -1), (2, 1, 1)], 4)


class TestPlethInverse:
    def test_p1_minus_p2(self):
        F = Series(8, {1: p_of((1,)), 2: -p_of((2,))})
        inv = pleth_inverse(F)
        assert inv == Series(8, {1: p_of((1,)), 2: p_of((2,)), 4: p_of((4,)), 8: p_of((8,))})

    def test_p1_plus_p3(self):
        F = Series(9, {1: p_of((1,)), 3: p_of((3,))})
        inv = pleth_inverse(F)
        assert inv == Series(9, {1: p_of((1,)), 3: -p_of((3,)), 9: p_of((9,))})

    def test_inverse_of_h_minus_one(self):
        n = 8
        Hm1 = Series(n, {d: h_of(d) for d in range(1, n + 1)})
        assert pleth_inverse(Hm1) == alt_omega(lie_series(n))

    def test_two_sided(self):
        rng = random.Random(41)
        for _ in range(3):
            F = random_unit_series(rng, 7)
            G = pleth_inverse(F)
            assert pleth(F, G) == p1_series(7)
            assert pleth(G, F) == p1_series(7)

    def test_involution(self):
        rng = random.Random(43)
        for F in (lie_series(8), random_unit_series(rng, 7)):
            assert pleth_inverse(pleth_inverse(F)) == F

    def test_requires_unit_degree_one(self):
        with pytest.raises(ValueError):
            pleth_inverse(Series(4, {2: p_of((2,))}))
        with pytest.raises(ValueError):
            pleth_inverse(Series(4, {1: 2 * p_of((1,))}))
