"""Desk-scale positivity evidence for the conjectured families and
explicit decompositions quoted in the docs."""

from __future__ import annotations

import pytest

from symlie import (
    PartSet,
    PrimeSet,
    divisors,
    foulkes_series,
    foulkes,
    lie,
    p_of,
    pleth_p,
    scan_positivity,
)
from symlie.symfunc import ZERO

from helpers import P


class TestConjectureRanges:
    def test_powers_of_odd_k_positive(self):
        for k in (3, 5):
            assert scan_positivity("powk", range(1, 16), {"k": k}).all_positive
            assert scan_positivity("product-powk", range(1, 16), {"k": k}).all_positive

    def test_powers_of_two_positive(self):
        # k = 2 is the prime case, positive by the single-prime theorem
        assert scan_positivity("powk", range(1, 17), {"k": 2}).all_positive
        assert scan_positivity("product-powk", range(1, 17), {"k": 2}).all_positive

    def test_one_k_family(self):
        # conjectured positive for k = 2 and odd k >= 3; fails for even k >= 4
        for k in (2, 3, 5):
            assert scan_positivity("onek", range(1, 13), {"k": k}).all_positive
        report = scan_positivity("onek", range(1, 13), {"k": 4})
        assert report.negatives() == [4]
        report = scan_positivity("onek", range(1, 13), {"k": 6})
        assert report.negatives() == [6]

    def test_up_to_k_family(self):
        for k in (2, 3, 4):
            assert scan_positivity("lek", range(1, 13), {"k": k}).all_positive

    def test_mod1k_products(self):
        # richest checked case of the modular product conjecture at desk scale
        for k in (2, 3, 4, 5, 6):
            assert scan_positivity("mod1k-product", range(1, 13), {"k": k}).all_positive

    def test_single_prime_theorem_families(self):
        for q in (2, 3, 5):
            assert scan_positivity("symLS-sum", range(1, 13), {"S": PrimeSet((q,))}).all_positive
            assert scan_positivity("symLSbar-sum", range(1, 13), {"S": PrimeSet((q,))}).all_positive
        for q in (3, 5):
            assert scan_positivity("symLSbar-sum", range(1, 13), {"S": PrimeSet((2, q))}).all_positive

    def test_generic_part_set_scans(self):
        assert scan_positivity("fT", range(1, 10), {"T": PartSet.divisors_of(8)}).all_positive
        report = scan_positivity("fT", [4], {"T": PartSet.powers_of(4)})
        assert report.negatives() == [4]
        assert scan_positivity("fT-product", range(1, 13), {"T": PartSet.of(1, 4)}).all_positive

    def test_even_even_sums(self):
        for primes in ((2,), (2, 3)):
            assert scan_positivity("symLS-even-sum", range(1, 11), {"S": PrimeSet(primes)}).all_positive


class TestExplicitDecompositions:
    def test_regular_representation_at_six(self):
        acc = ZERO
        for d in divisors(6):
            acc = acc + pleth_p(6 // d, lie(d)).scaled(d)
        assert acc == p_of((1,) * 6)

    def test_eigenvalue_sum_at_six(self):
        acc = ZERO
        for r in range(1, 7):
            acc = acc + foulkes(6, r)
        assert acc == p_of((1,) * 6)

    def test_foulkes_series_exponent_reduction(self):
        s = foulkes_series(2, 5)
        assert s.component(1) == p_of((1,))
        assert s.component(3) == foulkes(3, 2)
        assert s.component(5) == foulkes(5, 2)
        with pytest.raises(ValueError):
            foulkes_series(0, 5)
