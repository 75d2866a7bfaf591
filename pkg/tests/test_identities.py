import logging
from fractions import Fraction
from itertools import product

import pytest

from src.exact_math import DomainError
from src.identities import (
    CheckResult,
    QUOTIENT_KINDS,
    g_minus_value,
    h_val,
    is_mersenne,
    reduction_sum,
    summed_closed_form,
    telescope_summand,
    verify_a_doubled_parity,
    verify_a_odd_total_parity,
    verify_alternating_telescope,
    verify_b_composition_parity,
    verify_c_parity,
    verify_diagonal_a_parity,
    verify_k_expansion,
    verify_n_plus_two_quotient,
    verify_pfaff_saalschutz,
    verify_positive_telescope,
    verify_quotients,
    verify_reduction_family,
    verify_reduction_path,
    verify_summed,
    verify_telescope,
    verify_w_pair,
    verify_w_partial_sum_parity,
    w_val,
    w_val_quotient_form,
)
from src.sequences import FamilyId
from src.TheoremChecker import SumSpec, weighted_power_sum


class TestCheckResult:
    def test_failure_needs_witness(self):
        with pytest.raises(ValueError):
            CheckResult("2.3", {"l": 0}, False)

    def test_from_dict(self):
        result = CheckResult.from_dict({"check": "pfaff", "params": {"x": 1}, "passed": True})
        assert result.passed and result.witness is None


class TestTelescoping:
    @pytest.mark.parametrize("sign, l, u, k_max", [(-1, 0, 0, 10), (-1, 2, 1, 30), (1, 3, 2, 30)])
    def test_examples(self, sign, l, u, k_max):
        assert verify_telescope(sign, l, u, k_max).passed

    def test_summed_examples(self):
        assert summed_closed_form(-1, 0, 3) == -4
        assert summed_closed_form(1, 0, 3) == 16
        assert verify_summed(1, 1, 1, 25).passed

    def test_sum_of_summands_is_closed_form(self):
        for sign in (1, -1):
            for big_l in range(6):
                partial = 0
                for n in range(20):
                    partial += telescope_summand(sign, big_l, n)
                    assert summed_closed_form(sign, big_l, n) == partial

    def test_lemma_wrappers(self):
        for l, u in product(range(4), repeat=2):
            assert verify_alternating_telescope(l, u, 20).check == "2.3"
            assert verify_alternating_telescope(l, u, 20).passed
            assert verify_positive_telescope(l, u, 20).passed

    def test_bad_sign(self):
        with pytest.raises(DomainError):
            verify_telescope(2, 0, 0, 5)


class TestSmallLemmas:
    @pytest.mark.parametrize("n, l", [(1, 1), (2, 1), (2, 3)])
    def test_n_plus_two_examples(self, n, l):
        assert verify_n_plus_two_quotient(n, l).passed

    def test_n_plus_two_sweep(self):
        for n, l in product(range(1, 21), repeat=2):
            assert verify_n_plus_two_quotient(n, l).passed

    def test_n_plus_two_domain(self):
        with pytest.raises(DomainError):
            verify_n_plus_two_quotient(0, 1)

    def test_pfaff_examples(self):
        assert verify_pfaff_saalschutz(0, 0, 0, 0).passed
        assert verify_pfaff_saalschutz(3, 2, 1, 2).passed

    def test_pfaff_sweep(self):
        for x, y, a, b in product(range(5), range(5), range(4), range(4)):
            assert verify_pfaff_saalschutz(x, y, a, b).passed

    def test_c_parity(self):
        for l in range(1, 13):
            for a in range(1, 5):
                assert verify_c_parity(l, a).passed

    def test_k_expansion(self):
        for l in range(5):
            for a in range(4):
                assert verify_k_expansion(l, a, 20).passed


class TestWAndH:
    def test_values(self):
        for n in range(1, 10):
            assert w_val(n, 1) == 1
            assert h_val(n, 0) == 2
        assert w_val(2, 2) == 2
        assert [w_val(3, l) for l in (1, 2, 3)] == [1, 5, 5]

    def test_two_forms_agree(self):
        for n in range(1, 15):
            for l in range(1, 15):
                assert w_val_quotient_form(n, l) == w_val(n, l)

    def test_partial_sums(self):
        assert verify_w_partial_sum_parity(3, 1).passed
        for n in range(1, 21):
            for b in range(0, 8):
                assert verify_w_partial_sum_parity(n, b).passed

    def test_pairs(self):
        for n in range(1, 21):
            for b in range(1, 7):
                assert verify_w_pair(n, b).passed

    def test_domain(self):
        with pytest.raises(DomainError):
            w_val(0, 1)
        with pytest.raises(DomainError):
            h_val(1, -1)


class TestParityLemmas:
    def test_mersenne(self):
        assert [j for j in range(0, 20) if is_mersenne(j)] == [1, 3, 7, 15]

    @pytest.mark.parametrize("J", [1, 2, 3, 4, 7, 8])
    def test_diagonal_a_parity(self, J):
        assert verify_diagonal_a_parity(J).passed

    def test_diagonal_zero_is_recorded_not_asserted(self, caplog):
        with caplog.at_level(logging.WARNING):
            result = verify_diagonal_a_parity(0)
        assert result.passed
        assert "not asserted" in result.detail
        assert any(record.levelno == logging.WARNING for record in caplog.records)

    @pytest.mark.parametrize("M, n, I, l", [(1, 2, 3, 2), (1, 2, 2, 1)])
    def test_b_composition_examples(self, M, n, I, l):
        assert verify_b_composition_parity(M, n, I, l).passed

    def test_b_composition_sweep(self):
        for I in range(0, 9):
            for l in range(1, 9):
                assert verify_b_composition_parity(2, 2, I, l).passed

    def test_b_composition_l_zero(self):
        result = verify_b_composition_parity(1, 2, 0, 0)
        assert result.passed
        assert "not asserted" in result.detail

    def test_b_composition_domain(self):
        with pytest.raises(DomainError):
            verify_b_composition_parity(1, 2, 5, 1)

    def test_a_odd_total(self):
        for l in range(0, 4):
            assert verify_a_odd_total_parity(1, 3, 3, l, 1).passed
        for I in (1, 3, 5):
            for l in range(0, 8):
                assert verify_a_odd_total_parity(1, 3, I, l, 2).passed

    def test_a_odd_total_rejects_even(self):
        with pytest.raises(DomainError):
            verify_a_odd_total_parity(1, 3, 2, 1, 1)

    def test_a_doubled(self):
        assert verify_a_doubled_parity(1, 2, 2, 2, 1).passed
        for I in (0, 2, 4):
            for e in (0, 2, 4, 6):
                assert verify_a_doubled_parity(1, 3, I, e, 2).passed

    def test_a_doubled_rejects_odd(self):
        with pytest.raises(DomainError):
            verify_a_doubled_parity(1, 2, 2, 1, 1)


class TestQuotients:
    def test_gminus_example(self):
        result = verify_quotients("Gminus", 1, 1, 0, 2)
        assert result.passed
        assert g_minus_value(1, 1, 0, 2) / 6 == 4

    def test_pairing_is_half_of_h(self):
        for n in range(1, 11):
            for l in range(1, 11):
                paired = (g_minus_value(l, 1, 0, n) + g_minus_value(l, 1, 1, n)) / (n * (n + 1) * (n + 2))
                assert paired == Fraction(h_val(n, l), 2)

    def test_sweep(self):
        for kind in QUOTIENT_KINDS:
            for l, a, n in product(range(1, 5), range(1, 4), range(1, 8)):
                for u in range(a + 1):
                    assert verify_quotients(kind, l, a, u, n).passed, (kind, l, a, u, n)

    def test_domain(self):
        with pytest.raises(DomainError):
            verify_quotients("H", 1, 1, 0, 1)
        with pytest.raises(DomainError):
            verify_quotients("F", 1, 1, 2, 1)


class TestReduction:
    @pytest.mark.parametrize("kind", ["A", "B"])
    def test_families(self, kind):
        assert verify_reduction_family(kind, 2, 3, 1, 12).passed
        assert verify_reduction_family(kind, 2, 2, 3, 10).passed
        assert verify_reduction_family(kind, 3, 2, 2, 8).passed

    def test_reduction_sum_matches_direct(self):
        for family in (FamilyId.D, FamilyId.S):
            for eps in (1, -1):
                spec = SumSpec(family, 3, 2, 2, 1, eps)
                assert reduction_sum(family, 3, 2, 2, 1, eps) == weighted_power_sum(spec)

    def test_path(self):
        assert verify_reduction_path("D", 3, 1, 2, 2, -1).passed
        assert verify_reduction_path("s", 2, 2, 3, 1, 1).passed


@pytest.mark.slow
class TestAcceptance:
    def test_telescoping(self):
        for l, u in product(range(9), repeat=2):
            assert verify_alternating_telescope(l, u, 40).passed
            assert verify_positive_telescope(l, u, 40).passed

    def test_parity_suite(self):
        for M in (1, 2):
            for n in range(1, 7):
                for I in range(0, 2 * M * n + 1):
                    for l in range(1, 2 * M * n + 1):
                        assert verify_b_composition_parity(M, n, I, l).passed
        for n in range(1, 41):
            for b in range(0, 21):
                assert verify_w_partial_sum_parity(n, b).passed
        for J in range(1, 65):
            assert verify_diagonal_a_parity(J).passed

    def test_quotients(self):
        for kind in QUOTIENT_KINDS:
            for l, a, n in product(range(1, 11), range(1, 4), range(1, 16)):
                for u in range(a + 1):
                    assert verify_quotients(kind, l, a, u, n).passed

    def test_reduction(self):
        for kind in ("A", "B"):
            for m in range(1, 5):
                assert verify_reduction_family(kind, m, 3, 1, 15).passed
            for m in range(1, 4):
                for h in (2, 3):
                    assert verify_reduction_family(kind, m, 3, h, 12).passed
