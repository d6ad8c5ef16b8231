"""Test the asymptotic rate bounds"""

import math
from fractions import Fraction

import pytest

from subblock_bounds.asymptotics import (
    CSCC_COLUMNS,
    SECC_COLUMNS,
    binary_entropy,
    delta_star,
    gamma_sp,
    gamma_sp_acute,
    log2_binom,
    rate_table,
    secc_crossover_delta,
    secc_rate_bounds,
)
from subblock_bounds.schemas import CodeFamily
from subblock_bounds.types import DomainError, InvalidParameterError
from subblock_bounds.utils import parse_delta_range


class TestHelpers:
    """Entropy and log-binomials"""

    @pytest.mark.unit
    def test_binary_entropy(self):
        assert binary_entropy(0) == 0
        assert binary_entropy(1) == 0
        assert binary_entropy(0.5) == pytest.approx(1.0)
        assert binary_entropy(Fraction(1, 4)) == pytest.approx(0.811278, abs=1e-6)
        with pytest.raises(DomainError):
            binary_entropy(1.2)

    @pytest.mark.unit
    def test_log2_binom(self):
        assert log2_binom(20, 10) == pytest.approx(math.log2(184756))
        assert log2_binom(1000, 500) == pytest.approx(math.log2(math.comb(1000, 500)))
        assert log2_binom(4, 5) == -math.inf

    @pytest.mark.unit
    def test_delta_star(self):
        assert delta_star(0.5) == pytest.approx(0.5)
        assert delta_star(Fraction(7, 10)) == pytest.approx(0.42)


class TestCsccRates:
    """gamma_sp and the shifted-space variant"""

    @pytest.mark.unit
    @pytest.mark.smoke
    def test_reference_values(self):
        assert gamma_sp(20, 10, 0.2) == pytest.approx(0.5426, abs=5e-4)
        assert gamma_sp_acute(20, 10, 0.2) == pytest.approx(0.5145, abs=5e-4)
        assert gamma_sp_acute(20, 10, 0.2) < gamma_sp(20, 10, 0.2)

    @pytest.mark.unit
    def test_gamma_sp_decreases_with_delta(self):
        values = [gamma_sp(20, 10, d / 100) for d in range(5, 45, 5)]
        assert all(a > b for a, b in zip(values, values[1:]))

    @pytest.mark.unit
    def test_gamma_sp_domain(self):
        with pytest.raises(DomainError):
            gamma_sp(20, 10, 0.6)
        with pytest.raises(DomainError):
            gamma_sp(20, 10, 0)

    @pytest.mark.unit
    def test_gamma_sp_acute_domain(self):
        with pytest.raises(DomainError):
            gamma_sp_acute(20, 10, 0.05)
        with pytest.raises(DomainError):
            gamma_sp_acute(20, 10, 0.35)
        with pytest.raises(DomainError):
            gamma_sp_acute(20, 19, 0.2)
        with pytest.raises(DomainError):
            gamma_sp_acute(10, 2, 0.3)


class TestSeccRates:
    """r1, the lowered-space correction and sigma_sp"""

    @pytest.mark.unit
    def test_crossover(self):
        assert secc_crossover_delta(10, 5) == pytest.approx(0.0821, abs=5e-4)
        with pytest.raises(DomainError):
            secc_crossover_delta(10, 0)

    @pytest.mark.unit
    def test_alpha_hat_switches_at_crossover(self):
        crossover = secc_crossover_delta(10, 5)
        below = secc_rate_bounds(10, 5, crossover - 0.01)
        above = secc_rate_bounds(10, 5, crossover + 0.01)
        assert below.alpha_hat == 0 and below.nu < 0
        assert above.alpha_hat == 1 and above.nu > 0
        assert above.bound == above.r1_minus_nu
        assert below.bound == below.r1

    @pytest.mark.unit
    def test_cells_follow_their_ranges(self):
        inside = secc_rate_bounds(10, 5, 0.1)
        assert inside.r1 is not None and inside.sigma_sp is not None
        middle = secc_rate_bounds(10, 5, 0.3)
        assert middle.r1 is None and middle.r1_minus_nu is None
        assert middle.sigma_sp is not None
        outside = secc_rate_bounds(10, 5, 0.5)
        assert outside.sigma_sp is None

    @pytest.mark.unit
    def test_weight_must_be_inner(self):
        with pytest.raises(DomainError):
            secc_rate_bounds(10, 10, 0.1)


class TestRateTable:
    """Tabulation over a delta grid"""

    @pytest.mark.unit
    def test_cscc_table(self):
        rows = rate_table(CodeFamily.CSCC, 20, [10, 14], [Fraction(1, 20), Fraction(1, 5)])
        assert [(r.w, r.delta) for r in rows] == [(10, 0.05), (10, 0.2), (14, 0.05), (14, 0.2)]
        assert set(rows[0].values) == set(CSCC_COLUMNS)
        assert rows[0].values["gamma_sp_acute"] is None
        assert rows[1].values["gamma_sp"] == pytest.approx(0.5426, abs=5e-4)

    @pytest.mark.unit
    def test_secc_table_marks_out_of_domain_cells(self):
        rows = rate_table("secc", 10, [0, 5], [0.1])
        assert set(rows[0].values) == set(SECC_COLUMNS)
        assert all(v is None for v in rows[0].values.values())
        assert rows[1].values["r1"] is not None

    @pytest.mark.unit
    def test_invalid_inputs(self):
        with pytest.raises(InvalidParameterError):
            rate_table("cscc", 20, [25], [0.1])
        with pytest.raises(InvalidParameterError):
            rate_table("cscc", 0, [0], [0.1])
        with pytest.raises(ValueError):
            rate_table("other", 20, [10], [0.1])


class TestRateProperties:
    """Orderings, symmetry and continuity of the rate bounds"""

    @pytest.mark.unit
    def test_entropy_symmetry(self):
        for i in range(1, 200):
            x = i / 200
            assert binary_entropy(x) == pytest.approx(binary_entropy(1 - x), abs=1e-12)

    @pytest.mark.unit
    def test_gamma_sp_continuous_at_integer_points(self):
        for L, w in [(20, 10), (20, 14), (40, 20), (32, 12)]:
            for k in range(1, L):
                delta = 4 * k / L
                if delta + 1e-9 >= delta_star(w / L):
                    break
                left = gamma_sp(L, w, delta - 1e-12)
                right = gamma_sp(L, w, delta + 1e-12)
                assert left == pytest.approx(right, abs=1e-9)

    @pytest.mark.unit
    @pytest.mark.smoke
    def test_shifted_space_beats_gamma_sp_on_figure_weights(self):
        for w in (10, 14):
            assert gamma_sp_acute(20, w, 0.2) < gamma_sp(20, w, 0.2)

    @pytest.mark.unit
    def test_shifted_space_ordering_sweep(self):
        inside = outside = 0
        for L in range(4, 65):
            for w in range(math.ceil(L / 2), L - 1):
                delta = 4 / L
                if 3 * L <= w * (L - w):
                    assert gamma_sp_acute(L, w, delta) < gamma_sp(L, w, delta)
                    inside += 1
                else:
                    with pytest.raises(DomainError):
                        gamma_sp_acute(L, w, delta)
                    outside += 1
        assert inside > 0 and outside > 0

    @pytest.mark.unit
    def test_figure_grids_have_no_absent_cells(self):
        cscc = rate_table("cscc", 20, [10, 14], parse_delta_range("0.11:0.29:0.005"))
        assert len(cscc) == 2 * 37
        assert all(v is not None for row in cscc for v in row.values.values())
        secc = rate_table("secc", 10, [5], parse_delta_range("0.01:0.19:0.002"))
        assert len(secc) == 91
        assert all(v is not None for row in secc for v in row.values.values())

    @pytest.mark.regression
    def test_lowered_space_cells_empty_from_two_over_L(self):
        at_edge = secc_rate_bounds(10, 5, 0.2)
        assert at_edge.r1 is None and at_edge.nu is None
        assert at_edge.alpha_hat is None and at_edge.bound is None
        assert at_edge.sigma_sp is not None
        row = rate_table("secc", 10, [5], [Fraction(1, 5)])[0]
        assert row.values["r1"] is None and row.values["r1_minus_nu"] is None
