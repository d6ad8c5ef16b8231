"""Test SECC bounds: reduced program, closed forms, certificates and the handler"""

from fractions import Fraction

import pytest

from subblock_bounds.bounds import (
    SeccBoundHandler,
    build_certificate_table1,
    build_certificate_table2,
    build_secc_program,
    secc_best_m0_bound,
    secc_closed_form,
    secc_closed_form_m1,
    secc_closed_form_wL1,
    secc_gsp_bound,
    secc_m0_bound,
    secc_reduced_lp,
)
from subblock_bounds.combinatorics import binom_at_least
from subblock_bounds.lp import solve_min, verify_certificate
from subblock_bounds.schemas import BoundMethod, CodeFamily
from subblock_bounds.types import (
    DomainError,
    InvalidParameterError,
    SeccInstance,
    Verdict,
    WeightProfile,
)
from subblock_bounds.utils import format_exact


class TestReducedProgram:
    """The SECC program over row and column profiles"""

    @pytest.mark.unit
    @pytest.mark.smoke
    def test_example_program(self):
        lp = secc_reduced_lp(SeccInstance(4, 3, 2, 3))
        assert lp.shape == (5, 9)
        assert lp.matrix == (
            (1, 12, 0, 0, 0, 0, 0, 0, 0),
            (1, 1, 9, 0, 0, 2, 0, 0, 0),
            (0, 2, 1, 6, 0, 0, 4, 0, 0),
            (0, 0, 3, 1, 3, 0, 0, 6, 0),
            (0, 0, 0, 4, 1, 0, 0, 0, 8),
        )
        assert lp.objective == (1, 12, 54, 108, 81, 12, 108, 324, 324)
        assert secc_gsp_bound(SeccInstance(4, 3, 2, 3)) == Fraction(83, 2)

    @pytest.mark.unit
    def test_entry_lookup(self):
        lp = secc_reduced_lp(SeccInstance(4, 3, 2, 3))
        v = WeightProfile((3, 3, 2, 2), 3)
        u = WeightProfile((3, 2, 2, 1), 3)
        assert lp.entry(v, u) == 0
        assert lp.entry(WeightProfile((3, 2, 2, 2), 3), u) == 6

    @pytest.mark.unit
    def test_bound_non_increasing_in_threshold(self):
        for m, L in [(1, 4), (1, 6), (2, 3), (2, 4), (3, 2)]:
            for d in range(1, min(m * L, 5) + 1):
                values = [secc_gsp_bound(SeccInstance(m, L, w, d)) for w in range(L + 1)]
                assert all(a >= b for a, b in zip(values, values[1:]))
                assert values[-1] == 1

    @pytest.mark.unit
    def test_radius_zero_is_the_space_size(self):
        assert secc_gsp_bound(SeccInstance(2, 3, 2, 2)) == binom_at_least(3, 2) ** 2

    @pytest.mark.unit
    def test_zero_threshold_matches_unconstrained_sphere_packing(self):
        # with w = 0 every word is allowed and balls never leave the space
        assert secc_gsp_bound(SeccInstance(1, 4, 0, 3)) == Fraction(16, 5)


class TestClosedForms:
    """w = L-1 and m = 1 closed forms"""

    @pytest.mark.unit
    def test_table1_values(self):
        assert secc_closed_form_wL1(4, 3) == Fraction(83, 2)
        assert secc_closed_form_wL1(1, 4) == 1
        assert secc_closed_form_wL1(4, 2) == 15

    @pytest.mark.unit
    def test_table1_matches_program_inside_exact_domain(self):
        for m in range(1, 6):
            for L in range(1, 6):
                if not (m == 1 or 2 * L >= m + 2):
                    continue
                lp = build_secc_program(m, L, L - 1, 1)
                assert secc_closed_form_wL1(m, L) == solve_min(lp).value, (m, L)

    @pytest.mark.unit
    def test_table1_boundary_is_an_upper_bound_only(self):
        for m, L in [(4, 2), (3, 2), (2, 1)]:
            lp_value = solve_min(build_secc_program(m, L, L - 1, 1)).value
            assert lp_value < secc_closed_form_wL1(m, L), (m, L)
        assert solve_min(build_secc_program(2, 1, 0, 1)).value == Fraction(4, 3)

    @pytest.mark.unit
    def test_table2_values(self):
        assert secc_closed_form_m1(4, 2) == Fraction(5, 2)
        assert secc_closed_form_m1(5, 2) == 5
        assert secc_closed_form_m1(6, 6) == 1

    @pytest.mark.unit
    def test_table2_matches_program(self):
        for L in range(1, 11):
            for w in range(L + 1):
                if 2 * w < L - 1:
                    continue
                lp = build_secc_program(1, L, w, 1)
                assert secc_closed_form_m1(L, w) == solve_min(lp).value, (L, w)

    @pytest.mark.unit
    def test_domains(self):
        with pytest.raises(DomainError):
            secc_closed_form_wL1(5, 2)
        with pytest.raises(InvalidParameterError):
            secc_closed_form_wL1(0, 3)
        with pytest.raises(DomainError):
            secc_closed_form_m1(6, 2)
        with pytest.raises(InvalidParameterError):
            secc_closed_form_m1(4, 5)
        with pytest.raises(DomainError):
            secc_closed_form(SeccInstance(2, 4, 2, 3))
        with pytest.raises(DomainError):
            secc_closed_form(SeccInstance(1, 6, 5, 5))

    @pytest.mark.unit
    def test_dispatch(self):
        assert secc_closed_form(SeccInstance(4, 3, 2, 3)) == Fraction(83, 2)
        assert secc_closed_form(SeccInstance(1, 5, 2, 4)) == 5


class TestCertificates:
    """Tabulated primal/dual pairs"""

    @pytest.mark.unit
    def test_table1_certificate_for_example(self):
        cert = build_certificate_table1(4, 3)
        assert cert.primal == {
            WeightProfile((3, 3, 3, 2), 3): Fraction(1, 12),
            WeightProfile((3, 3, 2, 2), 3): Fraction(1, 4),
            WeightProfile((3, 2, 2, 2), 3): Fraction(1, 4),
        }
        assert cert.dual == {
            WeightProfile((3, 3, 3, 3), 3): Fraction(1),
            WeightProfile((3, 2, 2, 2), 3): Fraction(18),
            WeightProfile((2, 2, 2, 2), 3): Fraction(45, 2),
        }

    @pytest.mark.unit
    def test_table1_certificates_verify(self):
        for m in range(1, 7):
            for L in range(1, 6):
                if not (m == 1 or 2 * L >= m + 2):
                    continue
                lp = build_secc_program(m, L, L - 1, 1)
                assert verify_certificate(lp, build_certificate_table1(m, L)) is Verdict.VALID, (m, L)

    @pytest.mark.unit
    def test_table1_boundary_certificate_fails_dual_check(self):
        lp = build_secc_program(4, 2, 1, 1)
        assert verify_certificate(lp, build_certificate_table1(4, 2)) is Verdict.DUAL_INFEASIBLE

    @pytest.mark.unit
    def test_table2_certificates_verify(self):
        for L in range(1, 13):
            for w in range(L + 1):
                if 2 * w < L - 1:
                    continue
                lp = build_secc_program(1, L, w, 1)
                assert verify_certificate(lp, build_certificate_table2(L, w)) is Verdict.VALID, (L, w)


class TestLoweredSpaceBound:
    """Bounds from spaces whose first m0 subblocks may drop below w"""

    @pytest.mark.unit
    def test_m0_zero_is_plain_sphere_packing(self):
        # no lowered subblocks: |S| over the single-bit ball inside S
        assert secc_m0_bound(2, 4, 2, 3, 0) == Fraction(11**2, 1 + 2 * 2)

    @pytest.mark.unit
    def test_best_m0_prefers_smallest_on_ties(self):
        value, m0 = secc_best_m0_bound(2, 4, 2, 3)
        assert value == min(secc_m0_bound(2, 4, 2, 3, k) for k in range(3))
        assert all(secc_m0_bound(2, 4, 2, 3, k) > value for k in range(m0))

    @pytest.mark.unit
    def test_never_below_lp_optimum(self):
        inst = SeccInstance(2, 3, 2, 3)
        value, _ = secc_best_m0_bound(2, 3, 2, 3)
        assert value >= secc_gsp_bound(inst)

    @pytest.mark.unit
    def test_domain(self):
        with pytest.raises(DomainError):
            secc_m0_bound(2, 4, 0, 3, 0)
        with pytest.raises(DomainError):
            secc_m0_bound(2, 4, 2, 3, 3)
        with pytest.raises(DomainError):
            secc_m0_bound(2, 4, 2, 6, 0)


class TestSeccBoundHandler:
    """Method dispatch and certification"""

    @pytest.mark.unit
    def test_both_methods_agree(self, bounds_config, capturing_logger, bounds_metrics):
        handler = SeccBoundHandler(bounds_config, capturing_logger, bounds_metrics)
        payload = handler.compute(SeccInstance(4, 3, 2, 3), BoundMethod.BOTH)
        assert payload.family is CodeFamily.SECC
        assert payload.agreement is True
        assert [r.value.exact for r in payload.results] == ["83/2", "83/2"]
        assert payload.results[0].value.decimal == "41.5"
        assert bounds_metrics.total_pivots > 0

    @pytest.mark.unit
    def test_gen_reports_m0(self, bounds_config, capturing_logger):
        handler = SeccBoundHandler(bounds_config, capturing_logger)
        payload = handler.compute(SeccInstance(2, 4, 2, 3), BoundMethod.GEN)
        expected, m0 = secc_best_m0_bound(2, 4, 2, 3)
        assert payload.results[0].m0 == m0
        assert payload.results[0].value.exact == format_exact(expected)

    @pytest.mark.unit
    def test_certify_table1(self, bounds_config, capturing_logger, log_records):
        handler = SeccBoundHandler(bounds_config, capturing_logger)
        payload = handler.certify(1, m=4, L=3)
        assert payload.verdict == "valid"
        assert payload.primal_value.exact == "83/2"
        assert payload.dual_value.exact == "83/2"
        assert payload.closed_form.exact == "83/2"
        assert payload.lp_value.exact == "83/2"
        certify_logs = [r for r in log_records if r.get("category") == "certify"]
        assert certify_logs[0]["level"] == 1

    @pytest.mark.unit
    def test_certify_boundary_reports_failure(self, bounds_config, capturing_logger, log_records):
        handler = SeccBoundHandler(bounds_config, capturing_logger)
        payload = handler.certify(1, m=4, L=2)
        assert payload.verdict == "dual-infeasible"
        assert payload.closed_form.exact == "15"
        certify_logs = [r for r in log_records if r.get("category") == "certify"]
        assert certify_logs[0]["level"] == 0

    @pytest.mark.unit
    def test_certify_table2(self, bounds_config, capturing_logger):
        handler = SeccBoundHandler(bounds_config, capturing_logger)
        payload = handler.certify(2, L=5, w=2)
        assert payload.verdict == "valid"
        assert payload.closed_form.exact == "5"

    @pytest.mark.unit
    def test_certify_argument_errors(self, bounds_config, capturing_logger):
        handler = SeccBoundHandler(bounds_config, capturing_logger)
        with pytest.raises(InvalidParameterError):
            handler.certify(2, L=5)
        with pytest.raises(InvalidParameterError):
            handler.certify(3, L=5)
        with pytest.raises(DomainError):
            handler.certify(1, m=5, L=2)
