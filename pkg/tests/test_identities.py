from fractions import Fraction as Q

import pytest

from capelli import identities as idn
from capelli.ratfunc import RatFunc, UniPoly


def RF(num, den=(1,)):
    return RatFunc(UniPoly(num), UniPoly(den))


class TestDerivativeIdentitySides:
    def test_quotient_collapses(self):
        # i = j = 0, N = 2: d/dx x_(2) = 2x - 1
        assert idn.lhs_derivative_identity(0, 0, 2) == RF((-1, 2))

    def test_partial_cancellation(self):
        # x_(1) x_(2) / x_(2) = x
        assert idn.lhs_derivative_identity(1, 0, 2) == RF((1,))

    def test_genuine_rational(self):
        # x_(1)^2 / x_(2) = x/(x-1), derivative -1/(x-1)^2
        assert idn.lhs_derivative_identity(1, 1, 2) == RF((-1,), (1, -2, 1))

    def test_rhs_matches(self):
        for args in [(0, 0, 2), (1, 0, 2), (1, 1, 2), (2, 1, 4), (0, 3, 5)]:
            assert idn.rhs_derivative_identity(*args) == idn.lhs_derivative_identity(*args)

    def test_precondition(self):
        with pytest.raises(ValueError):
            idn.lhs_derivative_identity(2, 1, 2)


class TestSweeps:
    def test_small_exhaustive(self):
        reports = idn.verify_derivative_identity(4)
        assert len(reports) == sum((n + 1) * (n + 2) // 2 for n in range(5))
        assert all(r.passed for r in reports)

    def test_logderiv(self):
        for n in range(11):
            assert idn.logderiv_check(n).passed


class TestPsiChain:
    def test_spec_point(self):
        rep = idn.psi_chain_check(1, 1, 3, [(Q(10), Q(1, 3))])
        assert rep.passed

    def test_grid(self):
        assert idn.psi_chain_check(2, 1, 4).passed

    def test_degenerate_products(self):
        assert idn.psi_chain_check(0, 0, 2).passed

    def test_pole_reported_with_factor(self):
        with pytest.raises(idn.SamplePoleError) as err:
            idn.psi1(Q(10), Q(-1), 3, 1)
        assert "y+" in str(err.value)


class TestFClosedForm:
    def test_single_point(self):
        rep = idn.f_closed_form_check(1, 1, [Q(7)], [Q(5)])
        assert rep.passed

    def test_harmonic_case(self):
        rep = idn.f_closed_form_check(2, 1, [Q(9)], [Q(4)])
        assert rep.passed

    def test_no_numerator_terms(self):
        # j = 0 makes F(0) an empty harmonic sum on both sides
        assert idn.f_sum(0, 0, 2, Q(9), Q(4)) == 0
        assert idn.f_closed(0, 0, 2, Q(9), Q(4)) == 0
        assert idn.f_closed_form_check(0, 2).passed

    def test_default_grids(self):
        assert idn.f_closed_form_check(1, 2).passed


class TestHFunction:
    def test_unit(self):
        rep = idn.h_function_check(1, 1, Q(8), Q(3))
        assert rep.passed and idn.h_sum(1, 1, Q(8), Q(3)) == 1

    def test_half(self):
        assert idn.h_sum(2, 2, Q(12), Q(5)) == Q(1, 2)
        assert idn.h_function_check(2, 2, Q(12), Q(5)).passed

    def test_harmonic_difference(self):
        got = idn.h_sum(0, 2, Q(12), Q(5))
        assert got == (Q(1, 6) + Q(1, 7)) - (Q(1, 13) + Q(1, 14))
        assert idn.h_function_check(2, 0, Q(12), Q(5)).passed

    def test_series_route_agrees(self):
        for s in (1, 2, 3):
            assert idn.h_hypergeometric(s, 2, Q(12), Q(5)) == Q(1, s)

    def test_domain_guard(self):
        with pytest.raises(ValueError):
            idn.h_function_check(3, 1, Q(4), Q(2))


class TestReportType:
    def test_fail_requires_witness(self):
        with pytest.raises(ValueError):
            idn.IdentityReport(name="x", params=(), status="fail", witness=None)

    def test_status_vocabulary(self):
        with pytest.raises(ValueError):
            idn.IdentityReport(name="x", params=(), status="maybe")
