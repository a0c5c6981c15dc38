from fractions import Fraction as Q

import pytest

from capelli.hypergeom import DougallResult, HypParams, dougall_check, falling, pfq_terminating, rising


class TestFactorials:
    def test_rising(self):
        assert rising(2, 3) == 24

    def test_falling(self):
        assert falling(3, 2) == 6

    def test_rising_hits_zero(self):
        assert rising(-1, 2) == 0

    def test_empty_products(self):
        assert rising(Q(7, 3), 0) == 1 == falling(Q(-5), 0)


class TestTerminatingSeries:
    def test_two_term_2f1(self):
        # 2F1(-1, b; c; 1) = 1 - b/c
        p = HypParams.of((-1, 3), (5,), 1)
        assert pfq_terminating(p) == 1 - Q(3, 5)

    def test_zero_numerator_parameter(self):
        p = HypParams.of((0, 7, Q(1, 2)), (2, 3), Q(9))
        assert pfq_terminating(p) == 1

    def test_dougall_two_terms(self):
        p = HypParams.of((2, 2, -1, -1, -1), (1, 4, 4, 4), 1)
        assert pfq_terminating(p) == Q(15, 16)

    def test_requires_termination(self):
        with pytest.raises(ValueError):
            pfq_terminating(HypParams.of((Q(1, 2), 3), (5,), 1))

    def test_denominator_zero_in_range(self):
        with pytest.raises(ValueError):
            pfq_terminating(HypParams.of((-3, 1), (-1,), 1))

    def test_denominator_zero_out_of_range_ok(self):
        # -b = -1 stops the sum before the denominator factor vanishes
        assert pfq_terminating(HypParams.of((-1, 1), (-1,), 1)) == 2

    def test_permutation_invariance(self):
        a = pfq_terminating(HypParams.of((-2, 3, Q(1, 2)), (4, 5), Q(2, 3)))
        b = pfq_terminating(HypParams.of((3, Q(1, 2), -2), (5, 4), Q(2, 3)))
        assert a == b


class TestDougall:
    def test_anchor_15_16(self):
        res = dougall_check(2, 1, 1, 1)
        assert res == DougallResult(Q(15, 16), Q(15, 16))
        assert res.equal

    def test_degenerate_b_zero(self):
        res = dougall_check(1, 0, 2, 3)
        assert res.lhs == res.rhs == 1

    def test_degenerate_d_zero(self):
        res = dougall_check(3, 2, 1, 0)
        assert res.lhs == res.rhs == 1

    def test_sweep_member(self):
        assert dougall_check(3, 2, 1, 2).equal

    def test_rational_a(self):
        assert dougall_check(Q(3, 2), 1, 2, 1).equal

    def test_preconditions(self):
        with pytest.raises(ValueError):
            dougall_check(0, 1, 1, 1)
        with pytest.raises(ValueError):
            dougall_check(2, -1, 0, 0)
        with pytest.raises(ValueError):
            dougall_check(-5, 1, 1, 1)

    def test_full_small_sweep(self):
        for a in range(1, 4):
            for b in range(3):
                for c in range(3):
                    for d in range(3):
                        assert dougall_check(a, b, c, d).equal, (a, b, c, d)
