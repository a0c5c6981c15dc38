from fractions import Fraction as Q

import pytest

from capelli import knopsahi as ks
from capelli.bipoly import BiPoly, to_falling_coeff
from capelli.partitions import PClass, classify, dagger, h_poly, size, upto
from capelli.ratfunc import RatFunc, UniPoly


def RF(num, den=(1,)):
    return RatFunc(UniPoly(num), UniPoly(den))


class TestConstruction:
    def test_empty_partition(self):
        assert ks.ks_poly((0, 0)).body == BiPoly.const(RatFunc.one())

    def test_single_row(self):
        body = ks.ks_poly((1, 0)).body
        expected = BiPoly({(1, 0): RF((1,)), (0, 1): RF((1,)), (0, 0): RF((1, 1))})
        assert body == expected

    def test_single_column(self):
        assert ks.ks_poly((1, 1)).body == BiPoly({(1, 1): RF((1,))})

    def test_leading_falling_coefficient_is_one(self):
        for lam in upto(6):
            body = ks.ks_poly(lam).body
            assert to_falling_coeff(body, lam[0], lam[1]) == RatFunc.one()
            assert body.total_degree() == size(lam)
            assert body.is_symmetric()


class TestCharacterization:
    def test_vanishing_and_normalization(self):
        for lam in upto(5):
            assert ks.characterization_holds(lam)

    def test_shifted_eval_matches_body(self):
        lam = (3, 1)
        for mu in upto(4):
            x = RatFunc(UniPoly((mu[0] - 1, -1)))
            y = RatFunc.const(mu[1])
            assert ks.shifted_eval(lam, mu) == ks.ks_poly(lam).body.eval2(x, y)


class TestPoleSet:
    def test_singular_at_zero(self):
        assert ks.ks_pole_set((2, 0), 3) == {0}

    def test_equal_parts_never_singular(self):
        assert ks.ks_pole_set((1, 1), 5) == set()

    def test_row_of_three(self):
        # diff 3 lies in [k+2, 2k+2] only for k = 1
        assert ks.ks_pole_set((3, 0), 3) == {1}

    def test_matches_classification(self):
        for lam in upto(8):
            poles = ks.ks_pole_set(lam, 6)
            expected = {k for k in range(7) if classify(lam, k) is PClass.SINGULAR}
            assert poles == expected


class TestSingRegParts:
    def test_residue_part(self):
        assert ks.sing_part((2, 0), 0) == BiPoly({(1, 1): Q(2)})

    def test_no_pole_means_zero(self):
        assert ks.sing_part((1, 0), 0).is_zero()

    def test_scaled_dual(self):
        got = ks.sing_part((3, 0), 1)
        assert got == ks.reg_part((2, 1), 1).scale(Q(6))

    def test_regular_part_square(self):
        expected = BiPoly(
            {(2, 0): Q(1), (0, 2): Q(1), (1, 1): Q(2), (1, 0): Q(1), (0, 1): Q(1)}
        )
        assert ks.reg_part((2, 0), 0) == expected

    def test_regular_part_is_specialization_off_poles(self):
        assert ks.reg_part((1, 0), 2) == BiPoly({(1, 0): Q(1), (0, 1): Q(1), (0, 0): Q(3)})

    def test_constant(self):
        assert ks.reg_part((0, 0), 4) == BiPoly.const(Q(1))


class TestResidueScale:
    def test_base_case(self):
        assert ks.r_coeff((2, 0), 0) == 2

    def test_k_one(self):
        assert ks.r_coeff((3, 0), 1) == 6

    def test_formula_cross_check(self):
        # -H_(3,1)(0) / H'_(2,2)(0) = -4 / -2
        assert ks.r_coeff((3, 1), 0) == 2

    def test_wrong_class_rejected(self):
        with pytest.raises(ValueError):
            ks.r_coeff((1, 0), 0)

    def test_singular_part_identity(self):
        for k in range(3):
            for lam in upto(8):
                if classify(lam, k) is not PClass.SINGULAR:
                    continue
                lamd = dagger(lam, k)
                assert ks.sing_part(lam, k) == ks.reg_part(lamd, k).scale(ks.r_coeff(lam, k))


class TestQPoly:
    def test_base_value(self):
        expected = BiPoly(
            {(2, 0): Q(1), (0, 2): Q(1), (1, 1): Q(2), (1, 0): Q(1), (0, 1): Q(1)}
        )
        assert ks.q_poly((2, 0), 0) == expected

    @pytest.mark.parametrize("lam, k", [((3, 0), 1), ((4, 1), 1)])
    def test_route_agreement(self, lam, k):
        # q_poly asserts the limit route equals the derivative route
        assert ks.q_poly(lam, k).is_symmetric()

    def test_wrong_class_rejected(self):
        with pytest.raises(ValueError):
            ks.q_poly((1, 1), 0)


class TestGenEval:
    def test_normalized_row(self):
        for k in range(3):
            f = BiPoly({(1, 0): Q(1), (0, 1): Q(1), (0, 0): Q(k + 1)})
            assert ks.gen_eval(f, (1, 0), k) == 1

    def test_singular_branch(self):
        assert ks.gen_eval(BiPoly({(1, 1): Q(-4)}), (2, 0), 0) == 1

    def test_square_kills_sum_functions(self):
        f = BiPoly({(2, 0): Q(1, 2), (0, 2): Q(1, 2), (1, 1): Q(1), (1, 0): Q(1, 2), (0, 1): Q(1, 2)})
        assert ks.gen_eval(f, (2, 0), 0) == 0

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            ks.gen_eval(BiPoly({(1, 0): Q(1)}), (0, 0), 0)


class TestTCheck:
    def test_t1_is_h_value(self):
        t1, t2 = ks.tcheck_values((2, 0), 0)
        assert t1 == Q(h_poly((2, 0))(0)) == 2

    def test_value_at_dagger(self):
        t1, _ = ks.tcheck_values((2, 0), 0)
        q = ks.q_poly((2, 0), 0)
        assert ks.gen_eval(q, (1, 1), 0) == t1

    def test_value_at_self(self):
        lam, k = (3, 0), 1
        _, t2 = ks.tcheck_values(lam, k)
        q = ks.q_poly(lam, k)
        assert ks.gen_eval(q, lam, k) == t2

    def test_delta_pattern(self):
        for lam, k in [((2, 0), 0), ((3, 0), 1), ((3, 1), 0), ((4, 0), 1)]:
            t1, t2 = ks.tcheck_values(lam, k)
            q = ks.q_poly(lam, k)
            lamd = dagger(lam, k)
            for mu in upto(size(lam)):
                want = t1 * (mu == lamd) + t2 * (mu == lam)
                assert ks.gen_eval(q, mu, k) == want


class TestClosedFormHelpers:
    """Closed products for the dagger-pair normalization data, parametrized
    by lam = (d+k+1, d+l+1) quasiregular with dagger (d+k+l+2, d)."""

    @staticmethod
    def _fact(n):
        import math

        return math.factorial(n)

    def test_dagger_helper_values(self):
        import math

        for k in range(4):
            for l in range(k + 1):
                for d in range(4):
                    lam = (d + k + 1, d + l + 1)
                    lamd = (d + k + l + 2, d)
                    assert dagger(lam, k) == lamd
                    fall = Q(math.prod(range(l + 2, k + l + 3)))
                    want_r = Q((-1) ** l) * fall / (self._fact(k - l) * self._fact(l))
                    assert ks.r_coeff(lamd, k) == want_r, (lam, k)
                    want_h = Q(
                        self._fact(k + l + 2) * self._fact(d) * self._fact(d + l + 1),
                        self._fact(l + 1),
                    )
                    assert Q(h_poly(lamd)(k)) == want_h, (lam, k)
                    want_hprime = Q(
                        (-1) ** (l + 1)
                        * self._fact(k - l)
                        * self._fact(d + l + 1)
                        * self._fact(d)
                        * self._fact(l)
                    )
                    assert Q(h_poly(lam).derivative()(k)) == want_hprime, (lam, k)


def test_reg_basis_triangular_small():
    for k in range(3):
        assert ks.reg_basis_triangular(k, 5)
