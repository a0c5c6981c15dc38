from fractions import Fraction as Q

import pytest

from capelli import deligne as dl
from capelli import eigenpoly as ep
from capelli.bipoly import BiPoly
from capelli.deligne import Block, DualScalar, OpPoly
from capelli.partitions import upto
from capelli.ratfunc import RatFunc, UniPoly


class TestDualScalar:
    def test_product_rule(self):
        a = DualScalar(Q(2), Q(3))
        b = DualScalar(Q(5), Q(7))
        assert a * b == DualScalar(Q(10), Q(2) * 7 + Q(3) * 5)

    def test_nilpotent_square(self):
        eps = DualScalar(Q(0), Q(1))
        assert (eps * eps).is_zero()

    def test_power_chain_rule(self):
        x = DualScalar(Q(3), Q(1))
        assert x**4 == DualScalar(Q(81), Q(4 * 27))


class TestMinPoly:
    def test_generic_two(self):
        assert dl.min_poly(2, Q(5)) == UniPoly((0, -10, 1))

    def test_coincident_roots(self):
        assert dl.min_poly(2, Q(0)) == UniPoly((0, 0, 1))

    def test_degree_one(self):
        assert dl.min_poly(1, Q(3)) == UniPoly((-2, 1))

    @pytest.mark.parametrize("t", [Q(0), Q(-2), Q(3), Q(1, 2), Q(-5, 3)])
    def test_minimality(self, t):
        for d in range(6):
            assert dl.min_poly_is_minimal(d, t)


class TestBlocks:
    def test_generic(self):
        got = [(b.lam, b.mult) for b in dl.blocks(2, Q(7))]
        assert got == [((1, 1), 1), ((2, 0), 1)]

    def test_degenerate_drops_singular(self):
        got = [(b.lam, b.mult) for b in dl.blocks(2, Q(0))]
        assert got == [((1, 1), 2)]

    def test_trivial(self):
        assert [(b.lam, b.mult) for b in dl.blocks(0, Q(-4))] == [((0, 0), 1)]


class TestBlockEval:
    def test_casimir_on_thick_block(self):
        op = OpPoly({(1, 0): RatFunc.one()})
        b = Block(lam=(1, 1), t=Q(0), mult=2)
        assert dl.block_eval(op, b, Q(0)) == DualScalar(Q(0), Q(1))

    def test_euler_square(self):
        op = OpPoly({(0, 2): RatFunc.one()})
        b = Block(lam=(2, 0), t=Q(7), mult=1)
        assert dl.block_eval(op, b, Q(7)) == DualScalar(Q(4), Q(0))

    def test_casimir_square_chain_rule(self):
        op = OpPoly({(2, 0): RatFunc.one()})
        b = Block(lam=(1, 1), t=Q(0), mult=2)
        assert dl.block_eval(op, b, Q(0)) == DualScalar(Q(0), Q(0))


class TestOperators:
    def test_l_trivial(self):
        assert dl.l_op((0, 0)) == OpPoly.one()

    def test_l_size_one_is_euler(self):
        assert dl.l_op((1, 0)) == OpPoly({(0, 1): RatFunc.one()})

    def test_l_size_two(self):
        # E(E-1) C / (2! * 2s) for lam = (2,0)
        got = dl.l_op((2, 0))
        s4 = RatFunc(UniPoly((1,)), UniPoly((0, 4)))
        assert got == OpPoly({(1, 2): s4, (1, 1): -s4})

    def test_d_case_generic(self):
        assert dl.d_op((1, 0), Q(7)) == OpPoly({(0, 1): RatFunc.one()})

    def test_d_case_singular(self):
        got = dl.d_op((2, 0), Q(0))
        gap = RatFunc(dl.c_cat_poly((1, 1)) - dl.c_cat_poly((2, 0)))
        assert got == dl.l_op((1, 1)).scale(gap)

    def test_d_case_quasiregular_pole_free(self):
        op = dl.d_op((1, 1), Q(0))
        for coeff in op.terms.values():
            assert coeff.valuation(Q(0)) >= 0


class TestEigenvaluePolynomials:
    def test_generic_row(self):
        expected = BiPoly({(1, 0): Q(1), (0, 1): Q(1), (0, 0): Q(-5, 2)})
        assert dl.cat_eig_formula((1, 0), Q(7)) == expected
        assert dl.cat_eig_from_blocks((1, 0), Q(7)) == expected

    def test_noninteger_dimension(self):
        expected = BiPoly({(1, 0): Q(1), (0, 1): Q(1), (0, 0): Q(5, 6)})
        assert dl.cat_eig_formula((1, 0), Q(1, 3)) == expected

    def test_quasiregular_limit(self):
        expected = ep.eig_qreg_limit((1, 1), 0).body
        assert dl.cat_eig_formula((1, 1), Q(0)) == expected
        assert dl.cat_eig_from_blocks((1, 1), Q(0)) == expected

    def test_singular_limit(self):
        assert dl.cat_eig_formula((2, 0), Q(0)) == BiPoly({(1, 1): Q(-4)})

    def test_constant(self):
        assert dl.cat_eig_from_blocks((0, 0), Q(1, 2)) == BiPoly.const(Q(1))

    @pytest.mark.parametrize("t", [Q(-4), Q(0), Q(3), Q(1, 2)])
    def test_route_agreement_small(self, t):
        for lam in upto(4):
            assert dl.cat_eig_from_blocks(lam, t) == dl.cat_eig_formula(lam, t), (lam, t)

    def test_degenerates_to_plain_parameter(self):
        for k in range(3):
            for lam in upto(4):
                assert dl.cat_eig_formula(lam, Q(-2 * k)) == ep.eigen(lam, k).body


class TestScalarLimit:
    @pytest.mark.parametrize("lam, k", [((2, 0), 0), ((3, 0), 1), ((3, 1), 0), ((4, 0), 1)])
    def test_bridge(self, lam, k):
        lhs, rhs = dl.singular_scale_limit(lam, k)
        assert lhs == rhs

    def test_wrong_class(self):
        with pytest.raises(ValueError):
            dl.singular_scale_limit((1, 0), 0)


class TestVanishingPattern:
    def test_identity_on_own_block(self):
        op = dl.d_op((1, 1), Q(0))
        blk = Block(lam=(1, 1), t=Q(0), mult=2)
        assert dl.block_eval(op, blk, Q(0)) == DualScalar(Q(1), Q(0))

    def test_nilpotent_on_dagger_block(self):
        op = dl.d_op((2, 0), Q(0))
        blk = Block(lam=(1, 1), t=Q(0), mult=2)
        assert dl.block_eval(op, blk, Q(0)) == DualScalar(Q(0), Q(1))

    def test_zero_on_smaller_blocks(self):
        op = dl.d_op((1, 1), Q(0))
        for m in range(2):
            for blk in dl.blocks(m, Q(0)):
                assert dl.block_eval(op, blk, Q(0)) == DualScalar(Q(0), Q(0))
