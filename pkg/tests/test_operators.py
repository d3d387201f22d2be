"""Operator calculus: monomial action rules, nilpotency cutoffs, the
shift identity, and exponential operators."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shefferpoly import (
    CutoffRequired,
    MultiPoly,
    NonNilpotentGenerator,
    OpSeries,
    Series,
    commutator_check,
    compose,
    crofton_check,
    deriv,
    exp_operator,
    identity,
    inv_deriv,
    mul_poly,
    mul_var,
    op_pow,
    op_sum,
    scale,
    substitute_operators,
)
from shefferpoly.operators import monomials_up_to

X = MultiPoly.var("x")
Y = MultiPoly.var("y")
Z = MultiPoly.var("z")
ONE = MultiPoly.const(1)


def small_polys():
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
    return st.dictionaries(exps, coeffs, max_size=4).map(MultiPoly)


# -- primitive actions ---------------------------------------------------------


def test_monomial_rules():
    assert deriv("x").apply(X ** 3) == 3 * X ** 2
    assert deriv("x").apply(ONE).is_zero
    assert inv_deriv("x").apply(X ** 3) == X ** 4 / 4
    assert mul_var("x").apply(X ** 3) == X ** 4
    # each acts on its own variable only
    assert deriv("x").apply(X * Y ** 2) == Y ** 2


def test_inverse_derivative_vacuum():
    # InvDeriv(x)^n {1} = x^n / n!
    assert inv_deriv("x").apply(ONE) == X
    assert op_pow(inv_deriv("x"), 2).apply(ONE) == X * X / 2
    assert op_pow(inv_deriv("x"), 4).apply(ONE) == X ** 4 / 24


def test_hermite_one_step_raising():
    op = op_sum(mul_var("y"), F(2) * compose(mul_poly(Z), deriv("y")))
    assert op.apply(Y) == Y * Y + 2 * Z


def test_deriv_invderiv_identities():
    d, di = deriv("y"), inv_deriv("y")
    for m in monomials_up_to(10):
        assert compose(d, di).apply(m) == m
        if m.depends_on("y"):
            assert compose(di, d).apply(m) == m


@settings(max_examples=40)
@given(small_polys(), small_polys(),
       st.fractions(min_value=-3, max_value=3, max_denominator=3),
       st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_linearity(p, q, a, b):
    for op in (deriv("x"), inv_deriv("y"),
               compose(mul_var("z"), deriv("x")),
               op_sum(mul_var("x"), F(2) * deriv("y"))):
        assert op.apply(p * a + q * b) == op.apply(p) * a + op.apply(q) * b


# -- operator series ----------------------------------------------------------------


def test_op_series_constant_one_is_identity():
    h = Series.constant(F(1), 6)
    p = X ** 2 * Y + Z
    assert OpSeries(h, deriv("y")).apply(p) == p


def test_op_series_taylor_shift():
    # e^t at d/dy shifts y by 1
    h = Series.t(6).exp()
    assert OpSeries(h, deriv("y")).apply(Y ** 2) == Y ** 2 + 2 * Y + 1
    shifted = OpSeries(h, deriv("y")).apply(Y ** 3 - Y)
    assert shifted == (Y + 1) ** 3 - (Y + 1)


def test_op_series_plain_derivative():
    h = Series.t(6)
    for n in range(1, 6):
        assert OpSeries(h, deriv("y")).apply(Y ** n) == n * Y ** (n - 1)


def test_op_series_cutoff_required():
    h = Series.t(6).exp()
    with pytest.raises(CutoffRequired):
        OpSeries(h, inv_deriv("y")).apply(Y)
    # explicit cutoff unblocks it
    got = OpSeries(h, inv_deriv("y"), cutoff=2).apply(ONE)
    assert got == ONE + Y + Y * Y / 4


# -- commutators ----------------------------------------------------------------------


def test_weyl_commutator():
    assert commutator_check(deriv("x"), mul_var("x"), 6).passed


def test_self_commutator_fails_with_witness():
    rep = commutator_check(deriv("x"), deriv("x"), 3)
    assert not rep.passed
    assert rep.witness == ONE
    assert rep.got.is_zero


def test_gould_hopper_operator_commutator():
    # s = 2 family operators: M = x + 2 y d/dx, P = d/dx
    M = op_sum(mul_var("x"), F(2) * compose(mul_var("y"), deriv("x")))
    assert commutator_check(deriv("x"), M, 6).passed


# -- the shift identity ----------------------------------------------------------------


def test_crofton_hand_cases():
    chk = crofton_check(2, Z, Y ** 2)
    assert chk.passed and chk.lhs == Y ** 2 + 2 * Z
    assert crofton_check(2, Z, ONE).passed  # constant f
    chk3 = crofton_check(2, Z, Y ** 3)
    assert chk3.passed and chk3.lhs == Y ** 3 + 6 * Z * Y


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("lam", [Z, 2 * Z, Z * Z], ids=["z", "2z", "z^2"])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_crofton_grid(m, lam, k):
    assert crofton_check(m, lam, Y ** k).passed


# -- exponential operators ----------------------------------------------------------------


def test_exp_operator_single_term():
    assert exp_operator([(Z, op_pow(deriv("y"), 2))], Y ** 2) == Y ** 2 + 2 * Z
    assert exp_operator([(F(1), compose(inv_deriv("x"), op_pow(deriv("y"), 2)))],
                        Y ** 2) == Y ** 2 + 2 * X


def test_exp_operator_on_constant():
    assert exp_operator([(Z, deriv("y"))], ONE) == ONE


def test_exp_operator_two_commuting_terms():
    got = exp_operator(
        [(F(1), compose(inv_deriv("x"), op_pow(deriv("y"), 2))),
         (Z, op_pow(deriv("y"), 2))],
        Y ** 2)
    assert got == Y ** 2 + 2 * X + 2 * Z


def test_exp_operator_rejects_non_nilpotent():
    with pytest.raises(NonNilpotentGenerator):
        exp_operator([(F(1), compose(inv_deriv("y"), deriv("y")))], Y)
    with pytest.raises(NonNilpotentGenerator):
        exp_operator([(F(1), inv_deriv("x"))], ONE)


def test_exp_operator_explicit_cutoff():
    # exp(-D_x^{-1}){1} through degree 4 = truncated C_0(x)
    got = exp_operator([(F(-1), inv_deriv("x"))], ONE, cutoff=4)
    want = ONE - X + X ** 2 / 4 - X ** 3 / 36 + X ** 4 / 576
    assert got == want


# -- operator-valued substitution ------------------------------------------------------------


def test_substitute_operator_powers():
    # y^k -> (-D_x^{-1})^k {1} = (-x)^k / k!
    p = Y ** 3 + Y
    got = substitute_operators(p, {"y": compose(scale(-1), inv_deriv("x"))})
    assert got == -(X ** 3) / 6 - X


def test_substitute_mixed_plain_and_operator():
    # z -> y(d/dy)y applied to 1 gives k! y^k; x stays
    p = X * Z ** 2
    got = substitute_operators(
        p, {"z": compose(mul_var("y"), deriv("y"), mul_var("y"))})
    assert got == X * (2 * Y ** 2)


def test_operator_rendering_is_stable():
    op = op_sum(mul_var("y"), F(2) * compose(inv_deriv("x"), deriv("y")))
    assert op.render() == "(y + 2∘D_x^-1∘d/dy)"
    assert identity().render() == "1"
