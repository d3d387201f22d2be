"""Oracle independence: explicit sums, naive convolution, Lagrange
inversion, and the registered engine-vs-oracle suites."""

import math
from fractions import Fraction as F

import pytest

from shefferpoly import (
    MultiPoly,
    UnknownRow,
    UnknownSuite,
    cross_validate,
    lagrange_inverse,
    oracle_explicit_sum,
    oracle_series_product,
)
from shefferpoly.oracle import rule_c0, rule_exp, suite_names

X = MultiPoly.var("x")
Y = MultiPoly.var("y")
Z = MultiPoly.var("z")
ONE = MultiPoly.const(1)


def test_explicit_sum_gould_hopper():
    assert oracle_explicit_sum("I", 3, 2) == X ** 3 + 6 * X * Y
    assert oracle_explicit_sum("I", 0, 2) == ONE


def test_explicit_sum_hermite():
    assert oracle_explicit_sum("VIII", 2) == X ** 2 + 2 * Y


def test_explicit_sum_all_rows_at_zero():
    for row in "I II III IV V VI VII VIII IX X XI".split():
        param = 2 if row in ("I", "III", "IV", "VII") else None
        assert oracle_explicit_sum(row, 0, param) == ONE


def test_explicit_sum_unknown_row():
    with pytest.raises(UnknownRow):
        oracle_explicit_sum("XII", 1)


def test_naive_convolution_single_factor():
    rule = rule_exp(Y, 1)
    coeffs = oracle_series_product([rule], 4)
    for k in range(5):
        assert coeffs[k] == (Y ** k) / math.factorial(k)


def test_naive_convolution_hand_case():
    coeffs = oracle_series_product([rule_exp(Y, 1), rule_exp(Z, 2)], 2)
    assert coeffs[0] == ONE
    assert coeffs[1] == Y
    assert coeffs[2] == Y * Y / 2 + Z


def test_naive_convolution_matches_legendre_S():
    from shefferpoly import legendre_S

    coeffs = oracle_series_product([rule_exp(Y, 1), rule_c0(-X, 2)], 6)
    for n in range(7):
        assert coeffs[n] * math.factorial(n) == legendre_S(n, 6)


def test_lagrange_inverse_log_series():
    # f = e^t - 1  ->  f^(-1) = log(1+t)
    f = [F(1, math.factorial(k)) for k in range(9)]
    f[0] = F(0)
    got = lagrange_inverse(f, 8)
    want = [F(0)] + [F((-1) ** (n + 1), n) for n in range(1, 9)]
    assert got == want


def test_lagrange_inverse_rejects_non_delta():
    with pytest.raises(ValueError):
        lagrange_inverse([F(1), F(1)], 4)


def test_cross_validate_suites_all_pass():
    for name in suite_names():
        results = cross_validate(name, 8)
        bad = [r for r in results if not r.equal]
        assert not bad, f"{name}: {bad[0].description}"


def test_cross_validate_max_n_zero():
    results = cross_validate("ghp-vs-explicit", 0)
    assert results and all(r.equal for r in results)


def test_cross_validate_unknown_suite():
    with pytest.raises(UnknownSuite):
        cross_validate("nope", 3)


def test_oracle_result_json():
    res = cross_validate("ghp-vs-explicit", 2)[0]
    d = res.to_json_dict()
    assert set(d) == {"description", "lhs", "rhs", "equal"}
    assert d["equal"] is True


def test_printed_chebyshev_relation_fails_as_stated():
    # The circulated special-case table pairs "r = m-1, x=0, y->x, z->y"
    # with the ordinary-weight Chebyshev sum; those two columns disagree
    # already at n = 1 (exponential vs ordinary generating weight), which
    # is why the registered row IV check uses the Gamma-moment bridge.
    from shefferpoly import gould_hopper
    from shefferpoly.oracle import row_chebyshev

    m = 2
    substitution_side = gould_hopper(1, m - 1, 4)   # = x + y
    printed_sum_side = row_chebyshev(1, m)          # = x
    assert substitution_side != printed_sum_side
