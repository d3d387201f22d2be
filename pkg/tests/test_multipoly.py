"""Polynomial ring basics: exact arithmetic, rendering, substitution."""

from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from shefferpoly import MultiPoly, poly_latex

X = MultiPoly.var("x")
Y = MultiPoly.var("y")
Z = MultiPoly.var("z")


def small_polys(max_terms=4, max_exp=3):
    coeffs = st.fractions(
        min_value=-4, max_value=4, max_denominator=6).filter(lambda c: c != 0)
    exps = st.tuples(
        st.integers(0, max_exp), st.integers(0, max_exp), st.integers(0, max_exp))
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(MultiPoly)


def test_construction_drops_zero_terms():
    p = MultiPoly({(1, 0, 0): F(0), (0, 1, 0): F(2)})
    assert p.terms == {(0, 1, 0): F(2)}
    assert MultiPoly.const(0).is_zero


def test_degree_arithmetic():
    p = X ** 2 * Y + Z
    q = Y ** 3
    assert p.total_degree() == 3
    assert (p * q).total_degree() == 6
    assert (p + q).total_degree() <= max(p.total_degree(), q.total_degree())
    assert MultiPoly.zero().total_degree() == -1
    assert p.degree_in("x") == 2 and p.degree_in("z") == 1


def test_scalar_interop():
    assert X + 1 == 1 + X
    assert 2 * X == X * 2
    assert X - X == 0
    assert (X * F(1, 2)) * 2 == X
    assert MultiPoly.const(F(3, 2)) == F(3, 2)


@settings(max_examples=60)
@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=40)
@given(small_polys(), small_polys())
def test_product_degree(p, q):
    if not p.is_zero and not q.is_zero:
        assert (p * q).total_degree() == p.total_degree() + q.total_degree()


def test_pow_matches_repeated_mul():
    p = X + 2 * Y - Z
    assert p ** 3 == p * p * p
    assert p ** 0 == 1


def test_substitute_plain():
    p = X ** 2 + Y
    assert p.substitute({"x": Y}) == Y ** 2 + Y
    assert p.substitute({"x": F(2), "y": F(0)}) == 4
    # simultaneous, not sequential
    q = X * Y
    assert q.substitute({"x": Y, "y": X}) == X * Y


def test_render_graded_lex():
    p = Y ** 2 + 2 * X + 2 * Z
    assert str(p) == "y^2 + 2*x + 2*z"
    assert str(X ** 2 - X) == "x^2 - x"
    assert str(MultiPoly.zero()) == "0"
    assert str(MultiPoly.const(F(-3, 2))) == "-3/2"
    assert str(F(3, 2) * X * Y ** 2) == "3/2*x*y^2"


def test_render_latex():
    p = Y ** 2 + F(1, 2) * X
    assert poly_latex(p) == "y^{2} + \\frac{1}{2}x"
    assert poly_latex(X ** 2 - X) == "x^{2} - x"


def test_rendering_is_deterministic():
    terms = {(2, 0, 0): F(1), (0, 2, 0): F(1), (1, 1, 0): F(1), (0, 0, 1): F(5)}
    a = MultiPoly(dict(terms))
    b = MultiPoly(dict(reversed(list(terms.items()))))
    assert str(a) == str(b) == "x^2 + x*y + y^2 + 5*z"
