"""Base polynomial families built from their generating functions.

Conventions (v is the series variable t, C_0 the order-zero Bessel-Tricomi
function C_0(u) = sum_k (-u)^k / (k!)^2):

* Gould-Hopper          exp(x t + y t^s)            = sum H_n^(s)(x,y) t^n/n!
* Legendre S            exp(y t) C_0(-x t^2)        = sum S_n(x,y) t^n/n!
* Legendre R            C_0(x t) C_0(-y t)          = sum R_n(x,y)/n! t^n/n!
* S-kind hybrid base    C_0(-x t^2) exp(y t + z t^r) = sum members t^n/n!
* R-kind hybrid base    C_0(x t) C_0(-y t) exp(z t^r), weight t^n/(n!)^2

R-kind values are stored with the full (n!)^2 scale, i.e. ``leghp_R(n, r)``
is (n!)^2 times the t^n coefficient; callers that want the n!-normalised
family divide once.  Every constructor extracts coefficients from the
expanded product, so the closed finite sums in the oracle module remain a
genuinely independent route.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .multipoly import MultiPoly, as_poly
from .series import OrderTooSmall, Series

_X = MultiPoly.var("x")
_Y = MultiPoly.var("y")
_Z = MultiPoly.var("z")


def tricomi_c(n: int, order: int) -> Series:
    """The order-n Bessel-Tricomi function as a series in its argument:
    C_n(u) = sum_k (-1)^k u^k / (k! (n+k)!)."""
    if n < 0:
        raise ValueError("order of the Bessel-Tricomi function must be >= 0")
    coeffs = [
        Fraction((-1) ** k, math.factorial(k) * math.factorial(n + k))
        for k in range(order + 1)
    ]
    return Series(coeffs, order)


def c0_compose(factor, inner: Series) -> Series:
    """C_0(factor * inner) for a polynomial (or rational) factor and a
    series of zero constant term."""
    w = inner * as_poly(factor)
    return tricomi_c(0, w.order).compose(w)


# -- generating series, cached whole so one expansion serves all n ------------

_SERIES_CACHE: dict = {}


def _cached(key, make):
    got = _SERIES_CACHE.get(key)
    if got is None:
        got = make()
        _SERIES_CACHE[key] = got
    return got


def gould_hopper_series(s: int, order: int) -> Series:
    """exp(x t + y t^s)."""
    if s < 1:
        raise ValueError("Gould-Hopper order must be >= 1")
    return _cached(
        ("gh", s, order),
        lambda: (Series.monomial(_X, 1, order) + Series.monomial(_Y, s, order)).exp(),
    )


def legendre_s_series(order: int) -> Series:
    """exp(y t) C_0(-x t^2)."""
    return _cached(
        ("legS", order),
        lambda: Series.monomial(_Y, 1, order).exp()
        * c0_compose(-_X, Series.monomial(Fraction(1), 2, order)),
    )


def legendre_r_series(order: int) -> Series:
    """C_0(x t) C_0(-y t)."""
    return _cached(
        ("legR", order),
        lambda: c0_compose(_X, Series.t(order)) * c0_compose(-_Y, Series.t(order)),
    )


def leghp_s_series(r: int, order: int) -> Series:
    """C_0(-x t^2) exp(y t + z t^r)."""
    if r < 1:
        raise ValueError("superscript parameter r must be >= 1")
    return _cached(
        ("leghpS", r, order),
        lambda: c0_compose(-_X, Series.monomial(Fraction(1), 2, order))
        * (Series.monomial(_Y, 1, order) + Series.monomial(_Z, r, order)).exp(),
    )


def leghp_r_series(r: int, order: int) -> Series:
    """C_0(x t) C_0(-y t) exp(z t^r)."""
    if r < 1:
        raise ValueError("superscript parameter r must be >= 1")
    return _cached(
        ("leghpR", r, order),
        lambda: legendre_r_series(order) * Series.monomial(_Z, r, order).exp(),
    )


def _extract(series: Series, n: int, scale: Fraction) -> MultiPoly:
    if n > series.order:
        raise OrderTooSmall(f"member {n} beyond truncation order {series.order}")
    return as_poly(series.coeffs[n]) * scale


def gould_hopper(n: int, s: int, order: int | None = None) -> MultiPoly:
    """H_n^(s)(x, y), the two-variable higher-order Hermite polynomial.

    >>> print(gould_hopper(3, 2))
    x^3 + 6*x*y
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    order = n if order is None else order
    return _extract(gould_hopper_series(s, order), n, Fraction(math.factorial(n)))


def legendre_S(n: int, order: int | None = None) -> MultiPoly:
    """S_n(x, y) from exp(y t) C_0(-x t^2)."""
    order = n if order is None else order
    return _extract(legendre_s_series(order), n, Fraction(math.factorial(n)))


def legendre_R(n: int, order: int | None = None) -> MultiPoly:
    """R_n(x, y): the (n!)^2-scaled t^n coefficient of C_0(x t) C_0(-y t)."""
    order = n if order is None else order
    return _extract(legendre_r_series(order), n, Fraction(math.factorial(n) ** 2))


def leghp_S(n: int, r: int, order: int | None = None) -> MultiPoly:
    """S-kind Legendre-Gould Hopper base member, n! * [t^n]."""
    order = n if order is None else order
    return _extract(leghp_s_series(r, order), n, Fraction(math.factorial(n)))


def leghp_R(n: int, r: int, order: int | None = None) -> MultiPoly:
    """R-kind Legendre-Gould Hopper base member, (n!)^2 * [t^n]."""
    order = n if order is None else order
    return _extract(leghp_r_series(r, order), n, Fraction(math.factorial(n) ** 2))


# -- Sheffer members and the umbral pairing -----------------------------------


def sheffer_series(pair, order: int) -> Series:
    """A(t) exp(x H(t)) for a catalog pair: the egf of its Sheffer sequence."""
    key = ("sheffer", pair.name, pair.params, order)
    def make():
        res = pair.resolved(order)
        return (res.H * _X).exp() * res.A
    return _cached(key, make)


def sheffer_poly(pair, n: int, order: int | None = None) -> MultiPoly:
    """The Sheffer element s_n(x) of a pair: n! * [t^n] A(t) exp(x H(t)).

    This is the sequence biorthogonal to (g, f); pairs whose classical
    polynomial carries a different per-n scale record it in their
    ``normalization`` field (e.g. s_n = n! L_n^(alpha) for ``laguerre``).

    >>> from .pairs import get_pair
    >>> print(sheffer_poly(get_pair("lower-factorial"), 3))
    x^3 - 3*x^2 + 2*x
    """
    order = max(n, 1) if order is None else order
    return _extract(sheffer_series(pair, order), n, Fraction(math.factorial(n)))


def umbral_pairing(h: Series, p: MultiPoly) -> Fraction:
    """<h(t) | p(x)> = sum_k h_k * k! * [x^k] p, for p a polynomial in x only.

    With h = g f^k this realises the biorthogonality that defines a
    Sheffer sequence: <g f^k | s_n> = n! delta_{n,k}.
    """
    if p.depends_on("y") or p.depends_on("z"):
        raise ValueError("the umbral pairing is defined for polynomials in x only")
    total = Fraction(0)
    fact = 1
    for k in range(min(h.order, p.degree_in("x") if not p.is_zero else 0) + 1):
        if k:
            fact *= k
        hk = h.coeffs[k]
        if isinstance(hk, MultiPoly):
            if hk.total_degree() > 0:
                raise ValueError("the pairing needs a scalar series")
            hk = hk.constant_value()
        if hk:
            c = p.coeff((k, 0, 0))
            if c:
                total += Fraction(hk) * fact * c
    return total
