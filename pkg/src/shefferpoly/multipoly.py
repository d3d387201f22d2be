"""Sparse polynomials over exact rationals in the three variables x, y, z.

Coefficients are `fractions.Fraction`; a polynomial is a map from exponent
triples (e_x, e_y, e_z) to nonzero coefficients.  All arithmetic is exact
and every operation returns a fresh value; instances are treated as
immutable and are safe to share between threads.

The canonical term order used by ``str()`` and :func:`poly_latex` is graded
lexicographic with x > y > z, highest total degree first.  Rationals render
as ``p/q`` (or ``p`` when the denominator is 1); this rendering is the one
golden-file tests pin down.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

VARS = ("x", "y", "z")
VAR_INDEX = {v: i for i, v in enumerate(VARS)}

Exponent = tuple[int, int, int]
Scalar = Union[int, Fraction]


class MultiPoly:
    """A sparse exact polynomial in x, y, z.

    >>> x, y = MultiPoly.var("x"), MultiPoly.var("y")
    >>> print((x + y) ** 2)
    x^2 + 2*x*y + y^2
    >>> print((x ** 2 + y).substitute({"x": y}))
    y^2 + y
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[(int(exps[0]), int(exps[1]), int(exps[2]))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict[Exponent, Fraction]) -> "MultiPoly":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._raw({})

    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        return cls._raw({(0, 0, 0): c} if c else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        exps = [0, 0, 0]
        exps[VAR_INDEX[name]] = 1
        return cls._raw({tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Exponent, c: Scalar = 1) -> "MultiPoly":
        return cls({tuple(exps): c})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            acc = out.get(exps)
            if acc is None:
                out[exps] = c
            else:
                acc = acc + c
                if acc:
                    out[exps] = acc
                else:
                    del out[exps]
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return _lift(other) + (-self)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MultiPoly.zero()
            return MultiPoly._raw({e: k * c for e, k in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for (a1, b1, c1), k1 in self.terms.items():
            for (a2, b2, c2), k2 in other.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                k = k1 * k2
                acc = out.get(e)
                if acc is None:
                    out[e] = k
                else:
                    acc = acc + k
                    if acc:
                        out[e] = acc
                    else:
                        del out[e]
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "MultiPoly":
        c = Fraction(other)
        return MultiPoly._raw({e: k / c for e, k in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MultiPoly.const(1)
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return not self.terms
            return self.terms == {(0, 0, 0): c}
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = VAR_INDEX[name]
        return max(e[i] for e in self.terms)

    def depends_on(self, name: str) -> bool:
        i = VAR_INDEX[name]
        return any(e[i] for e in self.terms)

    def coeff(self, exps: Exponent) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_value(self) -> Fraction:
        """The coefficient of the constant monomial."""
        return self.terms.get((0, 0, 0), Fraction(0))

    # -- substitution --------------------------------------------------------

    def substitute(self, mapping: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Simultaneously replace variables by polynomials (or constants).

        Variables absent from ``mapping`` are left in place.
        """
        images: list[MultiPoly] = []
        for v in VARS:
            img = mapping.get(v)
            if img is None:
                images.append(MultiPoly.var(v))
            elif isinstance(img, MultiPoly):
                images.append(img)
            else:
                images.append(MultiPoly.const(img))
        # power tables keep repeated exponents cheap
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.const(1)} for _ in VARS]

        def power(i: int, e: int) -> MultiPoly:
            tab = powers[i]
            got = tab.get(e)
            if got is None:
                got = tab[e - 1] if e - 1 in tab else power(i, e - 1)
                got = got * images[i]
                tab[e] = got
            return tab[e]

        out = MultiPoly.zero()
        for exps, c in self.terms.items():
            term = MultiPoly.const(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    # -- rendering -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in graded-lex order (x > y > z), highest degree first."""
        return sorted(
            self.terms.items(),
            key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])),
        )

    def __str__(self) -> str:
        return poly_str(self)

    def __repr__(self) -> str:
        return f"MultiPoly({poly_str(self)})"


def _lift(v) -> "MultiPoly":
    if isinstance(v, MultiPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return MultiPoly.const(v)
    return NotImplemented


def as_poly(v) -> MultiPoly:
    """Coerce a scalar or polynomial to a MultiPoly."""
    lifted = _lift(v)
    if lifted is NotImplemented:
        raise TypeError(f"cannot interpret {v!r} as a polynomial")
    return lifted


def _monomial_str(exps: Exponent) -> str:
    parts = []
    for v, e in zip(VARS, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def poly_str(p: MultiPoly) -> str:
    """Canonical plain-text rendering, e.g. ``y^2 + 2*x + 2*z``."""
    if not p.terms:
        return "0"
    pieces: list[str] = []
    for exps, c in p.sorted_terms():
        mono = _monomial_str(exps)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)


def _frac_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def poly_latex(p: MultiPoly) -> str:
    """LaTeX rendering in the same canonical term order."""
    if not p.terms:
        return "0"
    pieces: list[str] = []
    for exps, c in p.sorted_terms():
        mono = "".join(
            v if e == 1 else f"{v}^{{{e}}}"
            for v, e in zip(VARS, exps)
            if e
        )
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = _frac_latex(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_frac_latex(mag)}{mono}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)
