"""Formal linear operators on exact polynomials.

The operator algebra is generated by, per variable v in {x, y, z}:

* ``Deriv(v)``     -- d/dv,           v^k -> k v^(k-1)
* ``InvDeriv(v)``  -- antiderivative, v^k -> v^(k+1)/(k+1)
* ``MulVar(v)``    -- multiplication by v

together with multiplication by a fixed polynomial, rational scaling,
sums and composition.  ``InvDeriv`` carries the vacuum normalisation
InvDeriv(v)^n {1} = v^n / n!, i.e. the integration constant is always
zero.

Operator power series h(B) = sum h_k B^k act through nilpotency: when B
strictly lowers the degree in some variable the sum truncates after
finitely many terms on any polynomial, so the action is exact.  The same
degree bookkeeping drives :func:`exp_operator`, which refuses to
exponentiate a generator that does not visibly lower a common variable
unless the caller supplies an explicit cutoff.

Everything here is an immutable expression tree; application is pure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .multipoly import VARS, VAR_INDEX, MultiPoly, as_poly
from .series import OrderTooSmall, Series


class OperatorError(ValueError):
    """Base class for operator precondition violations."""


class CutoffRequired(OperatorError):
    """An operator series needs an explicit cutoff: its base does not
    provably lower any variable's degree."""


class NonNilpotentGenerator(OperatorError):
    """exp_operator got a generator with no commonly lowered variable."""


# Degree-change bookkeeping: each operator reports, per variable, the
# worst-case (largest) change it can make to that variable's degree, or
# None when the change is unbounded.  A value <= -1 proves the operator
# strictly lowers that degree on every monomial it does not annihilate.
Deltas = dict[str, int | None]


def _zero_deltas() -> Deltas:
    return {v: 0 for v in VARS}


class LinOp:
    """Base class for formal linear operators on MultiPoly."""

    def apply(self, p: MultiPoly) -> MultiPoly:
        raise NotImplementedError

    def deltas(self) -> Deltas:
        raise NotImplementedError

    def __call__(self, p: MultiPoly) -> MultiPoly:
        return self.apply(p)

    # convenience algebra
    def __add__(self, other: "LinOp") -> "LinOp":
        return OpSum((self, other))

    def __neg__(self) -> "LinOp":
        return Compose((Scale(Fraction(-1)), self))

    def __sub__(self, other: "LinOp") -> "LinOp":
        return OpSum((self, -other))

    def __rmul__(self, c) -> "LinOp":
        if isinstance(c, (int, Fraction)):
            return Compose((Scale(Fraction(c)), self))
        if isinstance(c, MultiPoly):
            return Compose((MulPoly(c), self))
        return NotImplemented

    def __repr__(self) -> str:
        return self.render()

    def render(self) -> str:
        raise NotImplementedError


class Identity(LinOp):
    def apply(self, p: MultiPoly) -> MultiPoly:
        return p

    def deltas(self) -> Deltas:
        return _zero_deltas()

    def render(self) -> str:
        return "1"


class Scale(LinOp):
    def __init__(self, c):
        self.c = Fraction(c)

    def apply(self, p: MultiPoly) -> MultiPoly:
        return p * self.c

    def deltas(self) -> Deltas:
        return _zero_deltas()

    def render(self) -> str:
        return str(self.c)


class MulPoly(LinOp):
    """Multiplication by a fixed polynomial."""

    def __init__(self, poly: MultiPoly):
        self.poly = as_poly(poly)

    def apply(self, p: MultiPoly) -> MultiPoly:
        return p * self.poly

    def deltas(self) -> Deltas:
        if self.poly.is_zero:
            return _zero_deltas()
        return {v: self.poly.degree_in(v) if self.poly.depends_on(v) else 0 for v in VARS}

    def render(self) -> str:
        return f"({self.poly})"


class MulVar(LinOp):
    def __init__(self, var: str):
        self.var = var
        self.index = VAR_INDEX[var]

    def apply(self, p: MultiPoly) -> MultiPoly:
        i = self.index
        out = {}
        for e, c in p.terms.items():
            e2 = list(e)
            e2[i] += 1
            out[tuple(e2)] = c
        return MultiPoly._raw(out)

    def deltas(self) -> Deltas:
        d = _zero_deltas()
        d[self.var] = 1
        return d

    def render(self) -> str:
        return f"{self.var}"


class Deriv(LinOp):
    def __init__(self, var: str):
        self.var = var
        self.index = VAR_INDEX[var]

    def apply(self, p: MultiPoly) -> MultiPoly:
        i = self.index
        out = {}
        for e, c in p.terms.items():
            k = e[i]
            if not k:
                continue
            e2 = list(e)
            e2[i] = k - 1
            out[tuple(e2)] = c * k
        return MultiPoly._raw(out)

    def deltas(self) -> Deltas:
        d = _zero_deltas()
        d[self.var] = -1
        return d

    def render(self) -> str:
        return f"d/d{self.var}"


class InvDeriv(LinOp):
    def __init__(self, var: str):
        self.var = var
        self.index = VAR_INDEX[var]

    def apply(self, p: MultiPoly) -> MultiPoly:
        i = self.index
        out = {}
        for e, c in p.terms.items():
            e2 = list(e)
            e2[i] += 1
            out[tuple(e2)] = c / (e[i] + 1)
        return MultiPoly._raw(out)

    def deltas(self) -> Deltas:
        d = _zero_deltas()
        d[self.var] = 1
        return d

    def render(self) -> str:
        return f"D_{self.var}^-1"


class OpSum(LinOp):
    def __init__(self, ops: Sequence[LinOp]):
        flat: list[LinOp] = []
        for op in ops:
            if isinstance(op, OpSum):
                flat.extend(op.ops)
            else:
                flat.append(op)
        self.ops = tuple(flat)

    def apply(self, p: MultiPoly) -> MultiPoly:
        out = MultiPoly.zero()
        for op in self.ops:
            out = out + op.apply(p)
        return out

    def deltas(self) -> Deltas:
        d: Deltas = {}
        for v in VARS:
            worst = None
            for op in self.ops:
                dv = op.deltas()[v]
                if dv is None:
                    worst = None
                    break
                worst = dv if worst is None else max(worst, dv)
            d[v] = worst if self.ops else 0
        return d

    def render(self) -> str:
        return "(" + " + ".join(op.render() for op in self.ops) + ")"


class Compose(LinOp):
    """Composition; the rightmost operator acts first, as in written math."""

    def __init__(self, ops: Sequence[LinOp]):
        flat: list[LinOp] = []
        for op in ops:
            if isinstance(op, Compose):
                flat.extend(op.ops)
            else:
                flat.append(op)
        self.ops = tuple(flat)

    def apply(self, p: MultiPoly) -> MultiPoly:
        for op in reversed(self.ops):
            p = op.apply(p)
        return p

    def deltas(self) -> Deltas:
        d = _zero_deltas()
        for op in self.ops:
            od = op.deltas()
            for v in VARS:
                if d[v] is None or od[v] is None:
                    d[v] = None
                else:
                    d[v] = d[v] + od[v]
        return d

    def render(self) -> str:
        return "∘".join(op.render() for op in self.ops)


class OpSeries(LinOp):
    """An operator power series h(B) = sum_k h_k B^k.

    Application uses the nilpotency cutoff: if B provably lowers the
    degree of some variable, only finitely many terms act on a given
    polynomial.  Otherwise an explicit ``cutoff`` must be supplied.
    """

    def __init__(self, series: Series, base: LinOp, cutoff: int | None = None):
        self.series = series
        self.base = base
        self.cutoff = cutoff

    def _cutoff_for(self, p: MultiPoly) -> int:
        if self.cutoff is not None:
            return self.cutoff
        if p.is_zero:
            return 0
        best: int | None = None
        for v, dv in self.base.deltas().items():
            if dv is not None and dv <= -1:
                k = p.degree_in(v) // (-dv)
                best = k if best is None else min(best, k)
        if best is None:
            raise CutoffRequired(
                f"base operator {self.base.render()} does not lower any degree; "
                "supply an explicit cutoff"
            )
        return best

    def apply(self, p: MultiPoly) -> MultiPoly:
        k_max = self._cutoff_for(p)
        if k_max > self.series.order:
            raise OrderTooSmall(
                f"operator series of order {self.series.order} applied where "
                f"{k_max} terms are needed"
            )
        out = MultiPoly.zero()
        cur = p
        for k in range(k_max + 1):
            hk = self.series.coeffs[k]
            if hk:
                out = out + cur * hk
            if k < k_max:
                cur = self.base.apply(cur)
        return out

    def deltas(self) -> Deltas:
        base = self.base.deltas()
        d: Deltas = {}
        for v in VARS:
            bv = base[v]
            if bv is None or bv > 0:
                d[v] = None
            else:
                d[v] = 0  # includes the k = 0 identity term
        return d

    def render(self) -> str:
        return f"[{self.series}]({self.base.render()})"


# -- factory helpers -------------------------------------------------------------


def deriv(var: str) -> LinOp:
    return Deriv(var)


def inv_deriv(var: str) -> LinOp:
    return InvDeriv(var)


def mul_var(var: str) -> LinOp:
    return MulVar(var)


def mul_poly(p) -> LinOp:
    return MulPoly(as_poly(p))


def scale(c) -> LinOp:
    return Scale(c)


def identity() -> LinOp:
    return Identity()


def compose(*ops: LinOp) -> LinOp:
    return Compose(ops)


def op_sum(*ops: LinOp) -> LinOp:
    return OpSum(ops)


def op_pow(op: LinOp, k: int) -> LinOp:
    if k < 0:
        raise ValueError("negative operator power")
    if k == 0:
        return Identity()
    return Compose((op,) * k)


# -- verification helpers ---------------------------------------------------------


def monomials_up_to(max_degree: int) -> list[MultiPoly]:
    """All monomials of total degree <= max_degree, in graded-lex order."""
    out = []
    for d in range(max_degree + 1):
        for ex in range(d, -1, -1):
            for ey in range(d - ex, -1, -1):
                ez = d - ex - ey
                out.append(MultiPoly.monomial((ex, ey, ez)))
    return out


class CommutatorReport:
    """Result of an extensional commutator check on monomials."""

    def __init__(self, passed: bool, witness: MultiPoly | None, got: MultiPoly | None):
        self.passed = passed
        self.witness = witness
        self.got = got

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return "PASS"
        return f"FAIL at {self.witness}: commutator gives {self.got}"


def commutator_check(a: LinOp, b: LinOp, test_degree: int) -> CommutatorReport:
    """Check (a∘b - b∘a) = identity on all monomials of degree <= test_degree."""
    for m in monomials_up_to(test_degree):
        got = a.apply(b.apply(m)) - b.apply(a.apply(m))
        if got != m:
            return CommutatorReport(False, m, got)
    return CommutatorReport(True, None, None)


def exp_operator(
    terms: Iterable[tuple[MultiPoly | int | Fraction, LinOp]],
    p: MultiPoly,
    cutoff: int | None = None,
) -> MultiPoly:
    """Apply exp(sum_i c_i op_i) to a polynomial, exactly.

    Without an explicit cutoff every summand must strictly lower the
    degree of one common variable; the exponential then truncates after
    deg_v(p) steps.  With a cutoff the sum is taken through that power
    regardless (used for identities stated "up to degree d").
    """
    ops = [Compose((MulPoly(as_poly(c)), op)) for c, op in terms]
    if cutoff is None:
        if p.is_zero:
            return p
        k_max: int | None = None
        for v in VARS:
            drop = None
            for op in ops:
                dv = op.deltas()[v]
                if dv is None or dv > -1:
                    drop = None
                    break
                drop = -dv if drop is None else min(drop, -dv)
            if drop:
                k = p.degree_in(v) // drop
                k_max = k if k_max is None else min(k_max, k)
        if k_max is None:
            raise NonNilpotentGenerator(
                "no variable is lowered by every generator term; "
                "supply an explicit cutoff"
            )
    else:
        k_max = cutoff
    out = p
    cur = p
    for k in range(1, k_max + 1):
        nxt = MultiPoly.zero()
        for op in ops:
            nxt = nxt + op.apply(cur)
        cur = nxt / k
        if cur.is_zero and cutoff is None:
            break
        out = out + cur
    return out


class OpCheck:
    """A generic two-sided operator identity check."""

    def __init__(self, description: str, lhs: MultiPoly, rhs: MultiPoly):
        self.description = description
        self.lhs = lhs
        self.rhs = rhs
        self.passed = lhs == rhs

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        status = "PASS" if self.passed else f"FAIL: {self.lhs} != {self.rhs}"
        return f"{self.description}: {status}"


def crofton_check(m: int, lam: MultiPoly, f_poly: MultiPoly, label: str = "") -> OpCheck:
    """Check f(y + m*lam*d^(m-1)/dy^(m-1)){1} = exp(lam*d^m/dy^m){f(y)}.

    ``f_poly`` is a polynomial in y; ``lam`` must not involve y.
    """
    if lam.depends_on("y"):
        raise OperatorError("the shift coefficient must be free of y")
    shifted_arg = OpSum(
        (MulVar("y"), Compose((Scale(m), MulPoly(lam), op_pow(Deriv("y"), m - 1))))
    )
    lhs = MultiPoly.zero()
    one = MultiPoly.const(1)
    for e, c in f_poly.terms.items():
        if e[0] or e[2]:
            raise OperatorError("the test polynomial must involve y only")
        lhs = lhs + op_pow(shifted_arg, e[1]).apply(one) * c
    rhs = exp_operator([(lam, op_pow(Deriv("y"), m))], f_poly)
    desc = label or f"shift identity m={m}"
    return OpCheck(desc, lhs, rhs)


def substitute_operators(
    p: MultiPoly, mapping: Mapping[str, "LinOp | MultiPoly | int | Fraction"]
) -> MultiPoly:
    """Substitute variables by polynomials or by operators applied to 1.

    Monomial by monomial, each operator-valued image contributes
    op^e {1}; plain images contribute ordinary powers.  The contributions
    are multiplied together, which is sound exactly when each operator
    acts on variables absent from the other factors (true for every
    substitution recipe used in this package).
    """
    one = MultiPoly.const(1)
    out = MultiPoly.zero()
    for exps, c in p.terms.items():
        term = MultiPoly.const(c)
        for v, e in zip(VARS, exps):
            if not e:
                continue
            image = mapping.get(v)
            if image is None:
                term = term * MultiPoly.var(v) ** e
            elif isinstance(image, LinOp):
                term = term * op_pow(image, e).apply(one)
            else:
                term = term * as_poly(image) ** e
        out = out + term
    return out
