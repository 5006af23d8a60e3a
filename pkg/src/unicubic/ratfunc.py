"""Canonical fractions of multivariate polynomials.

A RationalFunction keeps ``num/den`` with den nonzero and the graded-lex
leading coefficient of den equal to 1.  Construction reduces via
:func:`unicubic.gcd.poly_gcd`; since that routine may give up on oversized
inputs, a stored fraction is allowed to be non-minimal, and equality therefore
always cross-multiplies.

The add/mul paths use the classical content tricks (gcd of the denominators
only, cross-gcds for products) so that reduced inputs stay reduced without
full-size gcd calls.
"""

from __future__ import annotations

from .errors import (DenominatorVanishesIdentically, VariableMismatch,
                     ZeroDenominator)
from .gcd import poly_gcd
from .poly import Poly, PolyRing


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, reduce: bool = True):
        if den is None:
            den = num.ring.one()
        if num.ring != den.ring:
            raise VariableMismatch("numerator and denominator rings differ")
        if den.is_zero():
            raise ZeroDenominator("denominator is the zero polynomial")
        if num.is_zero():
            num, den = num, num.ring.one()
        elif reduce:
            num, den = _reduce_pair(num, den)
        else:
            num, den = _normalize_pair(num, den)
        self.num = num
        self.den = den

    # -- constructors -----------------------------------------------------------

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFunction":
        return cls(p, p.ring.one(), reduce=False)

    @classmethod
    def constant(cls, ring: PolyRing, c) -> "RationalFunction":
        return cls(ring.constant(c), ring.one(), reduce=False)

    @classmethod
    def zero(cls, ring: PolyRing) -> "RationalFunction":
        return cls(ring.zero(), ring.one(), reduce=False)

    @classmethod
    def one(cls, ring: PolyRing) -> "RationalFunction":
        return cls(ring.one(), ring.one(), reduce=False)

    # -- structure ---------------------------------------------------------------

    @property
    def ring(self) -> PolyRing:
        return self.num.ring

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        f = self.ring.field
        return f.div(self.num.constant_value(), self.den.constant_value())

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = RationalFunction.from_poly(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable (fractions may be "
                        "stored non-minimal); compare with ==")

    # -- arithmetic ----------------------------------------------------------------

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction.from_poly(other)
        return RationalFunction.constant(self.ring, other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_constant() and d.is_constant():
            return RationalFunction(a + c, b, reduce=False)
        if b.is_constant() or d.is_constant():
            # gcd(b, d) is trivially constant; reduced inputs stay reduced
            return RationalFunction(a * d + c * b, b * d, reduce=False)
        if b == d:
            return RationalFunction(a + c, b)
        g = poly_gcd(b, d)
        if g.is_constant():
            return RationalFunction(a * d + c * b, b * d, reduce=False)
        b1 = b.divexact(g)
        d1 = d.divexact(g)
        t = a * d1 + c * b1
        g2 = poly_gcd(t, g)
        if g2.is_constant():
            return RationalFunction(t, b1 * d, reduce=False)
        return RationalFunction(t.divexact(g2), b1 * d.divexact(g2),
                                reduce=False)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self.__add__(self._coerce(other).__neg__())

    def __rsub__(self, other):
        return self.__neg__().__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero(self.ring)
        a, b, c, d = self.num, self.den, other.num, other.den
        if other.is_constant():
            return RationalFunction(a.scale(other.constant_value()), b,
                                    reduce=False)
        if self.is_constant():
            return RationalFunction(c.scale(self.constant_value()), d,
                                    reduce=False)
        b_const = b.is_constant()
        d_const = d.is_constant()
        if b_const and d_const:
            return RationalFunction(a * c, b * d, reduce=False)
        if not d_const:
            g1 = poly_gcd(a, d)
            if not g1.is_constant():
                a = a.divexact(g1)
                d = d.divexact(g1)
        if not b_const:
            g2 = poly_gcd(c, b)
            if not g2.is_constant():
                c = c.divexact(g2)
                b = b.divexact(g2)
        return RationalFunction(a * c, b * d, reduce=False)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDenominator("division by the zero rational function")
        return self.__mul__(RationalFunction(other.den, other.num,
                                             reduce=False))

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero():
                raise ZeroDenominator("negative power of zero")
            return RationalFunction(self.den ** -n, self.num ** -n,
                                    reduce=False)
        return RationalFunction(self.num ** n, self.den ** n, reduce=False)

    def scale_poly(self, p: Poly) -> "RationalFunction":
        return self.__mul__(RationalFunction.from_poly(p))

    # -- calculus -------------------------------------------------------------------

    def partial_derivative(self, var) -> "RationalFunction":
        dn = self.num.partial_derivative(var)
        if self.den.is_constant():
            return RationalFunction(dn, self.den, reduce=False)
        dd = self.den.partial_derivative(var)
        return RationalFunction(dn * self.den - self.num * dd,
                                self.den * self.den)

    # -- evaluation -------------------------------------------------------------------

    def evaluate(self, values):
        f = self.ring.field
        d = self.den.evaluate(values)
        if not d:
            raise ZeroDenominator("denominator vanishes at the sample")
        return f.div(self.num.evaluate(values), d)

    def substitute(self, bindings) -> "RationalFunction":
        """Compose with rational functions (one binding per ring variable)."""
        if len(bindings) != self.ring.nvars:
            raise VariableMismatch("need one binding per variable")
        bindings = [b if isinstance(b, RationalFunction)
                    else RationalFunction.from_poly(b) for b in bindings]
        target = bindings[0].ring
        num = _compose(self.num, bindings, target)
        if self.den.is_constant():
            den = RationalFunction.constant(
                target, self.ring.field.inv(self.den.constant_value()))
            return num * den
        den = _compose(self.den, bindings, target)
        if den.is_zero():
            raise DenominatorVanishesIdentically(
                "composed denominator is the zero polynomial")
        return num / den

    def reduced(self) -> "RationalFunction":
        """Force a reduction pass (used before serialization)."""
        return RationalFunction(self.num, self.den, reduce=True)

    def __str__(self):
        if self.den == self.ring.one():
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalFunction({self})"


def _normalize_pair(num: Poly, den: Poly):
    """Make the denominator's graded-lex leading coefficient 1."""
    field = num.ring.field
    _, lead = den.leading()
    if lead != field.one():
        inv = field.inv(lead)
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def _reduce_pair(num: Poly, den: Poly):
    if den.is_constant():
        return _normalize_pair(num, den)
    g = poly_gcd(num, den)
    if not g.is_constant():
        num = num.divexact(g)
        den = den.divexact(g)
    return _normalize_pair(num, den)


def _compose(p: Poly, bindings, target: PolyRing) -> RationalFunction:
    for b in bindings:
        if b.ring != target:
            raise VariableMismatch("bindings live in different rings")
    acc = RationalFunction.zero(target)
    pows: list[dict] = [{} for _ in bindings]
    for e, c in p.terms.items():
        term = RationalFunction.constant(target, c)
        for i, k in enumerate(e):
            if k:
                cache = pows[i]
                if k not in cache:
                    cache[k] = bindings[i] ** k
                term = term * cache[k]
        acc = acc + term
    return acc


def reduce_fraction(num: Poly, den: Poly) -> RationalFunction:
    """Spec surface: canonical reduced fraction with monic denominator."""
    return RationalFunction(num, den, reduce=True)


def substitute(f: Poly, bindings: dict) -> RationalFunction:
    """Spec surface: compose a polynomial with rational functions given as a
    name -> RationalFunction map; every variable must be bound."""
    missing = [n for n in f.ring.names if n not in bindings]
    if missing:
        raise VariableMismatch(f"unbound variables: {missing}")
    ordered = [bindings[n] for n in f.ring.names]
    rf = RationalFunction.from_poly(f)
    return rf.substitute(ordered)
