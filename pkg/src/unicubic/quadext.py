"""The rank-2 ring B[t]/(cC*t^2 + cQ*t + cL) over a rational-function base.

`t` stays formal: it is one root of the quadratic that cuts the two residual
intersections of the universal line with the hypersurface, and "replace t by
the other root" is the conjugation involution t -> -cQ/cC - t.  Division goes
through the norm, so everything stays exact in every characteristic,
including the inseparable char-2 case cQ = 0 where the two roots coincide
formally but the ring still has rank 2.
"""

from __future__ import annotations

from .errors import InternalInconsistency, NonInvertible, VariableMismatch
from .poly import PolyRing
from .ratfunc import RationalFunction


class QuadExtRing:
    """Carries the modulus coefficients cL, cQ, cC (base rational functions;
    cC must be nonzero)."""

    __slots__ = ("cL", "cQ", "cC", "_t_sq")

    def __init__(self, cL: RationalFunction, cQ: RationalFunction,
                 cC: RationalFunction):
        if not (cL.ring == cQ.ring == cC.ring):
            raise VariableMismatch("modulus coefficients in different rings")
        if cC.is_zero():
            raise NonInvertible("leading modulus coefficient cC is zero")
        self.cL = cL
        self.cQ = cQ
        self.cC = cC
        # t^2 = -(cQ/cC) t - cL/cC
        self._t_sq = (-(cQ / cC), -(cL / cC))

    @property
    def base_ring(self) -> PolyRing:
        return self.cL.ring

    def zero(self) -> "QuadExtElement":
        z = RationalFunction.zero(self.base_ring)
        return QuadExtElement(self, z, z)

    def one(self) -> "QuadExtElement":
        return QuadExtElement(self, RationalFunction.one(self.base_ring),
                              RationalFunction.zero(self.base_ring))

    def t(self) -> "QuadExtElement":
        return QuadExtElement(self, RationalFunction.zero(self.base_ring),
                              RationalFunction.one(self.base_ring))

    def from_base(self, a) -> "QuadExtElement":
        if not isinstance(a, RationalFunction):
            a = RationalFunction.constant(self.base_ring, a)
        return QuadExtElement(self, a, RationalFunction.zero(self.base_ring))

    def element(self, a: RationalFunction, b: RationalFunction):
        return QuadExtElement(self, a, b)

    def __eq__(self, other):
        return (isinstance(other, QuadExtRing) and self.cL == other.cL
                and self.cQ == other.cQ and self.cC == other.cC)

    def __repr__(self):
        return (f"QuadExtRing(t^2*({self.cC}) + t*({self.cQ}) + ({self.cL}) "
                f"= 0 over {self.base_ring})")


class QuadExtElement:
    """a + b*t with reduced rational-function components."""

    __slots__ = ("ring", "a", "b")

    def __init__(self, ring: QuadExtRing, a: RationalFunction,
                 b: RationalFunction):
        if a.ring != ring.base_ring or b.ring != ring.base_ring:
            raise VariableMismatch("components outside the base ring")
        self.ring = ring
        self.a = a
        self.b = b

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_base(self) -> bool:
        """Exact base-field membership: zero t-component."""
        return self.b.is_zero()

    def _check(self, other):
        if not isinstance(other, QuadExtElement) or other.ring != self.ring:
            raise VariableMismatch("operands from different quadratic rings")

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            other = self.ring.from_base(other)
        self._check(other)
        return QuadExtElement(self.ring, self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            other = self.ring.from_base(other)
        self._check(other)
        return QuadExtElement(self.ring, self.a - other.a, self.b - other.b)

    def __neg__(self):
        return QuadExtElement(self.ring, -self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return QuadExtElement(self.ring, self.a * other, self.b * other)
        self._check(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        const = a * c
        lin = a * d + b * c
        if bd:
            s, r = self.ring._t_sq  # t^2 = s*t + r
            const = const + bd * r
            lin = lin + bd * s
        return QuadExtElement(self.ring, const, lin)

    def conjugate(self) -> "QuadExtElement":
        """t -> -cQ/cC - t, i.e. swap in the other root of the modulus."""
        s, _ = self.ring._t_sq  # s = -(cQ/cC) = t1 + t2
        return QuadExtElement(self.ring, self.a + self.b * s, -self.b)

    def norm(self) -> RationalFunction:
        """x * conjugate(x), certified to land in the base field."""
        prod = self * self.conjugate()
        if not prod.b.is_zero():
            raise InternalInconsistency(
                "norm acquired a nonzero t-component", element=str(self))
        return prod.a

    def inverse(self) -> "QuadExtElement":
        n = self.norm()
        if n.is_zero():
            raise NonInvertible("element of norm zero",
                                element=str(self))
        conj = self.conjugate()
        inv = RationalFunction(n.den, n.num)
        return QuadExtElement(self.ring, conj.a * inv, conj.b * inv)

    def __truediv__(self, other):
        if isinstance(other, RationalFunction):
            other = self.ring.from_base(other)
        self._check(other)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            other = self.ring.from_base(other)
        if not isinstance(other, QuadExtElement):
            return NotImplemented
        return (self.ring == other.ring and self.a == other.a
                and self.b == other.b)

    def __str__(self):
        return f"({self.a}) + ({self.b})*t"

    def __repr__(self):
        return f"QuadExtElement({self})"


def ext_arith(x: QuadExtElement, y: QuadExtElement, op: str) -> QuadExtElement:
    """Spec surface for the four ring operations."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")
