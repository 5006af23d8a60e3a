"""Sparse exact multivariate polynomials.

A polynomial is a map from exponent tuples to nonzero scalars, tied to a
:class:`PolyRing` (field + ordered variable names).  The monomial order is
graded lexicographic in the declared variable order; it fixes printing,
leading terms, and every canonical form downstream.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd as int_gcd

from .errors import VariableMismatch
from .fields import Field, Rationals


class PolyRing:
    """Polynomial ring k[x_1, ..., x_m] with a fixed variable order."""

    __slots__ = ("field", "names", "_zero_exp", "__weakref__")

    def __init__(self, field: Field, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise VariableMismatch(f"duplicate variable names in {names}")
        self.field = field
        self.names = names
        self._zero_exp = (0,) * len(names)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.names == other.names)

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field.designator()}[{','.join(self.names)}]"

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {self._zero_exp: self.field.one()})

    def constant(self, c) -> "Poly":
        c = self.field.coerce(c)
        return Poly(self, {self._zero_exp: c} if c else {})

    def variable(self, name: str) -> "Poly":
        try:
            i = self.names.index(name)
        except ValueError:
            raise VariableMismatch(f"{name!r} is not a variable of {self}")
        return self.gen(i)

    def gen(self, i: int) -> "Poly":
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one()})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps, c=1) -> "Poly":
        c = self.field.coerce(c)
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars:
            raise VariableMismatch("exponent vector has wrong length")
        return Poly(self, {exps: c} if c else {})

    def from_dict(self, d) -> "Poly":
        terms = {}
        f = self.field
        for exps, c in d.items():
            c = f.coerce(c)
            if not c:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise VariableMismatch("exponent vector has wrong length")
            terms[exps] = f.add(terms[exps], c) if exps in terms else c
        return Poly(self, {e: c for e, c in terms.items() if c})


def _grlex_key(e):
    return (sum(e), e)


class Poly:
    """Immutable sparse polynomial.  The terms dict is owned and never
    mutated after construction."""

    __slots__ = ("ring", "terms", "_hash", "_deg")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None
        self._deg = None

    # -- basic structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1
                                  and self.ring._zero_exp in self.terms)

    def constant_value(self):
        """The scalar value of a constant polynomial."""
        if not self.terms:
            return self.ring.field.zero()
        return self.terms[self.ring._zero_exp]

    def total_degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        if self._deg is None:
            self._deg = max((sum(e) for e in self.terms), default=-1)
        return self._deg

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def variables_used(self):
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return [i for i, u in enumerate(used) if u]

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.ring, {e: c for e, c in self.terms.items()
                                if sum(e) == d})

    def homogeneous_parts(self) -> dict:
        out: dict = {}
        for e, c in self.terms.items():
            out.setdefault(sum(e), {})[e] = c
        return {d: Poly(self.ring, t) for d, t in sorted(out.items())}

    def coefficient_of(self, i: int, d: int) -> "Poly":
        """Coefficient of x_i^d, as a polynomial with the x_i slot zeroed."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == d:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return Poly(self.ring, out)

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise VariableMismatch(
                f"operands live in {self.ring} and {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        fadd = self.ring.field.add
        big, small = self.terms, other.terms
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for e, c in small.items():
            cur = out.get(e)
            if cur is None:
                out[e] = c
            else:
                s = fadd(cur, c)
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly(self.ring, out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        f = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            if cur is None:
                out[e] = f.neg(c)
            else:
                s = f.sub(cur, c)
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly(self.ring, out)

    def __neg__(self):
        fneg = self.ring.field.neg
        return Poly(self.ring, {e: fneg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly(self.ring, {})
        if len(a) > len(b):
            a, b = b, a
        f = self.ring.field
        fadd, fmul = f.add, f.mul
        out: dict = {}
        if len(a) == 1:
            (e1, c1), = a.items()
            if e1 == self.ring._zero_exp:
                for e2, c2 in b.items():
                    out[e2] = fmul(c1, c2)
            else:
                for e2, c2 in b.items():
                    out[tuple(map(int.__add__, e1, e2))] = fmul(c1, c2)
            return Poly(self.ring, out)
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(int.__add__, e1, e2))
                c = fmul(c1, c2)
                cur = out.get(e)
                if cur is None:
                    out[e] = c
                else:
                    s = fadd(cur, c)
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return Poly(self.ring, out)

    def scale(self, c) -> "Poly":
        f = self.ring.field
        c = f.coerce(c)
        if not c:
            return Poly(self.ring, {})
        fmul = f.mul
        return Poly(self.ring, {e: fmul(v, c) for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        r = self.ring.one()
        base = self
        while n:
            if n & 1:
                r = r * base
            n >>= 1
            if n:
                base = base * base
        return r

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and evaluation ------------------------------------------------

    def partial_derivative(self, var) -> "Poly":
        """Formal partial derivative; exponents act as coefficients so
        characteristic-p annihilation comes out automatically."""
        i = var if isinstance(var, int) else self.ring.names.index(var)
        f = self.ring.field
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if not k:
                continue
            c2 = f.mul(c, f.from_int(k))
            if not c2:
                continue
            e2 = list(e)
            e2[i] = k - 1
            out[tuple(e2)] = c2
        return Poly(self.ring, out)

    def gradient(self):
        return [self.partial_derivative(i) for i in range(self.ring.nvars)]

    def evaluate(self, values):
        """Full evaluation at a scalar tuple."""
        f = self.ring.field
        if len(values) != self.ring.nvars:
            raise VariableMismatch("wrong number of values")
        values = [f.coerce(v) for v in values]
        acc = f.zero()
        pows = [{0: f.one()} for _ in values]
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = pows[i]
                    if k not in cache:
                        cache[k] = f.pow(values[i], k)
                    term = f.mul(term, cache[k])
            acc = f.add(acc, term)
        return acc

    def eval_partial(self, assign: dict) -> "Poly":
        """Evaluate a subset of variables (index -> scalar); stays in the ring."""
        f = self.ring.field
        assign = {i: f.coerce(v) for i, v in assign.items()}
        out: dict = {}
        fadd, fmul = f.add, f.mul
        pows = {i: {0: f.one()} for i in assign}
        for e, c in self.terms.items():
            term = c
            e2 = list(e)
            for i, v in assign.items():
                k = e[i]
                if k:
                    cache = pows[i]
                    if k not in cache:
                        cache[k] = f.pow(v, k)
                    term = fmul(term, cache[k])
                    e2[i] = 0
            if not term:
                continue
            key = tuple(e2)
            cur = out.get(key)
            if cur is None:
                out[key] = term
            else:
                s = fadd(cur, term)
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Poly(self.ring, out)

    def substitute_poly(self, bindings) -> "Poly":
        """Compose with polynomials: bindings is a list, one target-ring Poly
        per variable of self."""
        if len(bindings) != self.ring.nvars:
            raise VariableMismatch("need one binding per variable")
        target = bindings[0].ring if bindings else self.ring
        for b in bindings:
            if b.ring != target:
                raise VariableMismatch("bindings live in different rings")
        if target.field != self.ring.field:
            raise VariableMismatch("bindings over a different field")
        acc = target.zero()
        pows = [{} for _ in bindings]
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    cache = pows[i]
                    if k not in cache:
                        cache[k] = bindings[i] ** k
                    term = term * cache[k]
            acc = acc + term
        return acc

    def embed(self, target: PolyRing) -> "Poly":
        """Inject into a ring containing the same-named variables."""
        pos = []
        for n in self.ring.names:
            try:
                pos.append(target.names.index(n))
            except ValueError:
                raise VariableMismatch(f"{n!r} missing from {target}")
        out = {}
        zero = [0] * target.nvars
        for e, c in self.terms.items():
            e2 = zero[:]
            for i, k in enumerate(e):
                e2[pos[i]] = k
            out[tuple(e2)] = c
        return Poly(target, out)

    def map_coefficients(self, target_field: Field, fn) -> "Poly":
        ring = PolyRing(target_field, self.ring.names)
        out = {}
        for e, c in self.terms.items():
            c2 = fn(c)
            if c2:
                out[e] = c2
        return Poly(ring, out)

    # -- normal forms ------------------------------------------------------------

    def content_and_primitive(self):
        """(content scalar, primitive poly).

        Over Q the primitive part has coprime integer coefficients with a
        positive graded-lex leading coefficient; over finite fields it is
        monic.  content * primitive == self exactly.
        """
        f = self.ring.field
        if not self.terms:
            return f.one(), self
        if isinstance(f, Rationals):
            num = 0
            den = 1
            for c in self.terms.values():
                num = int_gcd(num, c.numerator)
                den = den * c.denominator // int_gcd(den, c.denominator)
            content = Fraction(num, den)
            _, lead = self.leading()
            if lead < 0:
                content = -content
            inv = 1 / content
            return content, Poly(self.ring,
                                 {e: c * inv for e, c in self.terms.items()})
        _, lead = self.leading()
        if lead == f.one():
            return lead, self
        inv = f.inv(lead)
        return lead, Poly(self.ring,
                          {e: f.mul(c, inv) for e, c in self.terms.items()})

    def divexact(self, g: "Poly") -> "Poly":
        """Exact division; raises ValueError when g does not divide self."""
        self._check(g)
        if g.is_zero():
            raise ValueError("division by zero polynomial")
        if g.is_constant():
            return self.scale(self.ring.field.inv(g.constant_value()))
        if not self.terms:
            return self
        f = self.ring.field
        eg, cg = g.leading()
        cg_inv = f.inv(cg)
        rem = dict(self.terms)
        quot: dict = {}
        heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
        heapq.heapify(heap)
        gitems = list(g.terms.items())
        fadd, fmul = f.add, f.mul
        while heap:
            dneg, eneg = heapq.heappop(heap)
            e = tuple(-x for x in eneg)
            c = rem.get(e)
            if not c:
                continue
            qe = tuple(map(int.__sub__, e, eg))
            if any(x < 0 for x in qe):
                raise ValueError("not divisible")
            qc = fmul(c, cg_inv)
            quot[qe] = qc
            for e2, c2 in gitems:
                key = tuple(map(int.__add__, qe, e2))
                sub = fmul(qc, c2)
                cur = rem.get(key)
                if cur is None:
                    rem[key] = f.neg(sub)
                    heapq.heappush(heap, (-sum(key), tuple(-x for x in key)))
                else:
                    s = f.sub(cur, sub)
                    if s:
                        rem[key] = s
                    else:
                        del rem[key]
        if any(rem.values()):
            raise ValueError("not divisible")
        return Poly(self.ring, quot)

    def monomial_content(self):
        """Componentwise min exponent vector over all terms."""
        mins = None
        for e in self.terms:
            if mins is None:
                mins = list(e)
            else:
                mins = [min(a, b) for a, b in zip(mins, e)]
            if not any(mins):
                break
        return tuple(mins) if mins else self.ring._zero_exp

    def shift_down(self, exps) -> "Poly":
        """Divide by the monomial with the given exponent vector."""
        if not any(exps):
            return self
        return Poly(self.ring, {tuple(map(int.__sub__, e, exps)): c
                                for e, c in self.terms.items()})

    # -- formatting ---------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]),
                      reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.ring.field
        names = self.ring.names
        chunks = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}"
                for n, k in zip(names, e) if k)
            cs = f.to_str(c)
            if mono:
                part = mono if cs == "1" else (f"-{mono}" if cs == "-1"
                                               else f"{cs}*{mono}")
            else:
                part = cs
            if chunks and not part.startswith("-"):
                chunks.append("+" + part)
            else:
                chunks.append(part)
        return "".join(chunks)

    def __repr__(self):
        return f"Poly({self})"


def poly_arith(f: Poly, g: Poly, op: str) -> Poly:
    """Spec surface for +, -, *; precondition: shared ring."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")
