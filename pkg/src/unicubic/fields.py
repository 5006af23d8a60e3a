"""Exact coefficient fields: Q, prime fields, and small extension fields.

Scalars are plain Python values so polynomial inner loops stay cheap:

* ``Rationals``            -- :class:`fractions.Fraction`
* ``PrimeField(p)``        -- ``int`` in ``[0, p)``
* ``ExtensionField(p, k)`` -- ``int`` in ``[0, p**k)`` encoding the coefficient
  vector of ``c0 + c1*w + ... + c_{k-1}*w^{k-1}`` in little-endian base ``p``.

The field object carries the arithmetic.  Extension fields use the fixed
documented moduli (F4: w^2+w+1, F8: w^3+w+1, F9: w^2+1, F16: w^4+w+1) so test
literals are reproducible; custom moduli are accepted after an exhaustive
irreducibility check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .errors import DivisionByZero, FieldMismatch, ParseError, UnsupportedField

DEFAULT_MODULI = {
    (2, 2): (1, 1),        # w^2 + w + 1
    (2, 3): (1, 1, 0),     # w^3 + w + 1
    (3, 2): (1, 0),        # w^2 + 1
    (2, 4): (1, 1, 0, 0),  # w^4 + w + 1
}

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = 41
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface; concrete classes fill in the scalar arithmetic."""

    kind: str
    characteristic: int
    order: int | None  # None for infinite fields

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero scalar")
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = self.one()
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def arith(self, a, b, op: str):
        """The four-function scalar contract; ``op`` in add/sub/mul/div."""
        try:
            f = {"add": self.add, "sub": self.sub,
                 "mul": self.mul, "div": self.div}[op]
        except KeyError:
            raise ValueError(f"unknown op {op!r}")
        return f(a, b)

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def elements(self) -> Iterator:
        raise UnsupportedField(f"cannot enumerate elements of {self}")

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, v):
        raise NotImplementedError

    def random(self, rng):
        raise NotImplementedError

    def to_str(self, a) -> str:
        raise NotImplementedError

    def from_str(self, s: str):
        raise NotImplementedError

    def designator(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.designator()


class Rationals(Field):
    kind = "rationals"
    characteristic = 0
    order = None

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise FieldMismatch(f"cannot coerce {v!r} into Q")

    def random(self, rng, bound: int = 10):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def to_str(self, a) -> str:
        return str(a)

    def from_str(self, s: str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational literal {s!r}: {e}")

    def designator(self) -> str:
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise UnsupportedField(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return iter(range(self.p))

    def from_int(self, n: int):
        return n % self.p

    def coerce(self, v):
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise FieldMismatch(f"{v} has no image in F{self.p}")
            return (v.numerator * pow(v.denominator, -1, self.p)) % self.p
        raise FieldMismatch(f"cannot coerce {v!r} into F{self.p}")

    def random(self, rng):
        return rng.randrange(self.p)

    def to_str(self, a) -> str:
        return str(a)

    def from_str(self, s: str):
        try:
            return int(s, 10) % self.p
        except ValueError:
            raise ParseError(f"bad residue literal {s!r} for F{self.p}")

    def designator(self) -> str:
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))


def _poly_mod_mul(a, b, modulus, p):
    """Multiply coefficient tuples mod (modulus, p); modulus is the low part
    of a monic degree-k polynomial, i.e. w^k = -(m0 + m1 w + ...)."""
    k = len(modulus)
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j, mj in enumerate(modulus):
                prod[d - k + j] = (prod[d - k + j] - c * mj) % p
    return tuple(prod[:k])


def _is_irreducible(modulus, p) -> bool:
    """Exhaustive trial division; fine at the supported sizes (p^k <= a few
    thousand)."""
    k = len(modulus)
    full = list(modulus) + [1]
    for deg in range(1, k // 2 + 1):
        for enc in range(p ** deg):
            div = [(enc // p ** i) % p for i in range(deg)] + [1]
            rem = list(full)
            while len(rem) - 1 >= deg:
                lead = rem[-1] % p
                if lead:
                    shift = len(rem) - 1 - deg
                    for i, c in enumerate(div):
                        rem[shift + i] = (rem[shift + i] - lead * c) % p
                while len(rem) > 1 and rem[-1] % p == 0:
                    rem.pop()
                if len(rem) - 1 < deg:
                    break
            if all(c % p == 0 for c in rem):
                return False
    return True


class ExtensionField(Field):
    kind = "extension"

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise UnsupportedField(f"{p} is not prime")
        if k < 2:
            raise UnsupportedField("extension degree must be >= 2")
        if p ** k > 4096:
            raise UnsupportedField(f"F_{p}^{k} larger than supported bound")
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, k))
            if modulus is None:
                raise UnsupportedField(
                    f"no documented modulus for F_{p}^{k}; pass one explicitly")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k:
            raise UnsupportedField("modulus must list the k low coefficients")
        if not _is_irreducible(modulus, p):
            raise UnsupportedField(f"modulus {modulus} is reducible over F{p}")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.characteristic = p
        self.order = p ** k
        q = self.order
        self._mul_table = None
        if q <= 64:
            tbl = []
            for a in range(q):
                va = self._decode(a)
                row = []
                for b in range(q):
                    row.append(self._encode(
                        _poly_mod_mul(va, self._decode(b), modulus, p)))
                tbl.append(row)
            self._mul_table = tbl
        self.w = self._encode(tuple([0, 1] + [0] * (k - 2)))

    def _decode(self, a: int) -> tuple:
        p = self.p
        return tuple((a // p ** i) % p for i in range(self.k))

    def _encode(self, v) -> int:
        p = self.p
        return sum(int(c) % p * p ** i for i, c in enumerate(v))

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._encode(x + y for x, y in zip(self._decode(a), self._decode(b)))

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._encode(x - y for x, y in zip(self._decode(a), self._decode(b)))

    def neg(self, a):
        if self.p == 2:
            return a
        return self._encode(-x for x in self._decode(a))

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._encode(_poly_mod_mul(self._decode(a), self._decode(b),
                                          self.modulus, self.p))

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        # a^(q-2); the group of units has order q-1
        return self.pow(a, self.order - 2)

    def elements(self):
        return iter(range(self.order))

    def from_int(self, n: int):
        return n % self.p  # prime subfield embedding

    def coerce(self, v):
        if isinstance(v, int):
            if 0 <= v < self.order:
                return v
            return v % self.p
        raise FieldMismatch(f"cannot coerce {v!r} into {self.designator()}")

    def random(self, rng):
        return rng.randrange(self.order)

    def to_str(self, a) -> str:
        if a == 0:
            return "0"
        parts = []
        for i in reversed(range(self.k)):
            c = self._decode(a)[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}w" if i == 1 else f"{head}w^{i}")
        return "+".join(parts)

    def from_str(self, s: str):
        s = s.replace(" ", "")
        if not s:
            raise ParseError("empty extension-field literal")
        total = 0
        for term in s.replace("-", "+-").split("+"):
            if not term:
                continue
            neg = term.startswith("-")
            if neg:
                term = term[1:]
            c, e = 1, 0
            if "w" in term:
                head, _, tail = term.partition("w")
                if head:
                    if not head.endswith("*"):
                        raise ParseError(f"bad term {term!r}")
                    c = int(head[:-1])
                e = 1
                if tail:
                    if not tail.startswith("^"):
                        raise ParseError(f"bad term {term!r}")
                    e = int(tail[1:])
            else:
                c = int(term)
            if e >= self.k:
                raise ParseError(f"exponent w^{e} not reduced in {s!r}")
            c = (-c if neg else c) % self.p
            total = self.add(total, self._encode(
                tuple(c if i == e else 0 for i in range(self.k))))
        return total

    def designator(self) -> str:
        return f"F{self.order}"

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.k == self.k and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("F", self.p, self.k, self.modulus))


_FIELD_CACHE: dict = {}


def rationals() -> Rationals:
    return _FIELD_CACHE.setdefault("Q", Rationals())


def prime_field(p: int) -> PrimeField:
    key = ("F", p)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = PrimeField(p)
    return _FIELD_CACHE[key]


def extension_field(p: int, k: int, modulus=None) -> ExtensionField:
    key = ("E", p, k, tuple(modulus) if modulus else None)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = ExtensionField(p, k, modulus)
    return _FIELD_CACHE[key]


def field_from_designator(s: str) -> Field:
    """Resolve ``Q``, ``F2`` ... ``F16``, or ``F<p>`` for prime p."""
    s = s.strip()
    if s == "Q":
        return rationals()
    if s.startswith("F"):
        try:
            q = int(s[1:])
        except ValueError:
            raise ParseError(f"bad field designator {s!r}")
        if is_prime(q):
            return prime_field(q)
        for p in (2, 3, 5, 7):
            k = 0
            n = q
            while n % p == 0:
                n //= p
                k += 1
            if n == 1 and k >= 2:
                try:
                    return extension_field(p, k)
                except UnsupportedField as e:
                    raise ParseError(str(e))
        raise ParseError(f"{s!r}: order is neither prime nor a supported "
                         f"prime power")
    raise ParseError(f"bad field designator {s!r}")


def field_arith(field: Field, a, b, op: str):
    """Exact scalar arithmetic in canonical form (op: add/sub/mul/div)."""
    return field.arith(a, b, op)


def frobenius_sqrt(field: Field, a):
    """The unique square root in a finite field of characteristic 2,
    computed as a^(2^(k-1))."""
    if field.characteristic != 2 or not field.is_finite:
        raise UnsupportedField(
            "square roots via Frobenius need a finite field of characteristic 2")
    if isinstance(field, PrimeField):
        return a % 2
    return field.pow(a, field.order // 2)
