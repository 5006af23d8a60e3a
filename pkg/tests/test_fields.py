from fractions import Fraction

import pytest

from unicubic.errors import (DivisionByZero, FieldMismatch, ParseError,
                             UnsupportedField)
from unicubic.fields import (extension_field, field_arith,
                             field_from_designator, frobenius_sqrt,
                             prime_field, rationals)
from unicubic.rng import SplitMix64

Q = rationals()
F2 = prime_field(2)
F3 = prime_field(3)
F4 = extension_field(2, 2)
F5 = prime_field(5)
F8 = extension_field(2, 3)
F9 = extension_field(3, 2)
F16 = extension_field(2, 4)


def test_rational_arithmetic():
    assert field_arith(Q, Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert field_arith(Q, Fraction(7), Fraction(2), "div") == Fraction(7, 2)


def test_prime_field_arithmetic():
    assert field_arith(F5, 2, 3, "mul") == 1
    assert field_arith(F5, 1, 4, "sub") == 2
    assert F5.inv(3) == 2


def test_extension_field_reduction():
    w = F4.w
    # w*w reduces by w^2 + w + 1
    assert F4.mul(w, w) == F4.add(w, 1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        field_arith(Q, Fraction(1), Fraction(0), "div")
    with pytest.raises(DivisionByZero):
        F5.inv(0)


def test_coerce_mismatch():
    with pytest.raises(FieldMismatch):
        F5.coerce(Fraction(1, 5))
    with pytest.raises(FieldMismatch):
        Q.coerce("nope")


def test_frobenius_sqrt_examples():
    assert frobenius_sqrt(F2, 1) == 1
    # (w+1)^2 = w^2 + 1 = w, so sqrt(w) = w + 1 under w^2 + w + 1
    assert frobenius_sqrt(F4, F4.w) == F4.add(F4.w, 1)
    assert frobenius_sqrt(F4, 0) == 0


def test_frobenius_sqrt_exhaustive():
    for field in (F2, F4, F8, F16):
        for a in field.elements():
            s = frobenius_sqrt(field, a)
            assert field.mul(s, s) == a


def test_frobenius_sqrt_unsupported():
    with pytest.raises(UnsupportedField):
        frobenius_sqrt(Q, Fraction(4))
    with pytest.raises(UnsupportedField):
        frobenius_sqrt(F3, 1)
    with pytest.raises(UnsupportedField):
        frobenius_sqrt(F9, 1)


def test_designators():
    assert field_from_designator("Q") is rationals()
    assert field_from_designator("F2").order == 2
    assert field_from_designator("F4").order == 4
    assert field_from_designator("F9").order == 9
    assert field_from_designator("F16").order == 16
    assert field_from_designator("F101").order == 101
    with pytest.raises(ParseError):
        field_from_designator("F6")
    with pytest.raises(ParseError):
        field_from_designator("R")


def test_extension_requires_irreducible_modulus():
    with pytest.raises(UnsupportedField):
        extension_field(2, 2, (0, 1))  # w^2 + w = w(w+1)
    with pytest.raises(UnsupportedField):
        extension_field(2, 4, (1, 0, 0, 0))  # w^4 + 1 = (w+1)^4


def test_extension_str_roundtrip():
    for field in (F4, F8, F9, F16):
        for a in field.elements():
            assert field.from_str(field.to_str(a)) == a


@pytest.mark.parametrize("field", [Q, F5, F4, F9])
def test_field_axioms_seeded(field):
    rng = SplitMix64(20240817)
    for _ in range(200):
        a, b, c = (field.random(rng) for _ in range(3))
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(
            field.mul(a, b), field.mul(a, c))
        assert field.add(a, field.zero()) == a
        assert field.mul(a, field.one()) == a
        assert field.add(a, field.neg(a)) == field.zero()
        if b:
            assert field.mul(field.div(a, b), b) == a
