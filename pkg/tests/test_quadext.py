import pytest

from unicubic.errors import NonInvertible
from unicubic.fields import prime_field, rationals
from unicubic.poly import PolyRing
from unicubic.quadext import QuadExtRing, ext_arith
from unicubic.ratfunc import RationalFunction
from unicubic.rng import SplitMix64

Q = rationals()


def make_ring(field=Q):
    """cL = 1, cQ = u1, cC = u1^2 + u2 + 1: a generic-feeling modulus."""
    base = PolyRing(field, ("u1", "u2"))
    u1, u2 = base.gens()
    cL = RationalFunction.one(base)
    cQ = RationalFunction.from_poly(u1)
    cC = RationalFunction.from_poly(u1 * u1 + u2 + base.one())
    return QuadExtRing(cL, cQ, cC)


def test_t_squared_reduction():
    R = make_ring()
    t = R.t()
    tt = t * t
    assert tt.a == -(R.cL / R.cC)
    assert tt.b == -(R.cQ / R.cC)


def test_base_embedding_product():
    R = make_ring()
    a = R.from_base(RationalFunction.constant(R.base_ring, 3))
    c = R.from_base(RationalFunction.constant(R.base_ring, 5))
    prod = ext_arith(a, c, "mul")
    assert prod.is_base()
    assert prod.a == RationalFunction.constant(R.base_ring, 15)


def test_vieta_product_and_sum():
    R = make_ring()
    t = R.t()
    assert (t * t.conjugate()).a == R.cL / R.cC
    assert (t.conjugate() + t).a == -(R.cQ / R.cC)
    assert (t.conjugate() + t).is_base()


def test_conjugate_involution_and_base_fix():
    R = make_ring()
    t = R.t()
    x = R.from_base(RationalFunction.from_poly(R.base_ring.gen(1))) + t * \
        RationalFunction.constant(R.base_ring, 2)
    assert x.conjugate().conjugate() == x
    b = R.from_base(RationalFunction.from_poly(R.base_ring.gen(0)))
    assert b.conjugate() == b


def test_norm_examples():
    R = make_ring()
    t = R.t()
    assert t.norm() == R.cL / R.cC
    assert R.one().norm() == RationalFunction.one(R.base_ring)
    # norm(a + b t) = a^2 - ab cQ/cC + b^2 cL/cC, derived by expanding
    # (a + b t1)(a + b t2) with Vieta
    base = R.base_ring
    a = RationalFunction.from_poly(base.gen(0))
    b = RationalFunction.constant(base, 2)
    x = R.element(a, b)
    expected = a * a - a * b * (R.cQ / R.cC) + b * b * (R.cL / R.cC)
    assert x.norm() == expected


def test_modulus_vanishes():
    R = make_ring()
    t = R.t()
    val = t * t * R.cC + t * R.cQ + R.from_base(R.cL)
    assert val.is_zero()


def test_inverse_roundtrip():
    R = make_ring()
    t = R.t()
    x = t + R.one()
    assert (x * ext_arith(R.one(), x, "div")) == R.one()


def test_non_invertible():
    base = PolyRing(Q, ("u",))
    u = base.gen(0)
    one = RationalFunction.one(base)
    # modulus t^2 - u^2: element (u + t) has conjugate (-u... ) wait:
    # cQ = 0, cL = -u^2, cC = 1: t = "sqrt(u^2)" formally; u + t has norm
    # u^2 - u^2 = 0.
    R = QuadExtRing(RationalFunction(-(u * u), base.one()),
                    RationalFunction.zero(base), one)
    x = R.from_base(RationalFunction.from_poly(u)) + R.t()
    with pytest.raises(NonInvertible):
        x.inverse()


def test_conjugation_is_ring_automorphism_seeded():
    rng = SplitMix64(20260808)
    R = make_ring()
    base = R.base_ring

    def rand_rf():
        d = {}
        for _ in range(3):
            e = (rng.randrange(3), rng.randrange(2))
            d[e] = Q.random(rng)
        p = base.from_dict(d)
        return RationalFunction.from_poly(p)

    for _ in range(15):
        x = R.element(rand_rf(), rand_rf())
        y = R.element(rand_rf(), rand_rf())
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()


def test_char2_inseparable_modulus_still_rank_two():
    F2 = prime_field(2)
    base = PolyRing(F2, ("u",))
    u = base.gen(0)
    cL = RationalFunction.one(base)
    cQ = RationalFunction.zero(base)  # inseparable: t1 = t2 formally
    cC = RationalFunction.from_poly(u)
    R = QuadExtRing(cL, cQ, cC)
    t = R.t()
    assert t.conjugate() == t  # -cQ/cC - t = t in char 2
    assert t.norm() == cL / cC
    assert not t.is_base()
