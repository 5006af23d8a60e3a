from fractions import Fraction

import pytest

from unicubic.errors import (PointNotOnHypersurface, SingularPoint,
                             TriplePoint, WrongCharacteristic)
from unicubic.fields import prime_field, rationals
from unicubic.hypersurface import (CubicHypersurface, ProjectivePoint,
                                   classify, decompose_at_point,
                                   inseparable_projection_test,
                                   is_smooth_point, smooth_from_double_point,
                                   tangent_section, triple_point_locus)
from unicubic.parsing import parse_polynomial
from unicubic.poly import PolyRing
from unicubic.rng import SplitMix64

Q = rationals()
F2 = prime_field(2)
F3 = prime_field(3)
F5 = prime_field(5)


def fermat(field=Q, nvars=4):
    text = "+".join(f"x{i}^3" for i in range(nvars))
    return CubicHypersurface(parse_polynomial(text, field))


def cone_p3(field=Q):
    return CubicHypersurface(
        parse_polynomial("x0^3+x1^3+x2^3", field, ["x0", "x1", "x2", "x3"]))


def test_decompose_fermat_smooth():
    X = fermat()
    p = X.point([1, -1, 0, 0])
    pf = decompose_at_point(X, p)
    assert not pf.singular
    assert pf.L == pf.ring.gen(pf.ring.nvars - 1)
    assert not pf.Q.is_zero()
    assert not pf.C.is_zero()


def test_decompose_roundtrip_recovers_form():
    X = fermat()
    p = X.point([1, -1, 0, 0])
    pf = decompose_at_point(X, p)
    # rehomogenize f = L+Q+C with a fresh homogenizer and push through the
    # frame; must recover a scalar multiple of the original form
    amb = X.ring
    f = pf.f()
    hom_parts = []
    for d, part in f.homogeneous_parts().items():
        hom_parts.append((d, part))
    big = PolyRing(Q, ("y0", "y1", "y2", "y3"))
    lin = pf.ambient_linear_forms(
        big, [big.gen(0), big.gen(1), big.gen(2)], big.gen(3))
    # evaluating the original form on the frame columns applied to
    # (y0,y1,y2,1*y3) must reproduce the dehomogenized pointed form at y3=1
    composed = X.form.substitute_poly(lin)
    direct = f.substitute_poly(
        [big.gen(0), big.gen(1), big.gen(2)]).homogeneous_parts()
    # compare by evaluating both at random points with y3 = 1
    rng = SplitMix64(11)
    for _ in range(25):
        pt = [Q.random(rng) for _ in range(3)] + [Fraction(1)]
        lhs = composed.evaluate(pt)
        rhs = f.evaluate(pt[:3])
        assert lhs == rhs


def test_decompose_requires_point_on_x():
    X = fermat()
    with pytest.raises(PointNotOnHypersurface):
        decompose_at_point(X, X.point([1, 1, 1, 1]))


def test_decompose_singular_gives_zero_linear_part():
    X = cone_p3()
    v = X.point([0, 0, 0, 1])
    pf = decompose_at_point(X, v)
    assert pf.singular and pf.L.is_zero()


def test_is_smooth_point_examples():
    X = fermat()
    assert is_smooth_point(X, X.point([1, -1, 0, 0]))
    C = cone_p3()
    assert not is_smooth_point(C, C.point([0, 0, 0, 1]))
    X3 = fermat(F3)
    assert not is_smooth_point(X3, X3.point([1, -1, 0, 0]))


def test_triple_point_locus_cone():
    basis = triple_point_locus(cone_p3())
    assert len(basis) == 1
    assert basis[0] == ProjectivePoint(Q, [0, 0, 0, 1])


def test_triple_point_locus_smooth_empty():
    assert triple_point_locus(fermat()) == []


def test_triple_point_locus_plane():
    X = CubicHypersurface(
        parse_polynomial("x0^3", Q, ["x0", "x1", "x2", "x3"]))
    basis = triple_point_locus(X)
    assert len(basis) == 3  # the plane x0 = 0


def test_triple_point_locus_char3():
    # over F3 the Fermat quartet sums to (x0+x1+x2+x3)^3: a plane of
    # triple points, found by the enumerate-and-span branch
    X = fermat(F3)
    basis = triple_point_locus(X)
    assert len(basis) == 3
    for b in basis:
        assert sum(b.coords) % 3 == 0


def test_translate_invariance_of_locus():
    X = cone_p3()
    basis = triple_point_locus(X)
    v = basis[0]
    ring = X.ring
    bindings = [ring.gen(i) + ring.constant(c)
                for i, c in enumerate(v.coords)]
    g = X.form.substitute_poly(bindings)
    parts = g.homogeneous_parts()
    for d in (0, 1, 2):
        assert parts.get(d, ring.zero()).is_zero()


def test_tangent_section_fermat_eckardt_point():
    # (1:-1:0:0) is an Eckardt point: the tangent section is x2^3 + x3^3,
    # a cone of three lines, so the quadratic part vanishes
    X = fermat()
    sec = tangent_section(X, X.point([1, -1, 0, 0]))
    assert sec.cone_flag and not sec.double_point


def test_tangent_section_fermat_generic_point():
    # taxicab point 1^3 + 12^3 = 9^3 + 10^3 is not an Eckardt point
    X = fermat()
    sec = tangent_section(X, X.point([1, 12, -9, -10]))
    assert sec.double_point
    assert not sec.cone_flag
    assert sec.common_factor_free


def test_tangent_section_triple_flag():
    # f = x3 + x1^3 in the chart x0 = 1: tangent section has q = 0
    X = CubicHypersurface(parse_polynomial("x0^2*x3 + x1^3", Q))
    p = X.point([1, 0, 0, 0])
    sec = tangent_section(X, p)
    assert sec.cone_flag and not sec.double_point


def test_tangent_section_rejects_singular():
    X = cone_p3()
    with pytest.raises(SingularPoint):
        tangent_section(X, X.point([0, 0, 0, 1]))


def test_classify_fermat_q():
    rep = classify(fermat())
    assert not rep.is_cone
    assert rep.triple_point_basis == []
    assert rep.nonnormal_verdict == "unknown"
    assert rep.applicable_case == "smooth_point_pipeline"


def test_classify_cone():
    rep = classify(cone_p3())
    assert rep.is_cone
    assert rep.applicable_case == "cone"


def test_classify_fermat_f2():
    rep = classify(fermat(F2))
    assert not rep.is_cone
    assert rep.point_counts["points"] == 7
    assert rep.smooth_points_found
    assert rep.nonnormal_verdict == "normal"


def test_classify_char3_fermat_all_singular():
    rep = classify(fermat(F3))
    assert rep.all_singular is True
    assert rep.applicable_case in ("cone", "no_smooth_point")


def test_classify_nonnormal_surface():
    # singular exactly along the line x2 = x3 = 0
    X = CubicHypersurface(parse_polynomial("x0*x2^2 + x1*x3^2", F5))
    rep = classify(X)
    assert rep.nonnormal_verdict == "nonnormal"
    assert rep.applicable_case == "nonnormal_linear_projection"


def test_smooth_from_double_point_curve_example():
    # q = x1^2 + x2^2, c = x1^3: nodal plane cubic, double point at origin
    X = CubicHypersurface(
        parse_polynomial("x0*x1^2 + x0*x2^2 + x1^3", Q))
    x = X.point([1, 0, 0])
    pt = smooth_from_double_point(X, x)
    assert X.contains(pt)
    assert any(X.gradient_at(pt))


def test_smooth_from_double_point_exact_example():
    # direction (1, 0): tau = -q/c = -1, affine point (-1, 0)
    X = CubicHypersurface(
        parse_polynomial("x0*x1^2 + x0*x2^2 + x1^3", Q))
    pf = decompose_at_point(X, X.point([1, 0, 0]))
    q, c = pf.Q, pf.C
    assert q.evaluate([1, 0]) == 1
    assert c.evaluate([1, 0]) == 1
    # the residual point for that direction
    amb = pf.to_ambient_scalars([-1, 0])
    pt = ProjectivePoint(Q, amb)
    assert X.contains(pt)
    assert any(X.gradient_at(pt))


def test_smooth_from_double_point_triple_error():
    X = cone_p3()
    with pytest.raises(TriplePoint):
        smooth_from_double_point(X, X.point([0, 0, 0, 1]))


def test_smooth_from_double_point_over_f5():
    X = CubicHypersurface(
        parse_polynomial("x0*x1^2 + x0*x2^2 + x1^3 + x2^3 + x3^3", F5))
    x = X.point([1, 0, 0, 0])
    pt = smooth_from_double_point(X, x)
    assert X.contains(pt) and any(X.gradient_at(pt))


def test_inseparable_projection_examples():
    # x1 occurs only squared: projection from the x1-vertex is inseparable
    X = CubicHypersurface(
        parse_polynomial("x0*x1^2 + x0^3", F2, ["x0", "x1", "x2"]))
    p = X.point([0, 1, 0])
    assert inseparable_projection_test(X, p) is True
    # circulant: x0 appears linearly in x2^2*x0
    Y = CubicHypersurface(
        parse_polynomial("x0^2*x1 + x1^2*x2 + x2^2*x0", F2))
    assert inseparable_projection_test(Y, Y.point([1, 0, 0])) is False
    with pytest.raises(WrongCharacteristic):
        inseparable_projection_test(fermat(), fermat().point([1, -1, 0, 0]))
