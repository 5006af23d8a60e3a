"""Cubic hypersurface model: pointed decompositions, smoothness, triple
points, tangent sections, and the classification driving which construction
applies.

Conventions.  The ambient ring has n+2 homogeneous coordinates; a pointed
decomposition moves the chosen point to the affine origin via an invertible
frame matrix M, so that ambient coordinates of an affine point x are
M @ (x_1, ..., x_{n+1}, 1).  At a smooth point the linear part is normalized
to exactly the last affine variable.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg
from .errors import (BudgetExceeded, InternalInconsistency,
                     PointNotOnHypersurface, QuadraticVanishesEverywhere,
                     SearchExhausted, SingularPoint, TriplePoint,
                     UnicubicError, WrongCharacteristic)
from .fields import Field
from .gcd import poly_gcd
from .poly import Poly, PolyRing
from .rng import SplitMix64


class ProjectivePoint:
    """Canonical representative: first nonzero coordinate scaled to 1."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords):
        coords = [field.coerce(c) for c in coords]
        pivot = None
        for i, c in enumerate(coords):
            if c:
                pivot = i
                break
        if pivot is None:
            raise ValueError("projective point needs a nonzero coordinate")
        inv = field.inv(coords[pivot])
        self.field = field
        self.coords = tuple(field.mul(c, inv) for c in coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        return (isinstance(other, ProjectivePoint)
                and self.field == other.field and self.coords == other.coords)

    def __hash__(self):
        return hash((self.field, self.coords))

    def pivot(self) -> int:
        for i, c in enumerate(self.coords):
            if c:
                return i
        raise InternalInconsistency("zero projective point")

    def __str__(self):
        return "(" + ":".join(self.field.to_str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjectivePoint{self}"


class CubicHypersurface:
    """Zero set in P^{n+1} of a nonzero homogeneous cubic form."""

    def __init__(self, form: Poly):
        if form.is_zero():
            raise ValueError("the zero form does not define a hypersurface")
        if not form.is_homogeneous() or form.total_degree() != 3:
            raise ValueError("the form must be homogeneous of degree 3")
        if form.ring.nvars < 3:
            raise ValueError("need at least 3 homogeneous coordinates")
        self.form = form
        self.ring = form.ring
        self.field = form.ring.field

    @property
    def n(self) -> int:
        """Dimension of the hypersurface."""
        return self.ring.nvars - 2

    def evaluate(self, point) -> object:
        coords = point.coords if isinstance(point, ProjectivePoint) else point
        return self.form.evaluate(list(coords))

    def contains(self, point) -> bool:
        return not self.evaluate(point)

    def gradient_at(self, point):
        coords = list(point.coords if isinstance(point, ProjectivePoint)
                      else point)
        return [self.form.partial_derivative(i).evaluate(coords)
                for i in range(self.ring.nvars)]

    def point(self, coords) -> ProjectivePoint:
        return ProjectivePoint(self.field, coords)

    def __repr__(self):
        return f"CubicHypersurface({self.form} = 0 over {self.field.designator()})"


@dataclass
class PointedForm:
    """f = L + Q + C in affine coordinates with the base point at the origin."""

    hypersurface: CubicHypersurface
    point: ProjectivePoint
    ring: PolyRing               # affine ring x1..x_{n+1}
    L: Poly
    Q: Poly
    C: Poly
    frame: list                  # (n+2)x(n+2) matrix over the field
    singular: bool

    def f(self) -> Poly:
        return self.L + self.Q + self.C

    def to_ambient_scalars(self, affine, homogenizer=None):
        """Ambient homogeneous coordinates of an affine (or infinite) point."""
        fld = self.hypersurface.field
        h = fld.one() if homogenizer is None else fld.coerce(homogenizer)
        vec = [fld.coerce(v) for v in affine] + [h]
        return linalg.mat_vec(fld, self.frame, vec)

    def ambient_linear_forms(self, target_ring: PolyRing, affine_polys,
                             homogenizer: Poly):
        """Push symbolic affine coordinates through the frame."""
        fld = self.hypersurface.field
        out = []
        for row in self.frame:
            acc = target_ring.zero()
            for c, p in zip(row, list(affine_polys) + [homogenizer]):
                if c:
                    acc = acc + p.scale(c)
            out.append(acc)
        return out


def decompose_at_point(X: CubicHypersurface, p: ProjectivePoint) -> PointedForm:
    """Move p to the affine origin; normalize L to the last variable when p
    is smooth.  Singular points are flagged, not rejected."""
    if not X.contains(p):
        raise PointNotOnHypersurface(f"{p} does not satisfy the form")
    field = X.field
    m = X.ring.nvars
    j = p.pivot()
    cols = [i for i in range(m) if i != j]
    M = [[field.zero()] * m for _ in range(m)]
    for slot, i in enumerate(cols):
        M[i][slot] = field.one()
    for i in range(m):
        M[i][m - 1] = p.coords[i]

    aff = PolyRing(field, tuple(f"x{i}" for i in range(1, m)))
    bindings = []
    for i in range(m):
        acc = aff.zero()
        for k in range(m - 1):
            if M[i][k]:
                acc = acc + aff.gen(k).scale(M[i][k])
        if M[i][m - 1]:
            acc = acc + aff.constant(M[i][m - 1])
        bindings.append(acc)
    f = X.form.substitute_poly(bindings)

    parts = f.homogeneous_parts()
    if 0 in parts and not parts[0].is_zero():
        raise InternalInconsistency("translate kept a constant term")
    L = parts.get(1, aff.zero())
    Q = parts.get(2, aff.zero())
    C = parts.get(3, aff.zero())
    if L.is_zero():
        return PointedForm(X, p, aff, L, Q, C, M, singular=True)

    # normalize the linear part to exactly x_{n+1}
    nv = m - 1
    a = [field.zero()] * nv
    for e, c in L.terms.items():
        a[[i for i, k in enumerate(e) if k][0]] = c
    m0 = max(i for i, c in enumerate(a) if c)
    others = [i for i in range(nv) if i != m0]
    slot = {i: s for s, i in enumerate(others)}
    inv_am = field.inv(a[m0])
    bindings2 = []
    for i in range(nv):
        if i != m0:
            bindings2.append(aff.gen(slot[i]))
        else:
            acc = aff.gen(nv - 1).scale(inv_am)
            for k in others:
                if a[k]:
                    acc = acc - aff.gen(slot[k]).scale(field.mul(a[k], inv_am))
            bindings2.append(acc)
    f2 = f.substitute_poly(bindings2)
    parts2 = f2.homogeneous_parts()
    L2 = parts2.get(1, aff.zero())
    if L2 != aff.gen(nv - 1):
        raise InternalInconsistency("linear part normalization failed")

    A = [[field.zero()] * nv for _ in range(nv)]
    for i in others:
        A[i][slot[i]] = field.one()
    A[m0][nv - 1] = inv_am
    for k in others:
        if a[k]:
            A[m0][slot[k]] = field.neg(field.mul(a[k], inv_am))
    blk = [[A[i][k] if i < nv and k < nv else
            (field.one() if i == k else field.zero())
            for k in range(m)] for i in range(m)]
    M2 = linalg.mat_mul(field, M, blk)
    return PointedForm(X, p, aff, L2, parts2.get(2, aff.zero()),
                       parts2.get(3, aff.zero()), M2, singular=False)


def is_smooth_point(X: CubicHypersurface, p: ProjectivePoint) -> bool:
    if not X.contains(p):
        raise PointNotOnHypersurface(f"{p} does not satisfy the form")
    return any(X.gradient_at(p))


def _translate_low_parts_vanish(X: CubicHypersurface, coords) -> bool:
    """True when F(p + v) has no parts of v-degree 0, 1, 2 (multiplicity 3)."""
    ring = X.ring
    field = X.field
    bindings = [ring.gen(i) + ring.constant(c) for i, c in enumerate(coords)]
    g = X.form.substitute_poly(bindings)
    parts = g.homogeneous_parts()
    return all(parts.get(d, ring.zero()).is_zero() for d in (0, 1, 2))


def triple_point_locus(X: CubicHypersurface, budget: int = 300_000):
    """Basis (possibly empty) of the linear space of multiplicity-3 points.

    In characteristic coprime to 6 this is the common kernel of the
    second-partial linear forms (the Euler relations then force the gradient
    and the form itself to vanish on it).  In characteristic 2 or 3 the field
    menu is finite, so the locus is cut out by enumerating the kernel of the
    linear translate conditions and checking the full translate condition.
    """
    field = X.field
    m = X.ring.nvars
    p = field.characteristic
    if p not in (2, 3):
        rows = []
        for i in range(m):
            di = X.form.partial_derivative(i)
            for k in range(i, m):
                sec = di.partial_derivative(k)
                row = [field.zero()] * m
                for e, c in sec.terms.items():
                    row[[a for a, x in enumerate(e) if x][0]] = c
                if any(row):
                    rows.append(row)
        basis = linalg.kernel_basis(field, rows, m)
        return [ProjectivePoint(field, b) for b in basis]

    if not field.is_finite:
        raise UnicubicError(
            "triple-point locus in characteristic 2/3 needs a finite field")
    # linear conditions: the parts of F(p + v) that are linear in p and
    # quadratic in v give linear forms in p
    big = PolyRing(field, tuple(f"p{i}" for i in range(m))
                   + tuple(f"v{i}" for i in range(m)))
    bindings = [big.gen(i) + big.gen(m + i) for i in range(m)]
    expanded = X.form.substitute_poly(bindings)
    rows = {}
    for e, c in expanded.terms.items():
        pdeg = sum(e[:m])
        if pdeg != 1:
            continue
        pidx = [i for i in range(m) if e[i]][0]
        vkey = e[m:]
        row = rows.setdefault(vkey, [field.zero()] * m)
        row[pidx] = field.add(row[pidx], c)
    W = linalg.kernel_basis(field, [r for r in rows.values() if any(r)], m)
    if not W:
        return []
    q = field.order
    count = (q ** len(W) - 1) // (q - 1)
    if count > budget:
        raise BudgetExceeded(f"triple-point scan needs {count} candidates")
    points = []
    for rep in _projective_reps(field, len(W)):
        cand = [field.zero()] * m
        for coef, bvec in zip(rep, W):
            if coef:
                cand = [field.add(x, field.mul(coef, y))
                        for x, y in zip(cand, bvec)]
        if any(cand) and _translate_low_parts_vanish(X, cand):
            points.append(cand)
    if not points:
        return []
    span = _span_basis(field, points)
    return [ProjectivePoint(field, b) for b in span]


def _span_basis(field: Field, vectors):
    m = len(vectors[0])
    rows = [v[:] for v in vectors]
    basis = []
    r = 0
    for c in range(m):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(x, inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y))
                           for x, y in zip(rows[i], rows[r])]
        basis.append(rows[r][:])
        r += 1
    return basis


def _projective_reps(field: Field, n: int):
    """Canonical representatives of P^{n-1}(F_q): first nonzero coordinate 1,
    lexicographic scan order over the field's element order."""
    elems = list(field.elements())
    for pivot in range(n):
        tail = n - pivot - 1
        idx = [0] * tail
        while True:
            yield tuple([field.zero()] * pivot + [field.one()]
                        + [elems[i] for i in idx])
            k = tail - 1
            while k >= 0:
                idx[k] += 1
                if idx[k] < len(elems):
                    break
                idx[k] = 0
                k -= 1
            if k < 0:
                break


@dataclass
class TangentSection:
    """Restriction of the pointed form to the tangent hyperplane x_{n+1}=0,
    in coordinates s1..s_n."""

    pointed: PointedForm
    ring: PolyRing
    q: Poly
    c: Poly
    double_point: bool
    cone_flag: bool
    common_factor_free: bool


def tangent_section(X: CubicHypersurface, p: ProjectivePoint) -> TangentSection:
    pointed = decompose_at_point(X, p)
    if pointed.singular:
        raise SingularPoint(f"{p} is singular; tangent section undefined")
    n = X.n
    sect = PolyRing(X.field, tuple(f"s{i}" for i in range(1, n + 1)))
    bindings = [sect.gen(i) for i in range(n)] + [sect.zero()]
    q = pointed.Q.substitute_poly(bindings)
    c = pointed.C.substitute_poly(bindings)
    qz = q.is_zero()
    free = False
    if not qz and not c.is_zero():
        free = poly_gcd(q, c).is_constant()
    return TangentSection(pointed, sect, q, c,
                          double_point=not qz, cone_flag=qz,
                          common_factor_free=free)


@dataclass
class ClassificationReport:
    is_cone: bool
    triple_point_basis: list
    nonnormal_verdict: str            # "normal" | "nonnormal" | "unknown"
    smooth_points_found: list
    all_singular: bool | None         # None when not enumerated
    point_counts: dict | None
    separability_notes: list
    characteristic_notes: list
    applicable_case: str
    nonnormal_witness: list | None = None
    notes: list = dc_field(default_factory=list)

    def to_dict(self):
        return {
            "is_cone": self.is_cone,
            "triple_point_basis": [str(b) for b in self.triple_point_basis],
            "nonnormal_verdict": self.nonnormal_verdict,
            "smooth_points_found": [str(p) for p in self.smooth_points_found],
            "all_singular": self.all_singular,
            "point_counts": self.point_counts,
            "separability_notes": self.separability_notes,
            "characteristic_notes": self.characteristic_notes,
            "applicable_case": self.applicable_case,
            "nonnormal_witness": ([str(p) for p in self.nonnormal_witness]
                                  if self.nonnormal_witness else None),
            "notes": self.notes,
        }


def classify(X: CubicHypersurface, budget: int = 500_000,
             max_smooth_points: int = 5) -> ClassificationReport:
    field = X.field
    notes: list = []
    char_notes: list = []
    sep_notes: list = []
    try:
        basis = triple_point_locus(X)
    except (BudgetExceeded, UnicubicError) as e:
        basis = []
        notes.append(f"triple-point locus not computed: {e}")
    is_cone = bool(basis)
    if field.characteristic == 3:
        char_notes.append(
            "char 3: unirationality transfer requires no triple points over "
            "the algebraic closure; k-rational triple points "
            + ("found" if is_cone else "not found"))

    smooth_pts: list = []
    all_singular = None
    counts = None
    verdict = "unknown"
    witness = None
    if field.is_finite:
        q = field.order
        m = X.ring.nvars
        total = (q ** m - 1) // (q - 1)
        if total <= budget:
            singular = []
            n_points = 0
            for rep in _projective_reps(field, m):
                if X.form.evaluate(list(rep)):
                    continue
                n_points += 1
                if any(X.form.partial_derivative(i).evaluate(list(rep))
                       for i in range(m)):
                    if len(smooth_pts) < max_smooth_points:
                        smooth_pts.append(ProjectivePoint(field, rep))
                else:
                    singular.append(list(rep))
            all_singular = n_points > 0 and not smooth_pts
            counts = {"points": n_points, "singular": len(singular),
                      "scanned": total}
            # a linear singular space of projective dimension n-1 would
            # carry exactly (q^n - 1)/(q - 1) rational points
            hyperplane = (q ** X.n - 1) // (q - 1)
            if not singular:
                verdict = "normal"
            elif len(singular) < hyperplane:
                verdict = "normal"
                notes.append("singular points too few to contain a linear "
                             "space of dimension n-1")
            else:
                span = _span_basis(field, singular)
                if len(span) == X.n and _span_inside_singular(X, span):
                    verdict = "nonnormal"
                    witness = [ProjectivePoint(field, b) for b in span]
                else:
                    verdict = "unknown"
            if field.characteristic == 2:
                for pt in smooth_pts:
                    insep = inseparable_projection_test(X, pt)
                    sep_notes.append(
                        f"{pt}: projection {'inseparable' if insep else 'separable'}")
        else:
            notes.append(f"enumeration over {field.designator()} needs "
                         f"{total} points; budget {budget}")
    else:
        if is_cone:
            verdict = "unknown"
        notes.append("nonnormality not decided over an infinite field")

    if is_cone:
        case = "cone"
    elif verdict == "nonnormal":
        case = "nonnormal_linear_projection"
    elif smooth_pts or not field.is_finite:
        case = "smooth_point_pipeline"
    elif all_singular:
        case = "no_smooth_point"
    else:
        case = "undetermined"
    return ClassificationReport(
        is_cone=is_cone, triple_point_basis=basis,
        nonnormal_verdict=verdict, smooth_points_found=smooth_pts,
        all_singular=all_singular, point_counts=counts,
        separability_notes=sep_notes, characteristic_notes=char_notes,
        applicable_case=case, nonnormal_witness=witness, notes=notes)


def _span_inside_singular(X: CubicHypersurface, span_basis) -> bool:
    """Symbolically check that every point of the span is singular on X."""
    field = X.field
    r = len(span_basis)
    lam = PolyRing(field, tuple(f"l{i}" for i in range(r)))
    coords = []
    for i in range(X.ring.nvars):
        acc = lam.zero()
        for k in range(r):
            if span_basis[k][i]:
                acc = acc + lam.gen(k).scale(span_basis[k][i])
        coords.append(acc)
    if not X.form.substitute_poly(coords).is_zero():
        return False
    for i in range(X.ring.nvars):
        if not X.form.partial_derivative(i).substitute_poly(coords).is_zero():
            return False
    return True


def smooth_from_double_point(X: CubicHypersurface, x: ProjectivePoint,
                             seed: int = 0,
                             budget: int = 400) -> ProjectivePoint:
    """Second intersection of a generic line through a double point; the
    residual intersection has multiplicity one, hence is smooth, and that is
    re-verified with the gradient."""
    pointed = decompose_at_point(X, x)
    if not pointed.singular:
        raise UnicubicError("expected a singular base point")
    q, c = pointed.Q, pointed.C
    if q.is_zero():
        raise TriplePoint(f"{x} has multiplicity three")
    field = X.field
    nv = pointed.ring.nvars

    def candidate(direction):
        qv = q.evaluate(direction)
        if not qv:
            return None
        cv = c.evaluate(direction)
        if cv:
            tau = field.neg(field.div(qv, cv))
            affine = [field.mul(tau, d) for d in direction]
            amb = pointed.to_ambient_scalars(affine)
        else:
            amb = pointed.to_ambient_scalars(direction, homogenizer=0)
        pt = ProjectivePoint(field, amb)
        if not X.contains(pt):
            raise InternalInconsistency("residual point left the hypersurface")
        return pt if is_smooth_point(X, pt) else None

    if field.is_finite:
        saw_nonzero_q = False
        for rep in _projective_reps(field, nv):
            d = list(rep)
            if q.evaluate(d):
                saw_nonzero_q = True
                pt = candidate(d)
                if pt is not None:
                    return pt
        if not saw_nonzero_q:
            raise QuadraticVanishesEverywhere(
                f"the double-point quadric vanishes on all of "
                f"{field.designator()}^{nv}")
        raise SearchExhausted("no direction produced a smooth residual point")

    rng = SplitMix64(seed ^ 0xD0B1E)
    for trial in range(budget):
        bound = 3 + trial // 20
        d = [field.from_int(rng.randint(-bound, bound)) for _ in range(nv)]
        if not any(d):
            continue
        pt = candidate(d)
        if pt is not None:
            return pt
    raise SearchExhausted("random direction budget exhausted")


def inseparable_projection_test(X: CubicHypersurface,
                                p: ProjectivePoint) -> bool:
    """After moving p to a coordinate vertex, decide whether that coordinate
    appears only with even exponents (char 2: purely inseparable projection)."""
    if X.field.characteristic != 2:
        raise WrongCharacteristic("separability test is specific to char 2")
    if not X.contains(p):
        raise PointNotOnHypersurface(f"{p} does not satisfy the form")
    field = X.field
    m = X.ring.nvars
    j = p.pivot()
    ring = X.ring
    bindings = []
    for i in range(m):
        acc = ring.gen(i) if i != j else ring.zero()
        if p.coords[i]:
            acc = acc + ring.gen(j).scale(p.coords[i])
        bindings.append(acc)
    G = X.form.substitute_poly(bindings)
    return all(e[j] % 2 == 0 for e in G.terms)
