"""Multivariate polynomial gcd.

Strategy: cheap guaranteed wins first (monomial content, univariate case),
then a deterministic randomized triviality certificate (evaluate all but one
variable and take a univariate gcd; degree zero in every tested variable
means the gcd is almost surely constant), and only then a recursive primitive
pseudo-remainder sequence.  Size guards make the routine give up (return 1)
rather than stall; callers treat 1 as "no reduction", which is always sound
because equality tests cross-multiply.

All PRS arithmetic runs on plain int-coefficient dictionaries: primitive
integer polynomials for Q (never Fractions, whose per-op normalization is
ruinous) and residues for prime fields.  Extension fields fall back to a
generic-field PRS; their inputs stay tiny in this package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import InternalInconsistency
from .fields import PrimeField, Rationals
from .poly import Poly, _grlex_key
from .rng import SplitMix64

# evaluation primes for certificates over Q; candidates only, skipped when a
# coefficient denominator collides
_CERT_PRIMES = (2147483647, 2147483629, 2147483587)

_MAX_MAIN_DEGREE = 260
_MAX_TERM_PRODUCT = 8_000_000


# -- integer-dict arithmetic (domain: Z or Z/p) ---------------------------------

def _id_mul(a: dict, b: dict, p: int | None) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    if p is None:
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(int.__add__, e1, e2))
                v = out.get(e)
                if v is None:
                    out[e] = c1 * c2
                else:
                    v += c1 * c2
                    if v:
                        out[e] = v
                    else:
                        del out[e]
    else:
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(int.__add__, e1, e2))
                v = (out.get(e, 0) + c1 * c2) % p
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
    return out


def _id_sub(a: dict, b: dict, p: int | None) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if p is not None:
            v %= p
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _id_scale(a: dict, c: int, p: int | None) -> dict:
    if p is None:
        return {e: v * c for e, v in a.items()}
    out = {}
    for e, v in a.items():
        vc = v * c % p
        if vc:
            out[e] = vc
    return out


def _id_content(a: dict) -> int:
    g = 0
    for v in a.values():
        g = int_gcd(g, v)
        if g == 1:
            return 1
    return g


def _id_primitive(a: dict, p: int | None) -> dict:
    if not a:
        return a
    if p is not None:
        lead = a[max(a, key=_grlex_key)]
        if lead == 1:
            return a
        inv = pow(lead, -1, p)
        return {e: v * inv % p for e, v in a.items()}
    g = _id_content(a)
    if a[max(a, key=_grlex_key)] < 0:
        g = -g
    if g == 1:
        return a
    return {e: v // g for e, v in a.items()}


def _id_divexact(a: dict, b: dict, p: int | None) -> dict | None:
    """Exact division of int dicts; None when not divisible."""
    if not a:
        return {}
    eb = max(b, key=_grlex_key)
    cb = b[eb]
    rem = dict(a)
    quot: dict = {}
    binv = pow(cb, -1, p) if p is not None else None
    while rem:
        ea = max(rem, key=_grlex_key)
        ca = rem[ea]
        qe = tuple(map(int.__sub__, ea, eb))
        if any(x < 0 for x in qe):
            return None
        if p is None:
            if ca % cb:
                return None
            qc = ca // cb
        else:
            qc = ca * binv % p
        quot[qe] = qc
        for e2, c2 in b.items():
            key = tuple(map(int.__add__, qe, e2))
            v = rem.get(key, 0) - qc * c2
            if p is not None:
                v %= p
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return quot


def _id_degree_in(a: dict, i: int) -> int:
    return max((e[i] for e in a), default=-1)


def _id_vars_used(a: dict, nvars: int):
    used = [False] * nvars
    for e in a:
        for i, x in enumerate(e):
            if x:
                used[i] = True
    return {i for i, u in enumerate(used) if u}


def _id_to_univar(a: dict, i: int):
    """Dense list (low->high) of coefficient dicts in variable i."""
    out = [dict() for _ in range(_id_degree_in(a, i) + 1)]
    for e, c in a.items():
        e2 = list(e)
        k = e2[i]
        e2[i] = 0
        out[k][tuple(e2)] = c
    return out


def _id_from_univar(coeffs, i: int) -> dict:
    out = {}
    for k, c in enumerate(coeffs):
        for e, v in c.items():
            e2 = list(e)
            e2[i] = k
            out[tuple(e2)] = v
    return out


def _zz_univar_gcd(a: list, b: list, p: int | None) -> list:
    """Primitive pseudo-remainder Euclid on dense int lists."""
    def trim(x):
        while x and not x[-1]:
            x.pop()
        return x

    def prim(x):
        if not x:
            return x
        if p is not None:
            inv = pow(x[-1], -1, p)
            return [c * inv % p for c in x]
        g = 0
        for c in x:
            g = int_gcd(g, c)
            if g == 1:
                break
        if x[-1] < 0:
            g = -g
        return x if g == 1 else [c // g for c in x]

    a = prim(trim(list(a)))
    b = prim(trim(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b
        r = list(a)
        db = len(b) - 1
        lb = b[-1]
        while r and len(r) - 1 >= db:
            lr = r[-1]
            if p is None:
                r = [c * lb for c in r]
                shift = len(r) - 1 - db
                for i, c in enumerate(b):
                    r[shift + i] -= lr * c
            else:
                inv = pow(lb, -1, p)
                coef = lr * inv % p
                shift = len(r) - 1 - db
                for i, c in enumerate(b):
                    r[shift + i] = (r[shift + i] - coef * c) % p
            r.pop()
            trim(r)
        a, b = b, prim(trim(r))
    return prim(a)


def _id_univar_content_gcd(coeffs, p, nvars):
    g: dict = {}
    for c in coeffs:
        if not c:
            continue
        g = c if not g else _id_gcd(g, c, p, nvars)
        if len(g) == 1 and not any(max(g, key=_grlex_key)):
            break
    return g


def _id_is_const(a: dict) -> bool:
    return len(a) <= 1 and all(not any(e) for e in a)


def _id_gcd(f: dict, g: dict, p: int | None, nvars: int) -> dict:
    """Recursive primitive PRS on int dicts; returns a primitive gcd."""
    if not f:
        return _id_primitive(g, p)
    if not g:
        return _id_primitive(f, p)
    if _id_is_const(f) or _id_is_const(g):
        if p is None:
            c = int_gcd(_id_content(f), _id_content(g))
            return {(0,) * nvars: c}
        return {(0,) * nvars: 1}
    # monomial content
    minf = [min(e[i] for e in f) for i in range(nvars)]
    ming = [min(e[i] for e in g) for i in range(nvars)]
    common = tuple(min(a, b) for a, b in zip(minf, ming))
    if any(minf):
        f = {tuple(map(int.__sub__, e, tuple(minf))): c for e, c in f.items()}
    if any(ming):
        g = {tuple(map(int.__sub__, e, tuple(ming))): c for e, c in g.items()}

    vf = _id_vars_used(f, nvars)
    vg = _id_vars_used(g, nvars)
    shared = sorted(vf & vg)
    if not shared:
        if p is None:
            c = int_gcd(_id_content(f), _id_content(g))
        else:
            c = 1
        base = {(0,) * nvars: c}
        return _id_mono_mul(base, common)

    if vf == vg and len(vf) == 1:
        i = shared[0]
        da = [0] * (_id_degree_in(f, i) + 1)
        for e, c in f.items():
            da[e[i]] = c
        db = [0] * (_id_degree_in(g, i) + 1)
        for e, c in g.items():
            db[e[i]] = c
        mono = _zz_univar_gcd(da, db, p)
        out = {}
        for k, c in enumerate(mono):
            if c:
                e = [0] * nvars
                e[i] = k
                out[tuple(e)] = c
        return _id_mono_mul(out, common)

    if f == g:
        return _id_mono_mul(_id_primitive(f, p), common)

    main = min(shared, key=lambda i: min(_id_degree_in(f, i),
                                         _id_degree_in(g, i)))
    if (max(_id_degree_in(f, main), _id_degree_in(g, main)) > _MAX_MAIN_DEGREE
            or len(f) * len(g) > _MAX_TERM_PRODUCT):
        return _id_mono_mul({(0,) * nvars: 1}, common)

    A = _id_to_univar(f, main)
    B = _id_to_univar(g, main)
    if len(A) < len(B):
        A, B = B, A
    cont_a = _id_univar_content_gcd(A, p, nvars)
    if not _id_is_const(cont_a):
        A = [_id_divexact(c, cont_a, p) if c else c for c in A]
    cont_b = _id_univar_content_gcd(B, p, nvars)
    if not _id_is_const(cont_b):
        B = [_id_divexact(c, cont_b, p) if c else c for c in B]
    cont = _id_gcd(cont_a, cont_b, p, nvars)

    while True:
        # pseudo-remainder of A by B in the main variable
        R = list(A)
        dB = len(B) - 1
        lB = B[-1]
        while R and len(R) - 1 >= dB:
            lR = R[-1]
            shift = len(R) - 1 - dB
            R = [_id_mul(lB, c, p) if c else {} for c in R]
            for j, bc in enumerate(B):
                if bc:
                    R[shift + j] = _id_sub(R[shift + j],
                                           _id_mul(lR, bc, p), p)
            R.pop()
            while R and not R[-1]:
                R.pop()
        if not R:
            break
        if len(R) == 1:
            head = {(0,) * nvars: 1}
            result = cont if not _id_is_const(cont) else head
            return _id_mono_mul(_id_primitive(result, p), common)
        rcont = _id_univar_content_gcd(R, p, nvars)
        if not _id_is_const(rcont):
            R = [_id_divexact(c, rcont, p) if c else c for c in R]
        A, B = B, R
    head = _id_from_univar(B, main)
    if not _id_is_const(cont):
        head = _id_mul(head, cont, p)
    return _id_mono_mul(_id_primitive(head, p), common)


def _id_mono_mul(a: dict, exps: tuple) -> dict:
    if not any(exps):
        return a
    return {tuple(map(int.__add__, e, exps)): c for e, c in a.items()}


# -- conversions -----------------------------------------------------------------

def _poly_to_intdict(f: Poly) -> dict:
    field = f.ring.field
    if isinstance(field, Rationals):
        den = 1
        for c in f.terms.values():
            den = den * c.denominator // int_gcd(den, c.denominator)
        out = {e: int(c * den) for e, c in f.terms.items()}
        g = _id_content(out)
        if out[max(out, key=_grlex_key)] < 0:
            g = -g
        if g != 1:
            out = {e: v // g for e, v in out.items()}
        return out
    return dict(f.terms)


def _intdict_to_poly(d: dict, ring) -> Poly:
    field = ring.field
    if isinstance(field, Rationals):
        return Poly(ring, {e: Fraction(v) for e, v in d.items()})
    return Poly(ring, dict(d))


# -- certificates ------------------------------------------------------------------

def _univar_gcd_modp(a: list, b: list, p: int) -> list:
    return _zz_univar_gcd([c % p for c in a], [c % p for c in b], p)


def _eval_image_modp(f: Poly, main: int, point: dict, p: int):
    """Dense univariate image (mod p) of a Q-coefficient polynomial."""
    out = [0] * (f.degree_in(main) + 1)
    powcache: dict = {}
    for e, c in f.terms.items():
        if c.denominator % p == 0:
            return None
        cv = c.numerator * pow(c.denominator, -1, p) % p
        for i, k in enumerate(e):
            if k and i != main:
                key = (i, k)
                if key not in powcache:
                    powcache[key] = pow(point[i], k, p)
                cv = cv * powcache[key] % p
        out[e[main]] = (out[e[main]] + cv) % p
    return out


def _field_univar_gcd(a: list, b: list, field) -> list:
    """Euclid on dense scalar lists over an arbitrary field; monic result."""
    def trim(x):
        while x and not x[-1]:
            x.pop()
        return x

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv = field.inv(b[-1])
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            coef = field.mul(a[-1], inv)
            shift = len(a) - 1 - db
            for i, c in enumerate(b):
                a[shift + i] = field.sub(a[shift + i], field.mul(coef, c))
            trim(a)
        a, b = b, a
        trim(b)
    if a:
        inv = field.inv(a[-1])
        a = [field.mul(c, inv) for c in a]
    return a


def _to_list_eval(f: Poly, main: int, assign: dict) -> list:
    field = f.ring.field
    out = [field.zero()] * (f.degree_in(main) + 1)
    part = f.eval_partial(assign)
    for e, c in part.terms.items():
        out[e[main]] = field.add(out[e[main]], c)
    return out


def _certify_trivial(f: Poly, g: Poly, common_vars) -> bool:
    """True when evaluation images say gcd(f, g) is constant in every tested
    variable.  One-sided: may (rarely) claim trivial when it is not, which
    only costs minimality of a stored fraction."""
    field = f.ring.field
    rng = SplitMix64(0x5EED5EED)
    if len(common_vars) > 3:
        common_vars = sorted(
            common_vars,
            key=lambda i: -min(f.degree_in(i), g.degree_in(i)))[:3]
    for main in common_vars:
        done = False
        if isinstance(field, Rationals):
            for p in _CERT_PRIMES:
                point = {i: rng.randrange(p - 1) + 1
                         for i in range(f.ring.nvars) if i != main}
                fa = _eval_image_modp(f, main, point, p)
                fb = _eval_image_modp(g, main, point, p)
                if fa is None or fb is None:
                    continue
                if len(_univar_gcd_modp(fa, fb, p)) > 1:
                    return False
                done = True
                break
        else:
            for _ in range(2):
                assign = {i: field.random(rng)
                          for i in range(f.ring.nvars) if i != main}
                fa = _to_list_eval(f, main, assign)
                fb = _to_list_eval(g, main, assign)
                img = _field_univar_gcd(fa, fb, field)
                if len(img) > 1:
                    return False
                if len(img) == 1:
                    done = True
                    break
        if not done:
            return False
    return True


# -- public entry points -------------------------------------------------------------

def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Gcd in canonical form (integer-primitive over Q, monic over finite
    fields); returns 1 when it gives up."""
    if f.ring != g.ring:
        raise InternalInconsistency("gcd of polynomials from different rings")
    ring = f.ring
    if f.is_zero():
        return g.content_and_primitive()[1] if g else ring.zero()
    if g.is_zero():
        return f.content_and_primitive()[1]
    if f.is_constant() or g.is_constant():
        return ring.one()

    field = ring.field
    nvars = ring.nvars

    # shared monomial factor is exact and cheap; strip it up front
    minf = f.monomial_content()
    ming = g.monomial_content()
    common = tuple(min(a, b) for a, b in zip(minf, ming))
    if any(minf):
        f = f.shift_down(minf)
    if any(ming):
        g = g.shift_down(ming)
    mono = ring.monomial(common) if any(common) else None

    if isinstance(field, Rationals):
        from .interpgcd import interp_gcd_z
        from .zcore import ZRing
        zr = ZRing(ring.names)
        fi = {zr.pack(e): v for e, v in _poly_to_intdict(f).items()}
        gi = {zr.pack(e): v for e, v in _poly_to_intdict(g).items()}
        h = interp_gcd_z(zr, fi, gi)
        if h is not None:
            out = Poly(ring, {zr.unpack(k): Fraction(v)
                              for k, v in h.items()})
        elif len(fi) * len(gi) <= 40_000:
            out = _intdict_to_poly(
                _id_gcd(_poly_to_intdict(f), _poly_to_intdict(g), None,
                        nvars), ring)
        else:
            out = ring.one()
        result = out
    elif isinstance(field, PrimeField):
        p = field.p
        if p > 1000:
            from .interpgcd import interp_gcd_modp
            from .zcore import ZRing
            zr = ZRing(ring.names, p)
            fi = {zr.pack(e): v for e, v in f.terms.items()}
            gi = {zr.pack(e): v for e, v in g.terms.items()}
            h = interp_gcd_modp(zr, fi, gi, p)
            result = (Poly(ring, {zr.unpack(k): v for k, v in h.items()})
                      if h is not None else ring.one())
        else:
            # tiny fields starve interpolation of points; sizes there stay
            # small enough for the PRS
            result = _intdict_to_poly(
                _id_gcd(dict(f.terms), dict(g.terms), p, nvars), ring)
    else:
        # extension fields: generic-field PRS on Poly coefficients
        result = _generic_gcd(f, g)

    if mono is not None:
        result = result * mono
    return result.content_and_primitive()[1]


def _generic_gcd(f: Poly, g: Poly) -> Poly:
    ring = f.ring
    field = ring.field
    mf, mg = f.monomial_content(), g.monomial_content()
    common = tuple(min(a, b) for a, b in zip(mf, mg))
    if any(mf):
        f = f.shift_down(mf)
    if any(mg):
        g = g.shift_down(mg)
    vf = set(f.variables_used())
    vg = set(g.variables_used())
    shared = sorted(vf & vg)
    result = ring.one()
    if shared:
        if vf == vg and len(vf) == 1:
            i = shared[0]
            da = [field.zero()] * (f.degree_in(i) + 1)
            for e, c in f.terms.items():
                da[e[i]] = c
            db = [field.zero()] * (g.degree_in(i) + 1)
            for e, c in g.terms.items():
                db[e[i]] = c
            mono = _field_univar_gcd(da, db, field)
            out = {}
            for k, c in enumerate(mono):
                if c:
                    e = [0] * ring.nvars
                    e[i] = k
                    out[tuple(e)] = c
            result = Poly(ring, out)
        elif f == g:
            result = f
        else:
            result = _generic_prs(f, g, shared[0])
    if any(common):
        result = result * ring.monomial(common)
    return result.content_and_primitive()[1]


def _generic_prs(f: Poly, g: Poly, main: int) -> Poly:
    ring = f.ring

    def to_univar(h):
        out = [dict() for _ in range(h.degree_in(main) + 1)]
        for e, c in h.terms.items():
            e2 = list(e)
            k = e2[main]
            e2[main] = 0
            out[k][tuple(e2)] = c
        return [Poly(ring, t) for t in out]

    def content(coeffs):
        acc = None
        for c in coeffs:
            if c.is_zero():
                continue
            acc = c if acc is None else poly_gcd(acc, c)
            if acc.is_constant():
                break
        return acc if acc is not None else ring.zero()

    def primitive(coeffs):
        cont = content(coeffs)
        if cont.is_constant():
            return coeffs
        return [c.divexact(cont) for c in coeffs]

    A = to_univar(f)
    B = to_univar(g)
    if len(A) < len(B):
        A, B = B, A
    cont = poly_gcd(content(A), content(B))
    A = primitive(A)
    B = primitive(B)
    while True:
        R = list(A)
        dB = len(B) - 1
        lB = B[-1]
        while R and len(R) - 1 >= dB:
            lR = R[-1]
            shift = len(R) - 1 - dB
            R = [lB * c for c in R]
            for j, bc in enumerate(B):
                R[shift + j] = R[shift + j] - lR * bc
            R.pop()
            while R and R[-1].is_zero():
                R.pop()
        if not R:
            break
        if len(R) == 1:
            return cont if not cont.is_constant() else ring.one()
        A, B = B, primitive(R)
    out = {}
    for k, c in enumerate(B):
        for e, v in c.terms.items():
            e2 = list(e)
            e2[main] = k
            out[tuple(e2)] = v
    head = Poly(ring, out)
    return head * cont if not cont.is_constant() else head


def poly_gcd_many(polys) -> Poly:
    it = iter([p for p in polys if not p.is_zero()])
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("gcd of an empty/zero family")
    acc = acc.content_and_primitive()[1]
    for p in it:
        if acc.is_constant():
            break
        acc = poly_gcd(acc, p)
    return acc


def integer_content(values) -> Fraction:
    num = 0
    den = 1
    for v in values:
        num = int_gcd(num, v.numerator)
        den = den * v.denominator // int_gcd(den, v.denominator)
    return Fraction(num, den) if num else Fraction(0)
