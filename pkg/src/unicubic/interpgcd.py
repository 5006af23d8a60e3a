"""Modular interpolation gcd for integer-coefficient multivariate polynomials.

Pseudo-remainder sequences explode on exactly the inputs this package
produces (moderate degree, several variables, coprime-or-small gcd), so the
real gcd engine works mod a large prime: probe the gcd's degree profile from
univariate images, run Brown's dense interpolation recursion, lift the
primitive candidate to Z, and accept it only when exact trial division
succeeds.  A wrong or partial candidate therefore never corrupts a result;
at worst a fraction stays unreduced.  All evaluation points are drawn from a
fixed-seed generator, so canonical forms are reproducible across runs.
"""

from __future__ import annotations

from math import gcd as int_gcd

from .rng import SplitMix64
from .zcore import MASK, ZRing, zdivexact

_PRIMES = (2305843009213693951, 4611686018427387847, 9223372036854775783)


class _Unlucky(Exception):
    pass


def _univar_gcd_q(a: list, b: list, q: int) -> list:
    def trim(x):
        while x and x[-1] % q == 0:
            x.pop()
        return x

    a, b = trim([c % q for c in a]), trim([c % q for c in b])
    while b:
        inv = pow(b[-1], -1, q)
        db = len(b) - 1
        while a and len(a) - 1 >= db:
            coef = a[-1] * inv % q
            shift = len(a) - 1 - db
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - coef * c) % q
            trim(a)
        a, b = b, trim(a)
    if a:
        inv = pow(a[-1], -1, q)
        a = [c * inv % q for c in a]
    return a


def _image(ring: ZRing, f: dict, main: int, point: dict, q: int) -> list:
    shifts = ring._shifts
    s_main = shifts[main]
    out = [0] * (max(((k >> s_main) & MASK for k in f), default=-1) + 1)
    powcache: dict = {}
    for key, c in f.items():
        cv = c % q
        if not cv:
            continue
        for i, s in enumerate(shifts):
            if i == main:
                continue
            e = (key >> s) & MASK
            if e:
                ck = (i, e)
                if ck not in powcache:
                    powcache[ck] = pow(point[i], e, q)
                cv = cv * powcache[ck] % q
        d = (key >> s_main) & MASK
        out[d] = (out[d] + cv) % q
    return out


def probe_degree_profile(ring: ZRing, f: dict, g: dict, q: int) -> list:
    """Per-variable degree of gcd(f, g) read from univariate images.
    One-sided: an all-zero profile means a trivial gcd with overwhelming
    probability (and claiming so only skips a reduction)."""
    rng = SplitMix64(0x9B0BE5)
    nv = ring.nvars
    degs = [0] * nv
    for i in range(nv):
        si = ring._shifts[i]
        df = max(((k >> si) & MASK for k in f), default=0)
        dg = max(((k >> si) & MASK for k in g), default=0)
        if min(df, dg) == 0:
            continue
        point = {j: rng.randrange(q - 1) + 1 for j in range(nv) if j != i}
        img = _univar_gcd_q(_image(ring, f, i, point, q),
                            _image(ring, g, i, point, q), q)
        degs[i] = max(len(img) - 1, 0)
    return degs


# -- dict arithmetic mod q ---------------------------------------------------------

def _mul_q(a: dict, b: dict, q: int) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            k = e1 + e2
            v = (out.get(k, 0) + c1 * c2) % q
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _scale_q(a: dict, c: int, q: int) -> dict:
    c %= q
    out = {}
    for k, v in a.items():
        vc = v * c % q
        if vc:
            out[k] = vc
    return out


def _sub_q(a: dict, b: dict, q: int) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = (out.get(k, 0) - c) % q
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _add_q(a: dict, b: dict, q: int) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = (out.get(k, 0) + c) % q
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


_QRING_CACHE: dict = {}


def _divexact_q(ring: ZRing, a: dict, b: dict, q: int):
    key = (ring.names, q)
    ring_q = _QRING_CACHE.get(key)
    if ring_q is None:
        ring_q = ZRing(ring.names, q)
        _QRING_CACHE[key] = ring_q
    return zdivexact(ring_q, {k: v % q for k, v in a.items()},
                     {k: v % q for k, v in b.items()})


def _deg_in(ring: ZRing, f: dict, i: int) -> int:
    s = ring._shifts[i]
    return max(((k >> s) & MASK for k in f), default=-1)


def _eval_var(ring: ZRing, f: dict, i: int, xi: int, q: int) -> dict:
    s = ring._shifts[i]
    clear = ~(MASK << s)
    out: dict = {}
    powcache = {0: 1}
    for key, c in f.items():
        e = (key >> s) & MASK
        if e not in powcache:
            powcache[e] = pow(xi, e, q)
        k2 = key & clear
        v = (out.get(k2, 0) + c * powcache[e]) % q
        if v:
            out[k2] = v
        else:
            out.pop(k2, None)
    return out


def _lc_main(ring: ZRing, f: dict, main: int) -> dict:
    d = _deg_in(ring, f, main)
    s = ring._shifts[main]
    clear = ~(MASK << s)
    out = {}
    for key, c in f.items():
        if (key >> s) & MASK == d:
            out[key & clear] = c
    return out


def _monic_q(ring: ZRing, f: dict, q: int) -> dict:
    if not f:
        return f
    best = None
    best_deg = -1
    for k in f:
        d = sum((k >> s) & MASK for s in ring._shifts)
        if d > best_deg or (d == best_deg and k > best):
            best, best_deg = k, d
    if f[best] == 1:
        return f
    inv = pow(f[best], -1, q)
    return {k: v * inv % q for k, v in f.items()}


def _vars_of(ring: ZRing, f: dict):
    out = set()
    for k in f:
        for i, s in enumerate(ring._shifts):
            if (k >> s) & MASK:
                out.add(i)
    return out


def _to_dense(ring: ZRing, f: dict, main: int) -> list:
    s = ring._shifts[main]
    out = [0] * (_deg_in(ring, f, main) + 1)
    for k, c in f.items():
        out[(k >> s) & MASK] = c
    return out


def _from_dense(ring: ZRing, img: list, main: int) -> dict:
    s = ring._shifts[main]
    return {e << s: c for e, c in enumerate(img) if c}


def _const_value(f: dict):
    if len(f) == 1 and 0 in f:
        return f[0]
    return None


def _is_one(f: dict) -> bool:
    return len(f) == 1 and f.get(0) == 1


def _content_main_q(ring: ZRing, f: dict, main: int, q: int,
                    rng: SplitMix64) -> dict:
    s = ring._shifts[main]
    clear = ~(MASK << s)
    groups: dict = {}
    for k, c in f.items():
        groups.setdefault((k >> s) & MASK, {})[k & clear] = c
    acc = None
    for cd in groups.values():
        acc = cd if acc is None else _gcd_q(ring, acc, cd, q, rng)
        if _is_one(acc):
            return {0: 1}
    return _monic_q(ring, acc, q)


def _rescale_image(ring: ZRing, h: dict, target_lc: dict, main: int,
                   q: int):
    """Multiply/divide h so that lc_main(h) == target_lc; None when the two
    leading coefficients are not multiplicatively related (unlucky point)."""
    lh = _lc_main(ring, h, main)
    if lh == target_lc:
        return h
    lv = _const_value(lh)
    tv = _const_value(target_lc)
    if lv is not None and tv is not None:
        return _scale_q(h, tv * pow(lv, -1, q) % q, q)
    c = _divexact_q(ring, target_lc, lh, q)
    if c is not None:
        return _mul_q(h, c, q)
    c = _divexact_q(ring, lh, target_lc, q)
    if c is not None:
        return _divexact_q(ring, h, c, q)
    return None


def _brown_q(ring: ZRing, f: dict, g: dict, vars_act: list, main: int,
             q: int, rng: SplitMix64) -> dict:
    """Gcd mod q of main-primitive inputs, normalized so lc_main equals
    gamma := gcd(lc_main f, lc_main g); degenerates to monic-times-gamma at
    the univariate base."""
    others = [v for v in vars_act if v != main]
    if not others:
        img = _univar_gcd_q(_to_dense(ring, f, main),
                            _to_dense(ring, g, main), q)
        return _from_dense(ring, img, main)

    z = others[-1]
    sub_vars = [v for v in vars_act if v != z]
    gamma = _gcd_q(ring, _lc_main(ring, f, main), _lc_main(ring, g, main),
                   q, rng)
    bound = min(_deg_in(ring, f, z), _deg_in(ring, g, z)) \
        + max(_deg_in(ring, gamma, z), 0) + 1

    points: list = []
    images: list = []
    best_main_deg = None
    attempts = 0
    H: dict = {}
    basis: dict = {0: 1}
    zkey = 1 << ring._shifts[z]
    while len(points) < bound:
        attempts += 1
        if attempts > 30 * bound + 100:
            raise _Unlucky("ran out of evaluation points")
        xi = rng.randrange(q - 1) + 1
        if xi in points:
            continue
        fz = _eval_var(ring, f, z, xi, q)
        gz = _eval_var(ring, g, z, xi, q)
        if (_deg_in(ring, fz, main) != _deg_in(ring, f, main)
                or _deg_in(ring, gz, main) != _deg_in(ring, g, main)):
            continue
        h = _brown_q(ring, fz, gz, sub_vars, main, q, rng)
        dmain = _deg_in(ring, h, main)
        if best_main_deg is None or dmain < best_main_deg:
            best_main_deg = dmain
            points, images = [], []
            H, basis = {}, {0: 1}
        elif dmain > best_main_deg:
            continue
        if best_main_deg == 0:
            # primitive parts are coprime; the gcd is carried by gamma,
            # which the caller's invariant already accounts for
            return gamma
        h = _rescale_image(ring, h, _eval_var(ring, gamma, z, xi, q), main, q)
        if h is None:
            continue
        # Newton update
        Hxi = _eval_var(ring, H, z, xi, q) if H else {}
        diff = _sub_q(h, Hxi, q)
        if diff:
            bxi = 0
            s = ring._shifts[z]
            for k, c in basis.items():
                bxi = (bxi + c * pow(xi, (k >> s) & MASK, q)) % q
            H = _add_q(H, _mul_q(_scale_q(diff, pow(bxi, -1, q), q),
                                 basis, q), q)
        basis = _sub_q({k + zkey: v for k, v in basis.items()},
                       _scale_q(basis, xi, q), q)
        points.append(xi)
        images.append(h)
    return H


def _gcd_q(ring: ZRing, f: dict, g: dict, q: int, rng: SplitMix64) -> dict:
    """Monic gcd mod q via content splitting plus Brown interpolation."""
    if not f:
        return _monic_q(ring, g, q)
    if not g:
        return _monic_q(ring, f, q)
    if _const_value(f) is not None or _const_value(g) is not None:
        return {0: 1}
    shared = sorted(_vars_of(ring, f) & _vars_of(ring, g))
    if not shared:
        return {0: 1}
    if len(shared) == 1 and len(_vars_of(ring, f) | _vars_of(ring, g)) == 1:
        i = shared[0]
        img = _univar_gcd_q(_to_dense(ring, f, i), _to_dense(ring, g, i), q)
        return _from_dense(ring, img, i)
    main = max(shared, key=lambda i: min(_deg_in(ring, f, i),
                                         _deg_in(ring, g, i)))
    cf = _content_main_q(ring, f, main, q, rng)
    if not _is_one(cf):
        f = _divexact_q(ring, f, cf, q)
        if f is None:
            raise _Unlucky("content division failed")
    cg = _content_main_q(ring, g, main, q, rng)
    if not _is_one(cg):
        g = _divexact_q(ring, g, cg, q)
        if g is None:
            raise _Unlucky("content division failed")
    c = {0: 1} if (_is_one(cf) or _is_one(cg)) else _gcd_q(ring, cf, cg,
                                                           q, rng)
    vars_act = sorted(_vars_of(ring, f) | _vars_of(ring, g))
    H = _brown_q(ring, f, g, vars_act, main, q, rng)
    Hc = _content_main_q(ring, H, main, q, rng)
    if not _is_one(Hc):
        H = _divexact_q(ring, H, Hc, q)
        if H is None:
            raise _Unlucky("result content division failed")
    if not _is_one(c):
        H = _mul_q(H, c, q)
    return _monic_q(ring, H, q)


# -- exact lift --------------------------------------------------------------------

def _lift_symmetric(f: dict, q: int) -> dict:
    half = q // 2
    return {k: (v - q if v > half else v) for k, v in f.items()}


def _int_primitive(ring: ZRing, f: dict) -> dict:
    g = 0
    for v in f.values():
        g = int_gcd(g, v)
        if g == 1:
            break
    if not g:
        return f
    best = None
    best_deg = -1
    for k in f:
        d = sum((k >> s) & MASK for s in ring._shifts)
        if d > best_deg or (d == best_deg and k > best):
            best, best_deg = k, d
    if f[best] < 0:
        g = -g
    return {k: v // g for k, v in f.items()} if g != 1 else f


def _grlex_lead_coeff(ring: ZRing, f: dict) -> int:
    best = None
    best_deg = -1
    for k in f:
        d = sum((k >> s) & MASK for s in ring._shifts)
        if d > best_deg or (d == best_deg and k > best):
            best, best_deg = k, d
    return f[best]


def interp_gcd_z(ring: ZRing, f: dict, g: dict):
    """Exact gcd over Z of primitive int dicts.  Returns None when no
    candidate could be certified (caller falls back or skips reduction)."""
    for q in _PRIMES:
        rng = SplitMix64(q ^ 0xB10B5)
        degs = probe_degree_profile(ring, f, g, q)
        if not any(degs):
            return {0: 1}
        try:
            hq = _gcd_q(ring, {k: v % q for k, v in f.items()},
                        {k: v % q for k, v in g.items()}, q, rng)
        except _Unlucky:
            continue
        if _const_value(hq) is not None:
            return {0: 1}
        gl = int_gcd(abs(_grlex_lead_coeff(ring, f)),
                     abs(_grlex_lead_coeff(ring, g)))
        cand = _int_primitive(ring, _lift_symmetric(
            _scale_q(hq, gl % q, q), q))
        if zdivexact(ring, f, cand) is not None \
                and zdivexact(ring, g, cand) is not None:
            return cand
    return None


def interp_gcd_modp(ring: ZRing, f: dict, g: dict, p: int):
    """Exact monic gcd mod a large prime p (used when the base field itself
    is a big prime field); verified by trial division."""
    rng = SplitMix64(p ^ 0xB10B5)
    try:
        hq = _gcd_q(ring, f, g, p, rng)
    except _Unlucky:
        return None
    if zdivexact(ring, f, hq) is not None \
            and zdivexact(ring, g, hq) is not None:
        return hq
    return None
