"""Integer-core implementation of the parametrization construction.

The public construction (quadratic-ring elements with rational-function
components) is algebraically identical to this module, but here every object
is a (numerator_a, numerator_b, denominator) triple of int-coefficient
packed-exponent dicts: the rational scale of the pointed form is cleared up
front, multiplications and inversions in the rank-2 ring stay polynomial,
and normalization only strips integer content plus exact powers of the one
known recurring factor (the dehomogenized cubic part).  Measurement shows
the construction's intermediates are pairwise coprime, so no general
reduction is attempted until the very end, where the probe-and-interpolate
gcd canonicalizes the output components.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import DegenerateTangentDirection, InternalInconsistency
from .interpgcd import interp_gcd_z
from .zcore import (ZRing, zadd, zdivexact, zdivexact_fast, zmul,
                    zmul_batch, zneg, zscale, zsub)

# Degree-box shifts for the Kronecker fast path; set per build.  The
# construction is single-threaded per invocation, and distinct rings set it
# on entry, so a module global keeps the many call sites tidy.
_SHIFTS = None


def _ZM(a, b, p, shifts=None):
    return zmul(a, b, p, shifts if shifts is not None else _SHIFTS)


class ZPipeline:
    """Shared context: packing ring, modulus coefficients, prime (or None)."""

    def __init__(self, names, p, cL, cQ, cC):
        self.zr = ZRing(names, p)
        self.p = p
        self.sh = self.zr._shifts
        self.cL = cL
        self.cQ = cQ
        self.cC = cC
        self.zero3 = ({}, {}, {0: 1})
        self.one3 = ({0: 1}, {}, {0: 1})
        self.t3 = ({}, {0: 1}, {0: 1})

    # -- (a + b t)/den triples ------------------------------------------------

    def tmul(self, x, y):
        a1, b1, d1 = x
        a2, b2, d2 = y
        p = self.p
        A = _ZM(a1, a2, p)
        B = zadd(_ZM(a1, b2, p), _ZM(b1, a2, p), p)
        C = _ZM(b1, b2, p)
        if C:
            na = zsub(_ZM(A, self.cC, p), _ZM(C, self.cL, p), p)
            nb = zsub(_ZM(B, self.cC, p), _ZM(C, self.cQ, p), p)
            den = _ZM(_ZM(d1, d2, p), self.cC, p)
        else:
            na, nb, den = A, B, _ZM(d1, d2, p)
        return self.norm3((na, nb, den))

    def tadd(self, x, y):
        a1, b1, d1 = x
        a2, b2, d2 = y
        p = self.p
        if d1 == d2:
            return self.norm3((zadd(a1, a2, p), zadd(b1, b2, p), d1))
        return self.norm3((
            zadd(_ZM(a1, d2, p), _ZM(a2, d1, p), p),
            zadd(_ZM(b1, d2, p), _ZM(b2, d1, p), p),
            _ZM(d1, d2, p)))

    def tneg(self, x):
        a, b, d = x
        return (zneg(a, self.p), zneg(b, self.p), d)

    def tnorm_num(self, x):
        """Numerator of norm((a + b t)/d) times d^2 cC: a^2 cC - a b cQ + b^2 cL."""
        a, b, _ = x
        p = self.p
        return zsub(_ZM(_ZM(a, a, p), self.cC, p),
                    zsub(_ZM(_ZM(a, b, p), self.cQ, p),
                         _ZM(_ZM(b, b, p), self.cL, p), p), p)

    def tinv(self, x):
        """Polynomial inverse: ((a cC - b cQ) d, -b cC d, N)."""
        a, b, d = x
        p = self.p
        N = self.tnorm_num(x)
        if not N:
            raise DegenerateTangentDirection("element of norm zero")
        na = _ZM(zsub(_ZM(a, self.cC, p), _ZM(b, self.cQ, p), p), d, p)
        nb = zneg(_ZM(_ZM(b, self.cC, p), d, p), p)
        return self.norm3((na, nb, N))

    def tconj(self, x):
        """t -> -cQ/cC - t: (a cC - b cQ, -b cC, d cC)."""
        a, b, d = x
        p = self.p
        return self.norm3((
            zsub(_ZM(a, self.cC, p), _ZM(b, self.cQ, p), p),
            zneg(_ZM(b, self.cC, p), p),
            _ZM(d, self.cC, p)))

    def is_zero3(self, x) -> bool:
        return not x[0] and not x[1]

    def norm3(self, x):
        a, b, d = x
        if not a and not b:
            return ({}, {}, {0: 1})
        p = self.p
        if len(d) > 1 or 0 not in d:
            while True:
                d2 = zdivexact(self.zr, d, self.cC)
                if d2 is None:
                    break
                a2 = zdivexact(self.zr, a, self.cC) if a else {}
                if a2 is None and a:
                    break
                b2 = zdivexact(self.zr, b, self.cC) if b else {}
                if b2 is None and b:
                    break
                a, b, d = a2, b2, d2
                if len(d) == 1 and 0 in d:
                    break
        if p is None:
            g = 0
            for src in (a, b, d):
                for v in src.values():
                    g = int_gcd(g, v)
                    if g == 1:
                        break
                if g == 1:
                    break
            dl = d[max(d)] if d else 1
            if dl < 0:
                g = -g
            if g not in (0, 1):
                a = {k: v // g for k, v in a.items()}
                b = {k: v // g for k, v in b.items()}
                d = {k: v // g for k, v in d.items()}
        return (a, b, d)

    # -- pencil evaluation ------------------------------------------------------

    def pencil(self, fterms, base, direction, maxdeg=3):
        """Coefficients of f(base + sigma*direction) as triples."""
        acc = [self.zero3] * (maxdeg + 1)
        ncomp = len(base)
        pow_cache = [dict() for _ in range(ncomp)]

        def var_pow(i, e):
            cache = pow_cache[i]
            if e in cache:
                return cache[e]
            if e == 1:
                res = [base[i], direction[i]]
            else:
                res = self._sigma_mul(var_pow(i, e - 1),
                                      [base[i], direction[i]])
            cache[e] = res
            return res

        for exps, coef in fterms:
            cur = [({0: coef % self.p if self.p else coef}, {}, {0: 1})]
            for i, e in enumerate(exps):
                if e:
                    cur = self._sigma_mul(cur, var_pow(i, e))
            for d, val in enumerate(cur):
                if not self.is_zero3(val):
                    acc[d] = self.tadd(acc[d], val)
        return acc

    def _sigma_mul(self, u, v):
        out = [self.zero3] * (len(u) + len(v) - 1)
        for i, x in enumerate(u):
            if self.is_zero3(x):
                continue
            for j, y in enumerate(v):
                if self.is_zero3(y):
                    continue
                prod = self.tmul(x, y)
                cur = out[i + j]
                out[i + j] = prod if self.is_zero3(cur) \
                    else self.tadd(cur, prod)
        return out

    def value_at(self, fterms, vec):
        """f evaluated at a vector of triples (degree-0 pencil)."""
        zeros = [self.zero3] * len(vec)
        return self.pencil(fterms, vec, zeros)[0]


# -- gcd-by-known-factors ---------------------------------------------------------


def reduce_pair_by_factors(zr: ZRing, num: dict, factors: list):
    """Reduce num / prod(factors) by extracting, factor by factor, the gcd
    of the numerator with that factor (exact, via the interpolation gcd).
    Returns (num, den) with den expanded.  Z coefficients only."""
    out_factors = []
    for fac in factors:
        if len(fac) == 1 and 0 in fac:
            out_factors.append(fac)
            continue
        g = interp_gcd_z(zr, num, fac)
        if g is None or (len(g) == 1 and 0 in g):
            out_factors.append(fac)
            continue
        num2 = zdivexact(zr, num, g)
        fac2 = zdivexact(zr, fac, g)
        if num2 is None or fac2 is None:
            out_factors.append(fac)
            continue
        num = num2
        out_factors.append(fac2)
    den = {0: 1}
    for fac in out_factors:
        den = _ZM(den, fac, None)
    # integer content normalization
    g = 0
    for src in (num, den):
        for v in src.values():
            g = int_gcd(g, v)
            if g == 1:
                break
        if g == 1:
            break
    if den:
        lead = den[max(den)]
        if lead < 0:
            g = -g
    if g not in (0, 1):
        num = {k: v // g for k, v in num.items()}
        den = {k: v // g for k, v in den.items()}
    return num, den


def zbuild(field, pointed, n: int, conjugate_root: bool = False) -> dict:
    """Run the construction on the integer core; the caller has already
    validated smoothness, cone-freeness, and the cubic part."""
    p = None if field.characteristic == 0 else field.p
    names = tuple(f"u{i}" for i in range(1, n + 1)) \
        + tuple(f"v{i}" for i in range(1, n)) \
        + tuple(f"w{i}" for i in range(1, n))

    f_aff = pointed.f()
    if p is None:
        scale = 1
        for c in f_aff.terms.values():
            scale = scale * c.denominator // int_gcd(scale, c.denominator)
        fterms = [(e, int(c * scale)) for e, c in f_aff.terms.items()]
    else:
        scale = 1
        fterms = [(e, int(c) % p) for e, c in f_aff.terms.items()]

    zr = ZRing(names, p)
    parts: dict = {1: {}, 2: {}, 3: {}}
    for e, c in fterms:
        d = sum(e)
        key = zr.pack(tuple(e[:n]) + (0,) * (2 * n - 2))
        tgt = parts[d]
        v = tgt.get(key, 0) + c
        if p is not None:
            v %= p
        if v:
            tgt[key] = v
        else:
            tgt.pop(key, None)
    cL, cQ, cC = parts[1], parts[2], parts[3]
    ctx = ZPipeline(names, p, cL, cQ, cC)
    global _SHIFTS
    _SHIFTS = ctx.sh

    # E_i = (df/dx_i)(t u, t) as ring elements
    tpow = [ctx.one3, ctx.t3, ctx.tmul(ctx.t3, ctx.t3)]
    E = []
    for i in range(n + 1):
        by_deg: dict = {}
        for e, c in fterms:
            if not e[i]:
                continue
            c2 = c * e[i]
            if p is not None:
                c2 %= p
                if not c2:
                    continue
            e2 = list(e)
            e2[i] -= 1
            d = sum(e2)
            key = zr.pack(tuple(e2[:n]) + (0,) * (2 * n - 2))
            tgt = by_deg.setdefault(d, {})
            v = tgt.get(key, 0) + c2
            if p is not None:
                v %= p
            if v:
                tgt[key] = v
            else:
                tgt.pop(key, None)
        elem = ctx.zero3
        for d, part in by_deg.items():
            if part:
                elem = ctx.tadd(elem, ctx.tmul((part, {}, {0: 1}), tpow[d]))
        E.append(elem)
    D = E[n]
    D_inv = ctx.tinv(D)  # raises DegenerateTangentDirection on zero norm

    B = []
    for i in range(n - 1):
        B.append(({zr.gen_key(n + i): 1}, {zr.gen_key(2 * n - 1 + i): 1},
                  {0: 1}))
    B.append(ctx.one3)
    S = ctx.zero3
    for i in range(n):
        S = ctx.tadd(S, ctx.tmul(E[i], B[i]))
    B.append(ctx.tneg(ctx.tmul(D_inv, S)))

    A = [({}, {zr.gen_key(i): 1}, {0: 1}) for i in range(n)]
    A.append(ctx.t3)

    H = ctx.pencil(fterms, A, B)
    if not ctx.is_zero3(H[0]) or not ctx.is_zero3(H[1]):
        raise InternalInconsistency(
            "tangency failed: sigma-cubic has nonzero low coefficients")
    if ctx.is_zero3(H[3]):
        raise DegenerateTangentDirection(
            "the tangent line lies in the hypersurface")
    sigma = ctx.tneg(ctx.tmul(H[2], ctx.tinv(H[3])))

    Q1 = [ctx.tadd(A[i], ctx.tmul(sigma, B[i])) for i in range(n + 1)]
    if conjugate_root:
        Q1 = [ctx.tconj(q) for q in Q1]
    # membership of Q1 in the hypersurface is certified in the Kronecker
    # tail by evaluating the lambda-cubic at the formal root

    # align to a common denominator
    dens = [q[2] for q in Q1]
    if all(d == dens[0] for d in dens):
        NA = [q[0] for q in Q1]
        NB = [q[1] for q in Q1]
        Dcom = dens[0]
    else:
        NA, NB = [], []
        Dcom = {0: 1}
        for d in dens:
            Dcom = _ZM(Dcom, d, p)
        for i, (a, b, d) in enumerate(Q1):
            rest = {0: 1}
            for j, d2 in enumerate(dens):
                if j != i:
                    rest = _ZM(rest, d2, p)
            NA.append(_ZM(a, rest, p))
            NB.append(_ZM(b, rest, p))
    if all(not b for b in NB):
        raise DegenerateTangentDirection(
            "conjugate intersection points coincide with base components")

    # lambda-cubic coefficients g_j over the common denominator Dcom^3,
    # with the heavy products contracted componentwise
    nc = n + 1
    tail = _zbuild_tail(zr, fterms, NA, NB, Dcom, cL, cQ, cC, p, n)
    g, lam_n = tail["g"], tail["lam_n"]
    if not tail["on_x"]:
        raise InternalInconsistency(
            "third tangent-line intersection left the hypersurface")
    if not g[3]:
        raise DegenerateTangentDirection(
            "the conjugate-point line lies in the hypersurface")
    if tail["check1"]:
        raise InternalInconsistency(
            "third root disagrees between coefficient and Vieta routes")
    if tail["check2"]:
        raise InternalInconsistency("middle Vieta relation failed for G1")

    # the known recurring factors of everything downstream: the cubic
    # modulus coefficient and the common tangent-line denominator
    if p is None:
        g3_res, g3_found = _factor_out(zr, dict(g[3]), [cC, Dcom])
        g3_pieces = [g3_res] + [dict(c) for c, mult in g3_found
                                for _ in range(mult)]
    else:
        g3_pieces = [dict(g[3])]

    lam_n_red, lam_d_red = _reduce_with_known_factors(
        zr, dict(lam_n), [dict(cC)] + [dict(f) for f in g3_pieces], n)

    jobs = []
    for i in range(nc):
        jobs.append((NA[i], lam_d_red))
        jobs.append((lam_n_red, NB[i]))
    prods = zmul_batch(jobs, p, zr._shifts)
    psi_pairs = []
    for i in range(nc):
        num = zadd(prods[2 * i], prods[2 * i + 1], p)
        den_factors = [dict(Dcom), dict(lam_d_red)]
        psi_pairs.append(_reduce_with_known_factors(zr, num, den_factors, n))

    return {
        "zr": zr, "p": p, "scale": scale, "names": names,
        "cL": cL, "cQ": cQ, "cC": cC,
        "E": E, "A": A, "B": B, "H": H, "sigma": sigma, "Q1": Q1,
        "NA": NA, "NB": NB, "Dcom": Dcom, "g": g,
        "lam": (lam_n_red, lam_d_red),
        "psi_pairs": psi_pairs,
    }


def _zbuild_tail(zr, fterms, NA, NB, Dcom, cL, cQ, cC, p, n):
    """The lambda-cubic and its checks, computed by contracting the cubic
    form one component at a time; the independent large products go through
    a batched (optionally parallel) Kronecker multiplier."""
    from collections import Counter

    sh = zr._shifts

    def mul(a, b):
        return zmul(a, b, p, sh)

    fd = {1: [], 2: [], 3: []}
    for e, c in fterms:
        fd[sum(e)].append((e, c))

    # which pair products are needed
    keysA = set()
    keysB = set()
    for e, c in fd[3]:
        idx = [i for i, ee in enumerate(e) for _ in range(ee)]
        keysA.add((min(idx[0], idx[1]), max(idx[0], idx[1])))
        keysB.add((min(idx[0], idx[1]), max(idx[0], idx[1])))
        cnt = Counter()
        for pos in range(3):
            others = tuple(sorted(idx[q] for q in range(3) if q != pos))
            keysB.add(others)
    for e, c in fd[2]:
        idx = [i for i, ee in enumerate(e) for _ in range(ee)]
        key = (min(idx[0], idx[1]), max(idx[0], idx[1]))
        keysA.add(key)
        keysB.add(key)
    keysA = sorted(keysA)
    keysB = sorted(keysB)
    pair_jobs = [(NA[i], NA[j]) for i, j in keysA] \
        + [(NB[i], NB[j]) for i, j in keysB]
    pair_res = zmul_batch(pair_jobs, p, sh)
    pairsA = dict(zip(keysA, pair_res[:len(keysA)]))
    pairsB = dict(zip(keysB, pair_res[len(keysA):]))

    def pA(i, j):
        return pairsA[(min(i, j), max(i, j))]

    def pB(i, j):
        return pairsB[(min(i, j), max(i, j))]

    def same_tables(pair_fn):
        S: dict = {}
        for e, c in fd[3]:
            idx = [i for i, ee in enumerate(e) for _ in range(ee)]
            cur = S.setdefault(idx[2], {})
            S[idx[2]] = zadd(cur, zscale(pair_fn(idx[0], idx[1]), c, p), p)
        return S

    def mixed_tables(pair_fn):
        S: dict = {}
        for e, c in fd[3]:
            idx = [i for i, ee in enumerate(e) for _ in range(ee)]
            cnt = Counter()
            for pos in range(3):
                others = tuple(sorted(idx[q] for q in range(3) if q != pos))
                cnt[(others, idx[pos])] += 1
            for (pp, lin), mult in cnt.items():
                cur = S.setdefault(lin, {})
                S[lin] = zadd(cur, zscale(pair_fn(*pp), c * mult, p), p)
        return S

    def quad_value(pair_fn):
        out: dict = {}
        for e, c in fd[2]:
            idx = [i for i, ee in enumerate(e) for _ in range(ee)]
            out = zadd(out, zscale(pair_fn(idx[0], idx[1]), c, p), p)
        return out

    def lin_value(vec):
        out: dict = {}
        for e, c in fd[1]:
            i = next(i for i, ee in enumerate(e) if ee)
            out = zadd(out, zscale(vec[i], c, p), p)
        return out

    S30 = same_tables(pA)
    S32 = mixed_tables(pB)
    S33 = same_tables(pB)
    raw20 = quad_value(pA)
    raw22 = quad_value(pB)
    raw10 = lin_value(NA)

    # batch the contraction products (all independent)
    jobs = []
    slots = []
    for name, S, vec in (("30", S30, NA), ("32", S32, NA), ("33", S33, NB)):
        for lin, sk in S.items():
            if sk:
                jobs.append((sk, vec[lin]))
                slots.append(name)
    D2 = mul(Dcom, Dcom)
    jobs.append((raw20, Dcom))
    slots.append("20D")
    jobs.append((raw22, Dcom))
    slots.append("22D")
    jobs.append((raw10, D2))
    slots.append("10D2")
    res = zmul_batch(jobs, p, sh)
    acc = {"30": {}, "32": {}, "33": {}, "20D": {}, "22D": {}, "10D2": {}}
    for name, out in zip(slots, res):
        acc[name] = zadd(acc[name], out, p)

    g0 = zadd(zadd(acc["30"], acc["20D"], p), acc["10D2"], p)
    g2 = zadd(acc["32"], acc["22D"], p)
    g3 = acc["33"]

    lam_n = zsub(mul(cQ, g3), mul(cC, g2), p)
    cC2 = mul(cC, cC)
    # membership of Q1 (the lambda-cubic evaluated at the formal root) and
    # the product-Vieta relation, as exact zero tests
    on_x_base = zadd(zsub(mul(g0, cC2), mul(g2, mul(cL, cC)), p),
                     mul(g3, mul(cQ, cL)), p)
    check1 = zadd(mul(lam_n, cL), mul(g0, cC2), p)
    # the middle coefficient comes out of the two-root factorization; cC^2
    # must divide exactly, which doubles as the pairwise-Vieta consistency
    # check (the expanded route recomputes the same identity)
    g1_combo = zadd(zsub(mul(mul(cL, cC), g3), mul(mul(cQ, cQ), g3), p),
                    mul(mul(cQ, cC), g2), p)
    g1 = zdivexact_fast(zr, g1_combo, cC2)
    return {
        "g": [g0, g1, g2, g3],
        "lam_n": lam_n,
        "on_x": not on_x_base,
        "check1": bool(check1),
        "check2": g1 is None,
    }


def _is_one_dict(d: dict) -> bool:
    return len(d) == 1 and d.get(0) == 1


def _vw_slice_gcd(zr: ZRing, poly: dict, u_count: int):
    """Gcd of the tangent-parameter parts over all u-slices: any common
    factor with zero u-degree must divide every slice, and slices are tiny."""
    shifts = zr._shifts
    umask = 0
    for i in range(u_count):
        umask |= 0xFFFF << shifts[i]
    slices: dict = {}
    for k, c in poly.items():
        slices.setdefault(k & umask, {})[k & ~umask] = c
    acc = None
    for sl in slices.values():
        acc = sl if acc is None else _small_gcd(zr, acc, sl)
        if _is_one_dict(acc):
            return {0: 1}
    return acc if acc else {0: 1}


def _small_gcd(zr: ZRing, a: dict, b: dict) -> dict:
    """Exact gcd for small operands (tangent-parameter slices)."""
    from .gcd import _id_gcd
    ta = {zr.unpack(k): v for k, v in a.items()}
    tb = {zr.unpack(k): v for k, v in b.items()}
    h = _id_gcd(ta, tb, zr.p, zr.nvars)
    return {zr.pack(e): v for e, v in h.items()}


def _factor_out(zr: ZRing, poly: dict, candidates: list):
    """Split poly into candidate-power factors times a residual:
    returns (residual, [(candidate, multiplicity), ...])."""
    found = []
    for cand in candidates:
        if _is_one_dict(cand) or len(cand) == 0:
            continue
        mult = 0
        while True:
            q = zdivexact_fast(zr, poly, cand)
            if q is None:
                break
            poly = q
            mult += 1
        if mult:
            found.append((cand, mult))
    return poly, found


def _reduce_with_known_factors(zr: ZRing, num: dict, den_factors: list,
                               u_count: int):
    """Reduce num / prod(den_factors) using fast exact trial division by the
    known factors, a tangent-parameter slice gcd, and a final probe-gated
    interpolation gcd on whatever remains.  Returns (num, den)."""
    p = zr.p
    dens = [dict(f) for f in den_factors if not _is_one_dict(f)]
    if p is None:
        changed = True
        while changed:
            changed = False
            for i, fac in enumerate(dens):
                if _is_one_dict(fac):
                    continue
                qn = zdivexact_fast(zr, num, fac)
                if qn is not None:
                    num = qn
                    dens[i] = {0: 1}
                    changed = True
        dens = [f for f in dens if not _is_one_dict(f)]
        # parameter-only common factor
        if num and dens:
            gn = _vw_slice_gcd(zr, num, u_count)
            if not _is_one_dict(gn):
                for i, fac in enumerate(dens):
                    gf = _small_gcd(zr, gn, _vw_slice_gcd(zr, fac, u_count))
                    if not _is_one_dict(gf):
                        q1 = zdivexact_fast(zr, num, gf)
                        q2 = zdivexact_fast(zr, fac, gf)
                        if q1 is not None and q2 is not None:
                            num = q1
                            dens[i] = q2
                            gn = zdivexact_fast(zr, gn, gf) or {0: 1}
        # residual overlap, factor by factor
        for i, fac in enumerate(dens):
            if _is_one_dict(fac) or not num:
                continue
            g = interp_gcd_z(zr, num, fac)
            if g is None or _is_one_dict(g):
                continue
            q1 = zdivexact_fast(zr, num, g)
            q2 = zdivexact_fast(zr, fac, g)
            if q1 is not None and q2 is not None:
                num = q1
                dens[i] = q2
    den = {0: 1}
    for fac in dens:
        den = _ZM(den, fac, p)
    if p is None:
        g = 0
        for src in (num, den):
            for v in src.values():
                g = int_gcd(g, v)
                if g == 1:
                    break
            if g == 1:
                break
        if den:
            lead = den[max(den)]
            if lead < 0:
                g = -g
        if g not in (0, 1):
            num = {k: v // g for k, v in num.items()}
            den = {k: v // g for k, v in den.items()}
    return num, den


def zverify_form(form_terms, vecs, zr: ZRing, p) -> bool:
    """Evaluate a cubic form (integer coefficient terms) on a vector of
    zpolys with shared-product caching; True when identically zero."""
    cache: dict = {}

    def vprod(counts):
        got = cache.get(counts)
        if got is not None:
            return got
        i = next(i for i, e in enumerate(counts) if e)
        c2 = list(counts)
        c2[i] -= 1
        base = cache.get(tuple(c2))
        if base is None:
            base = vprod(tuple(c2)) if sum(c2) else {0: 1}
        r = _ZM(base, vecs[i], p)
        cache[counts] = r
        return r

    cache[tuple([0] * len(vecs))] = {0: 1}
    acc: dict = {}
    for exps, coef in form_terms:
        term = zscale(vprod(tuple(exps)), coef, p)
        acc = zadd(acc, term, p)
    return not acc


def reduce_pair_exact(zr: ZRing, num: dict, den: dict):
    """Canonical reduction of a fraction of int dicts over Z; falls back to
    the unreduced pair when the gcd engine gives up."""
    if not num:
        return {}, {0: 1}
    g = interp_gcd_z(zr, num, den)
    if g is not None and not (len(g) == 1 and 0 in g):
        num2 = zdivexact(zr, num, g)
        den2 = zdivexact(zr, den, g)
        if num2 is not None and den2 is not None:
            num, den = num2, den2
    gi = 0
    for src in (num, den):
        for v in src.values():
            gi = int_gcd(gi, v)
            if gi == 1:
                break
        if gi == 1:
            break
    lead = den[max(den)] if den else 1
    if lead < 0:
        gi = -gi
    if gi not in (0, 1):
        num = {k: v // gi for k, v in num.items()}
        den = {k: v // gi for k, v in den.items()}
    return num, den
