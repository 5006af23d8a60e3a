"""Fast integer polynomial kernel for the parametrization pipeline.

Polynomials here are dicts mapping a packed exponent key (16 bits per
variable, first declared variable in the highest bits so integer comparison
is lexicographic) to an int coefficient: a plain integer for characteristic
zero (the pipeline clears all rational denominators up front) or a residue
for prime fields.

The quadratic-ring elements of the construction are (a, b, den) triples of
such dicts representing (a + b*t)/den; multiplication and inversion stay
polynomial (no gcd), and normalization only strips integer content and exact
powers of known factors.  This matches what measurements show: the
construction's intermediates are already coprime, so general reduction is
wasted work, and the few real cancellations are handled afterwards by the
probe-and-interpolate gcd in :mod:`unicubic.gcd2`.
"""

from __future__ import annotations

from math import gcd as int_gcd

try:  # GMP's FFT bigint product makes the Kronecker path worthwhile
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - plain ints work, just slower
    def _mpz(x):
        return x

BITS = 16
MASK = (1 << BITS) - 1


class ZRing:
    """Packing context: variable names, optional prime modulus."""

    __slots__ = ("names", "nvars", "p", "_shifts")

    def __init__(self, names, p=None):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.p = p
        self._shifts = tuple(BITS * (self.nvars - 1 - i)
                             for i in range(self.nvars))

    def pack(self, exps) -> int:
        key = 0
        for e, s in zip(exps, self._shifts):
            key |= e << s
        return key

    def unpack(self, key: int):
        return tuple((key >> s) & MASK for s in self._shifts)

    def gen_key(self, i: int) -> int:
        return 1 << self._shifts[i]


def zmul(a: dict, b: dict, p, shifts=None) -> dict:
    """Sparse product; large operands are routed through Kronecker
    substitution (one bigint multiplication) when a degree box is known."""
    if not a or not b:
        return {}
    if (shifts is not None and len(a) > 60 and len(b) > 60
            and len(a) * len(b) > 250_000):
        out = _kron_mul(a, b, p, shifts)
        if out is not None:
            return out
    if len(a) > len(b):
        a, b = b, a
    out = {}
    if p is None:
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                k = e1 + e2
                v = out.get(k)
                if v is None:
                    out[k] = c1 * c2
                else:
                    v += c1 * c2
                    if v:
                        out[k] = v
                    else:
                        del out[k]
    else:
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                k = e1 + e2
                v = (out.get(k, 0) + c1 * c2) % p
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    return out


_KRON_BYTE_LIMIT = 64_000_000


def _kron_mul(a: dict, b: dict, p, shifts):
    """Exact product via evaluation at a huge power of two.

    Each polynomial is laid out densely in the mixed-radix box of the summed
    per-variable degree bounds and multiplied as one Python integer product;
    the result is decoded slot by slot with balanced-digit borrow handling
    for signed coefficients.  Returns None when the box is too large to pay
    off, in which case the caller uses the sparse path."""
    nv = len(shifts)
    da = [0] * nv
    for k in a:
        for i, s in enumerate(shifts):
            e = (k >> s) & MASK
            if e > da[i]:
                da[i] = e
    db = [0] * nv
    for k in b:
        for i, s in enumerate(shifts):
            e = (k >> s) & MASK
            if e > db[i]:
                db[i] = e
    caps = [da[i] + db[i] + 1 for i in range(nv)]
    box = 1
    for c in caps:
        box *= c
    if p is None:
        ca = max(abs(c) for c in a.values())
        cb = max(abs(c) for c in b.values())
        bound = ca * cb * min(len(a), len(b))
        bits = bound.bit_length() + 2
    else:
        bound = (p - 1) * (p - 1) * min(len(a), len(b))
        bits = bound.bit_length() + 1
    bits = (bits + 7) & ~7
    bw = bits // 8
    if box * bw > _KRON_BYTE_LIMIT:
        return None
    strides = [0] * nv
    acc = 1
    for i in reversed(range(nv)):
        strides[i] = acc
        acc *= caps[i]

    def encode(poly):
        pos = bytearray(box * bw)
        neg = bytearray(box * bw) if p is None else None
        has_neg = False
        for k, c in poly.items():
            slot = 0
            for i, s in enumerate(shifts):
                e = (k >> s) & MASK
                if e:
                    slot += e * strides[i]
            off = slot * bw
            if p is None and c < 0:
                neg[off:off + bw] = (-c).to_bytes(bw, "little")
                has_neg = True
            else:
                pos[off:off + bw] = c.to_bytes(bw, "little")
        v = int.from_bytes(pos, "little")
        if has_neg:
            v -= int.from_bytes(neg, "little")
        return v

    prod = int(_mpz(encode(a)) * _mpz(encode(b)))
    sign = 1
    if prod < 0:
        prod = -prod
        sign = -1
    raw = prod.to_bytes(box * bw + bw, "little")
    try:
        import numpy as _np
        arr = _np.frombuffer(raw[:box * bw], dtype=_np.uint8)
        idx = _np.nonzero(arr.reshape(box, bw).any(axis=1))[0].tolist()
    except ImportError:  # pragma: no cover
        zero = b"\x00" * bw
        idx = [s for s in range(box) if raw[s * bw:(s + 1) * bw] != zero]
    out: dict = {}
    half = 1 << (bits - 1)
    R = 1 << bits
    carry = 0
    prev = -2
    i = 0
    nidx = len(idx)
    while True:
        if carry:
            slot = prev + 1
            if i < nidx and idx[i] == slot:
                i += 1
        elif i < nidx:
            slot = idx[i]
            i += 1
        else:
            break
        if slot >= box:
            break
        c = int.from_bytes(raw[slot * bw:(slot + 1) * bw], "little") + carry
        carry = 0
        if p is None and c >= half:
            c -= R
            carry = 1
        prev = slot
        if c:
            rem = slot
            key = 0
            for j in range(nv):
                e = rem // strides[j]
                rem %= strides[j]
                if e:
                    key |= e << shifts[j]
            if p is None:
                out[key] = c if sign > 0 else -c
            else:
                cv = (c if sign > 0 else -c) % p
                if cv:
                    out[key] = cv
                else:
                    out.pop(key, None)
    return out


def zadd(a: dict, b: dict, p) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if p is not None:
            v %= p
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def zsub(a: dict, b: dict, p) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) - c
        if p is not None:
            v %= p
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def zneg(a: dict, p) -> dict:
    if p is None:
        return {k: -c for k, c in a.items()}
    return {k: p - c for k, c in a.items()}


def zscale(a: dict, c: int, p) -> dict:
    if not c:
        return {}
    if p is None:
        return {k: v * c for k, v in a.items()}
    out = {}
    for k, v in a.items():
        vc = v * c % p
        if vc:
            out[k] = vc
    return out


def zcontent(a: dict) -> int:
    g = 0
    for v in a.values():
        g = int_gcd(g, v)
        if g == 1:
            return 1
    return g


def _lead_key(ring: ZRing, a: dict) -> int:
    """Graded-lex leading key."""
    best = None
    best_deg = -1
    for k in a:
        d = ztotal_deg_key(ring, k)
        if d > best_deg or (d == best_deg and k > best):
            best, best_deg = k, d
    return best


def ztotal_deg_key(ring: ZRing, key: int) -> int:
    d = 0
    for s in ring._shifts:
        d += (key >> s) & MASK
    return d


def ztotal_deg(ring: ZRing, a: dict) -> int:
    return max((ztotal_deg_key(ring, k) for k in a), default=-1)


def zdeg_in(ring: ZRing, a: dict, i: int) -> int:
    s = ring._shifts[i]
    return max(((k >> s) & MASK for k in a), default=-1)


def zprim(ring: ZRing, a: dict) -> dict:
    """Integer-primitive with positive leading coefficient (Z), or monic
    (mod p)."""
    if not a:
        return a
    if ring.p is not None:
        lead = a[_lead_key(ring, a)]
        if lead == 1:
            return a
        inv = pow(lead, -1, ring.p)
        return {k: v * inv % ring.p for k, v in a.items()}
    g = zcontent(a)
    if a[_lead_key(ring, a)] < 0:
        g = -g
    if g == 1:
        return a
    return {k: v // g for k, v in a.items()}


def zdivexact(ring: ZRing, a: dict, b: dict):
    """Exact division a/b; None when not divisible."""
    if not a:
        return {}
    if not b:
        raise ZeroDivisionError("zero divisor polynomial")
    p = ring.p
    eb = _lead_key(ring, b)
    cb = b[eb]
    binv = pow(cb, -1, p) if p is not None else None
    import heapq
    rem = dict(a)
    heap = [(-ztotal_deg_key(ring, k), -k) for k in rem]
    heapq.heapify(heap)
    quot: dict = {}
    bitems = list(b.items())
    while heap:
        dneg, kneg = heapq.heappop(heap)
        k = -kneg
        c = rem.get(k)
        if not c:
            continue
        qk = k - eb
        # negative exponent check: packed subtraction borrows show up as
        # huge field values
        if qk < 0 or any(((qk >> s) & MASK) > ((k >> s) & MASK)
                         for s in ring._shifts):
            return None
        if p is None:
            if c % cb:
                return None
            qc = c // cb
        else:
            qc = c * binv % p
        quot[qk] = qc
        for k2, c2 in bitems:
            key = qk + k2
            v = rem.get(key, 0) - qc * c2
            if p is not None:
                v %= p
            if v:
                if key not in rem:
                    heapq.heappush(heap, (-ztotal_deg_key(ring, key), -key))
                rem[key] = v
            else:
                rem.pop(key, None)
    if any(rem.values()):
        return None
    return quot


class KronContext:
    """Fixed Kronecker geometry for a batch of ring operations.

    All polynomials of one computation are evaluated at R = 2^bits on a
    shared mixed-radix degree box, so products and sums become (GMP) integer
    arithmetic; decoding happens once per final object.  The construction
    raises when a decoded coefficient approaches the slot capacity, so a
    too-small geometry fails loudly rather than silently wrapping."""

    def __init__(self, ring: ZRing, caps, bits: int):
        self.ring = ring
        self.caps = list(caps)
        bits = (bits + 7) & ~7
        self.bits = bits
        self.bw = bits // 8
        self.box = 1
        for c in self.caps:
            self.box *= c
        self.strides = [0] * ring.nvars
        acc = 1
        for i in reversed(range(ring.nvars)):
            self.strides[i] = acc
            acc *= self.caps[i]
        self.half = 1 << (bits - 1)
        self.guard = 1 << (bits - 3)

    def encode(self, a: dict):
        bw = self.bw
        pos = bytearray(self.box * bw)
        neg = None
        shifts = self.ring._shifts
        strides = self.strides
        for k, c in a.items():
            slot = 0
            for i, s in enumerate(shifts):
                e = (k >> s) & MASK
                if e:
                    if e >= self.caps[i]:
                        raise ValueError("polynomial exceeds the geometry")
                    slot += e * strides[i]
            off = slot * bw
            if c < 0:
                if neg is None:
                    neg = bytearray(self.box * bw)
                neg[off:off + bw] = (-c).to_bytes(bw, "little")
            else:
                pos[off:off + bw] = c.to_bytes(bw, "little")
        v = _mpz(int.from_bytes(pos, "little"))
        if neg is not None:
            v -= _mpz(int.from_bytes(neg, "little"))
        return v

    def decode(self, val) -> dict:
        val = int(val)
        sign = 1
        if val < 0:
            val = -val
            sign = -1
        bw = self.bw
        raw = val.to_bytes(self.box * bw + bw, "little")
        try:
            import numpy as _np
            arr = _np.frombuffer(raw[:self.box * bw], dtype=_np.uint8)
            arr = arr.reshape(self.box, bw)
            idx = _np.nonzero(arr.any(axis=1))[0].tolist()
        except ImportError:  # pragma: no cover
            idx = [s for s in range(self.box)
                   if raw[s * bw:(s + 1) * bw] != b"\x00" * bw]
        out: dict = {}
        shifts = self.ring._shifts
        strides = self.strides
        half = self.half
        R = 1 << self.bits
        carry = 0
        prev = -2
        i = 0
        nidx = len(idx)
        while True:
            if carry:
                s = prev + 1
                if i < nidx and idx[i] == s:
                    i += 1
            elif i < nidx:
                s = idx[i]
                i += 1
            else:
                break
            if s >= self.box:
                raise ValueError("carry escaped the geometry")
            v = int.from_bytes(raw[s * bw:(s + 1) * bw], "little") + carry
            carry = 0
            if v >= half:
                v -= R
                carry = 1
            prev = s
            if v:
                if abs(v) >= self.guard:
                    raise ValueError("coefficient near slot capacity")
                rem = s
                key = 0
                for j in range(self.ring.nvars):
                    e = rem // strides[j]
                    rem %= strides[j]
                    if e:
                        key |= e << shifts[j]
                out[key] = v if sign > 0 else -v
        return out

    def zero(self):
        return _mpz(0)


class BlockKron:
    """Kronecker geometry blocked by a subset of variables.

    A polynomial becomes a dict from the packed key of the block variables
    (here: the tangent-direction parameters, which stay low-degree) to a GMP
    integer encoding the dense box of the remaining variables.  Ring ops are
    then small dict convolutions of bigint multiplications, which keeps
    memory proportional to the true support instead of the full box."""

    def __init__(self, ring: ZRing, kron_vars, caps, bits: int):
        self.ring = ring
        self.kron_vars = list(kron_vars)
        self.block_mask = 0
        for i in range(ring.nvars):
            if i not in kron_vars:
                self.block_mask |= MASK << ring._shifts[i]
        self.caps = list(caps)
        bits = (bits + 7) & ~7
        self.bits = bits
        self.bw = bits // 8
        self.box = 1
        for c in self.caps:
            self.box *= c
        self.strides = {}
        self.cap_of = {}
        acc = 1
        for j in reversed(range(len(self.kron_vars))):
            self.strides[self.kron_vars[j]] = acc
            self.cap_of[self.kron_vars[j]] = self.caps[j]
            acc *= self.caps[j]
        self.half = 1 << (bits - 1)
        self.guard = 1 << (bits - 3)

    def encode(self, a: dict) -> dict:
        shifts = self.ring._shifts
        bw = self.bw
        groups: dict = {}
        for k, c in a.items():
            slot = 0
            for i in self.kron_vars:
                e = (k >> shifts[i]) & MASK
                if e:
                    if e >= self.cap_of[i]:
                        raise ValueError("polynomial exceeds the geometry")
                    slot += e * self.strides[i]
            groups.setdefault(k & self.block_mask, []).append((slot, c))
        out = {}
        for bk, items in groups.items():
            pos = bytearray(self.box * bw)
            neg = None
            for slot, c in items:
                off = slot * bw
                if c < 0:
                    if neg is None:
                        neg = bytearray(self.box * bw)
                    neg[off:off + bw] = (-c).to_bytes(bw, "little")
                else:
                    pos[off:off + bw] = c.to_bytes(bw, "little")
            v = _mpz(int.from_bytes(pos, "little"))
            if neg is not None:
                v -= _mpz(int.from_bytes(neg, "little"))
            if v:
                out[bk] = v
        return out

    def decode(self, blocks: dict) -> dict:
        out: dict = {}
        shifts = self.ring._shifts
        bw = self.bw
        half = self.half
        R = 1 << self.bits
        try:
            import numpy as _np
        except ImportError:  # pragma: no cover
            _np = None
        for bk, val in blocks.items():
            val = int(val)
            if not val:
                continue
            sign = 1
            if val < 0:
                val = -val
                sign = -1
            raw = val.to_bytes(self.box * bw + bw, "little")
            if _np is not None:
                arr = _np.frombuffer(raw[:self.box * bw], dtype=_np.uint8)
                idx = _np.nonzero(arr.reshape(self.box, bw).any(axis=1))[0] \
                    .tolist()
            else:
                zero = b"\x00" * bw
                idx = [s for s in range(self.box)
                       if raw[s * bw:(s + 1) * bw] != zero]
            carry = 0
            prev = -2
            i = 0
            nidx = len(idx)
            while True:
                if carry:
                    s = prev + 1
                    if i < nidx and idx[i] == s:
                        i += 1
                elif i < nidx:
                    s = idx[i]
                    i += 1
                else:
                    break
                if s >= self.box:
                    raise ValueError("carry escaped the geometry")
                v = int.from_bytes(raw[s * bw:(s + 1) * bw], "little") + carry
                carry = 0
                if v >= half:
                    v -= R
                    carry = 1
                prev = s
                if v:
                    if abs(v) >= self.guard:
                        raise ValueError("coefficient near slot capacity")
                    rem = s
                    key = bk
                    for j, var in enumerate(self.kron_vars):
                        e = rem // self.strides[var]
                        rem %= self.strides[var]
                        if e:
                            key |= e << shifts[var]
                    out[key] = v if sign > 0 else -v
        return out

    # -- blocked ring operations -------------------------------------------------

    def mul(self, A: dict, B: dict) -> dict:
        if len(A) > len(B):
            A, B = B, A
        out: dict = {}
        for k1, v1 in A.items():
            for k2, v2 in B.items():
                k = k1 + k2
                prod = v1 * v2
                cur = out.get(k)
                out[k] = prod if cur is None else cur + prod
        return out

    def add(self, A: dict, B: dict) -> dict:
        out = dict(A)
        for k, v in B.items():
            cur = out.get(k)
            out[k] = v if cur is None else cur + v
        return out

    def sub(self, A: dict, B: dict) -> dict:
        out = dict(A)
        for k, v in B.items():
            cur = out.get(k)
            out[k] = -v if cur is None else cur - v
        return out

    def scale(self, A: dict, c: int) -> dict:
        if not c:
            return {}
        return {k: v * c for k, v in A.items()}

    def is_zero(self, A: dict) -> bool:
        return all(not v for v in A.values())


def _zmul_job(args):
    a, b, p, shifts = args
    return zmul(a, b, p, shifts)


def zmul_batch(jobs, p, shifts):
    """Multiply a list of (a, b) pairs, farming large independent products
    out to a small process pool when that pays for the pickling."""
    big = sum(1 for a, b in jobs if len(a) * len(b) > 2_000_000)
    if big >= 2:
        try:
            import multiprocessing as mp
            ctx = mp.get_context("fork")
            with ctx.Pool(2) as pool:
                return pool.map(_zmul_job,
                                [(a, b, p, shifts) for a, b in jobs])
        except Exception:  # pragma: no cover - fall back to serial
            pass
    return [zmul(a, b, p, shifts) for a, b in jobs]


_PROBE_PRIME = 2305843009213693951


def _divisible_probe(ring: ZRing, a: dict, b: dict) -> bool:
    """Univariate-image divisibility filter: cheap, with one-sided error
    (True may be wrong, False never is)."""
    q = _PROBE_PRIME
    shifts = ring._shifts
    nv = ring.nvars
    state = 0x9E3779B97F4A7C15
    main = 0
    best = -1
    for i in range(nv):
        d = max(((k >> shifts[i]) & MASK for k in b), default=0)
        if d > best:
            best, main = d, i
    if best <= 0:
        return True
    point = {}
    for j in range(nv):
        if j != main:
            state = (state * 6364136223846793005 + 1442695040888963407) \
                % (1 << 64)
            point[j] = state % (q - 1) + 1

    def img(f):
        out = [0] * (max(((k >> shifts[main]) & MASK for k in f),
                         default=-1) + 1)
        powcache: dict = {}
        for key, c in f.items():
            cv = c % q
            for i2, s in enumerate(shifts):
                if i2 == main:
                    continue
                e = (key >> s) & MASK
                if e:
                    ck = (i2, e)
                    if ck not in powcache:
                        powcache[ck] = pow(point[i2], e, q)
                    cv = cv * powcache[ck] % q
            d = (key >> shifts[main]) & MASK
            out[d] = (out[d] + cv) % q
        return out

    ia = img(a)
    ib = img(b)
    while ia and ia[-1] == 0:
        ia.pop()
    while ib and ib[-1] == 0:
        ib.pop()
    if not ib:
        return True  # unlucky evaluation; let the exact path decide
    if len(ia) < len(ib):
        return False
    inv = pow(ib[-1], -1, q)
    r = ia
    while r and len(r) - 1 >= len(ib) - 1:
        coef = r[-1] * inv % q
        shift = len(r) - len(ib)
        for i2, c in enumerate(ib):
            r[shift + i2] = (r[shift + i2] - coef * c) % q
        while r and r[-1] == 0:
            r.pop()
    return not r


def zdivexact_fast(ring: ZRing, a: dict, b: dict):
    """Exact division over Z through Kronecker codes.

    When a = q*b as polynomials, the integer codes satisfy a(R) = q(R)*b(R)
    exactly, so one GMP divmod yields q(R); a nonzero integer remainder
    certifies non-divisibility outright.  The decoded candidate is verified
    by one multiplication, so an accidental integer divisibility (or a slot
    overflow in the quotient) can never produce a wrong answer.  Returns
    None when a is not divisible by b."""
    if ring.p is not None:
        return zdivexact(ring, a, b)
    if not a:
        return {}
    if len(b) <= 12 or len(a) < 40:
        # the heap division costs ~|quotient|*|divisor|; cheap for small b
        return zdivexact(ring, a, b)
    if not _divisible_probe(ring, a, b):
        return None
    shifts = ring._shifts
    nv = ring.nvars
    da = [0] * nv
    for k in a:
        for i, s in enumerate(shifts):
            e = (k >> s) & MASK
            if e > da[i]:
                da[i] = e
    caps = [d + 1 for d in da]
    box = 1
    for c in caps:
        box *= c
    ca = max(abs(c) for c in a.values())
    cb = max(abs(c) for c in b.values())
    # slack: quotient coefficients are usually comparable to ca/cb level;
    # the decode guard plus verification catch underestimates
    bits = max(ca.bit_length(), cb.bit_length()) + 64
    db = [0] * nv
    for k in b:
        for i, s in enumerate(shifts):
            e = (k >> s) & MASK
            if e > db[i]:
                db[i] = e
    for _ in range(3):
        kc = KronContext(ring, caps, bits)
        try:
            ea = kc.encode(a)
            eb = kc.encode(b)
        except ValueError:
            return zdivexact(ring, a, b)
        quot, rem = divmod(ea, eb)
        if rem:
            return None
        try:
            cand = kc.decode(quot)
        except ValueError:
            bits *= 2
            continue
        # when deg_i(cand) + deg_i(b) stays inside the box for every
        # variable, the code evaluation is injective on cand*b, so the
        # integer identity already proves cand*b == a
        ok = True
        for k in cand:
            for i, s in enumerate(shifts):
                if ((k >> s) & MASK) + db[i] >= caps[i]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return cand
        if zmul(cand, b, None, shifts) == a:
            return cand
        bits *= 2
    return zdivexact(ring, a, b)


def zeval_partial_mod(ring: ZRing, a: dict, main: int, point: dict,
                      q: int) -> list:
    """Dense univariate image in `main` with the other variables evaluated
    mod q (coefficients must already be integers or residues)."""
    out = [0] * (zdeg_in(ring, a, main) + 1)
    shifts = ring._shifts
    powcache: dict = {}
    for key, c in a.items():
        cv = c % q
        for i, s in enumerate(shifts):
            if i == main:
                continue
            e = (key >> s) & MASK
            if e:
                ck = (i, e)
                if ck not in powcache:
                    powcache[ck] = pow(point[i], e, q)
                cv = cv * powcache[ck] % q
        d = (key >> shifts[main]) & MASK
        out[d] = (out[d] + cv) % q
    return out


# -- conversions to/from the public Poly type --------------------------------------

def poly_to_z(poly, ring: ZRing, scale: int = 1):
    """Fraction/int-coefficient Poly -> int dict (coefficients times scale,
    which must clear all denominators over Q)."""
    out = {}
    p = ring.p
    for e, c in poly.terms.items():
        if p is None:
            v = c * scale
            assert v.denominator == 1
            v = int(v)
        else:
            v = int(c) % p
        if v:
            out[ring.pack(e)] = v
    return out


def z_to_poly(a: dict, zring: ZRing, target_ring):
    from fractions import Fraction
    field = target_ring.field
    out = {}
    for k, c in a.items():
        e = zring.unpack(k)
        out[e] = Fraction(c) if zring.p is None else c % zring.p
    from .poly import Poly
    return Poly(target_ring, out)


def common_denominator(poly) -> int:
    den = 1
    for c in poly.terms.values():
        den = den * c.denominator // int_gcd(den, c.denominator)
    return den
