"""Polynomial text grammar.

Terms look like ``c*x0^2*x3`` with ``+``/``-`` separators; coefficients are
integers or ``a/b`` fractions (and, over extension fields, expressions in the
generator ``w`` such as ``w`` or ``2*w^2``); exponents use ``^``; whitespace
is insignificant.  Variables are ``x0..xN`` by default or any declared list of
names.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .fields import ExtensionField, Field, Rationals
from .poly import Poly, PolyRing

_TOKEN = re.compile(r"""
    (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[\^*+\-()])
""", re.VERBOSE)

_DEFAULT_VAR = re.compile(r"^x(\d+)$")


def _tokenize(text: str):
    out = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if text[pos:m.start()].strip():
            raise ParseError(f"unexpected {text[pos:m.start()]!r} in form")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group()))
    if text[pos:].strip():
        raise ParseError(f"unexpected {text[pos:]!r} at end of form")
    return out


def _scan_default_variables(tokens) -> list[str]:
    top = -1
    for kind, val in tokens:
        if kind == "name":
            m = _DEFAULT_VAR.match(val)
            if m:
                top = max(top, int(m.group(1)))
    if top < 0:
        raise ParseError("form uses no x<i> variables; declare names explicitly")
    return [f"x{i}" for i in range(top + 1)]


def parse_polynomial(text: str, field: Field,
                     variables: list[str] | None = None) -> Poly:
    """Parse a sum of monomial terms over the given field.

    With ``variables=None`` the variable list is inferred as ``x0..xN`` from
    the highest index used, so that e.g. a form in P^3 mentions x3 and gets
    exactly four variables.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    if variables is None:
        variables = _scan_default_variables(tokens)
    ring = PolyRing(field, variables)
    index = {n: i for i, n in enumerate(variables)}
    gen_name = "w" if isinstance(field, ExtensionField) else None

    terms: dict = {}
    f = field
    sign = 1
    i = 0
    n = len(tokens)

    def flush(coeff, exps):
        key = tuple(exps)
        cur = terms.get(key)
        terms[key] = coeff if cur is None else f.add(cur, coeff)

    while i < n:
        # sign prefix
        sign = 1
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ParseError("dangling sign at end of form")
        coeff = f.one()
        exps = [0] * len(variables)
        saw_factor = False
        while True:
            kind, val = tokens[i]
            if kind == "num":
                if "/" in val:
                    if not isinstance(f, Rationals):
                        raise ParseError(
                            f"fraction coefficient {val!r} outside Q")
                    a, b = val.split("/")
                    if int(b) == 0:
                        raise ParseError(f"zero denominator in {val!r}")
                    c = f.coerce(Fraction(int(a), int(b)))
                else:
                    c = f.coerce(int(val))
                coeff = f.mul(coeff, c)
            elif kind == "name":
                if val in index:
                    e = 1
                    if i + 2 < n and tokens[i + 1] == ("op", "^"):
                        if tokens[i + 2][0] != "num" or "/" in tokens[i + 2][1]:
                            raise ParseError(f"bad exponent after {val}")
                        e = int(tokens[i + 2][1])
                        i += 2
                    exps[index[val]] += e
                elif val == gen_name:
                    e = 1
                    if i + 2 < n and tokens[i + 1] == ("op", "^"):
                        if tokens[i + 2][0] != "num":
                            raise ParseError("bad exponent after w")
                        e = int(tokens[i + 2][1])
                        i += 2
                    coeff = f.mul(coeff, f.pow(f.w, e))
                else:
                    raise ParseError(f"unknown variable {val!r}")
            else:
                raise ParseError(f"unexpected {val!r} in term")
            saw_factor = True
            # continue the same term only across '*'
            if i + 1 < n and tokens[i + 1] == ("op", "*"):
                i += 2
                if i >= n:
                    raise ParseError("dangling '*' at end of form")
                continue
            i += 1
            break
        if not saw_factor:
            raise ParseError("empty term")
        if sign < 0:
            coeff = f.neg(coeff)
        if coeff:
            flush(coeff, exps)

    return Poly(ring, {e: c for e, c in terms.items() if c})


def parse_point(text: str, field: Field, expect: int | None = None):
    """Parse a comma-separated coordinate tuple of field scalars."""
    parts = [p.strip() for p in text.split(",")]
    if expect is not None and len(parts) != expect:
        raise ParseError(f"expected {expect} coordinates, got {len(parts)}")
    out = []
    for p in parts:
        if not p:
            raise ParseError("empty coordinate")
        try:
            out.append(field.from_str(p))
        except ParseError:
            raise
        except Exception as e:
            raise ParseError(f"bad coordinate {p!r}: {e}")
    return out


def format_polynomial(p: Poly) -> str:
    return str(p)
