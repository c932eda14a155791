"""Canonical text form for polynomials, and a parser for it.

Canonical form for characteristic polynomials: powers of ``x`` descending,
each coefficient written as an integer polynomial in ``q`` (or in
``t0, t1, ...``) with its monomials in ascending order, e.g.
``x^2 - 2*x + 1 - q^2``.  Coefficients of positive powers of ``x`` with more
than one monomial are parenthesized: ``x^2 + (-2 - 2*q)*x + 1 - q^2``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .matrix import XPoly
from .poly import MultiPoly, UniPoly


class PolySyntaxError(ValueError):
    pass


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def _uni_terms(p, var: str) -> list[tuple[int, str]]:
    """(coefficient, monomial) pairs, ascending."""
    if isinstance(p, (int, Fraction)):
        return [(p, "")] if p else []
    return [(c, _power(var, k)) for k, c in enumerate(p.coeffs) if c]


def _multi_terms(p, names: list[str] | None = None) -> list[tuple[int, str]]:
    if isinstance(p, int):
        return [(p, "")] if p else []
    names = names or [f"t{k}" for k in range(p.nvars)]
    out = []
    # graded reverse order keeps t0 first; ascending total degree
    for e in sorted(p.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
        mono = "*".join(_power(names[k], x) for k, x in enumerate(e) if x)
        out.append((p.terms[e], mono))
    return out


def _join(terms: list[tuple[int, str]], first: bool) -> str:
    parts = []
    for c, mono in terms:
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if not parts and first:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def format_unipoly(p: UniPoly, var: str = "q") -> str:
    terms = _uni_terms(p, var)
    return _join(terms, True) if terms else "0"


def format_multipoly(p: MultiPoly, names: list[str] | None = None) -> str:
    terms = _multi_terms(p, names)
    return _join(terms, True) if terms else "0"


def _coeff_terms(c, var: str):
    if isinstance(c, MultiPoly):
        return _multi_terms(c)
    return _uni_terms(c, var)


def format_xpoly(xp: XPoly, var: str = "q", xvar: str = "x") -> str:
    """Descending in ``x``; coefficients via :func:`format_unipoly` rules."""
    chunks: list[str] = []
    for k in range(len(xp.coeffs) - 1, -1, -1):
        terms = _coeff_terms(xp.coeffs[k], var)
        if not terms:
            continue
        first = not chunks
        xpow = _power(xvar, k)
        if k == 0:
            chunks.append(_join(terms, first))
        elif len(terms) == 1:
            c, mono = terms[0]
            mono = f"{mono}*{xpow}" if mono else xpow
            chunks.append(_join([(c, mono)], first))
        else:
            inner = _join(terms, True)
            chunks.append(f"({inner})*{xpow}" if first else f"+ ({inner})*{xpow}")
    return " ".join(chunks) if chunks else "0"


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")

# a parsed polynomial: {((var, exp), ...) sorted: coefficient}
_Poly = dict


def _padd(a: _Poly, b: _Poly, sign: int = 1) -> _Poly:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + sign * c
        if not out[m]:
            del out[m]
    return out


def _pmul(a: _Poly, b: _Poly) -> _Poly:
    out: _Poly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            d = dict(m1)
            for v, e in m2:
                d[v] = d.get(v, 0) + e
            m = tuple(sorted(d.items()))
            out[m] = out.get(m, 0) + c1 * c2
            if not out[m]:
                del out[m]
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise PolySyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
            num, name, op = m.groups()
            if num is not None:
                self.toks.append(("num", int(num)))
            elif name is not None:
                self.toks.append(("var", name))
            else:
                self.toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> _Poly:
        if not self.toks:
            raise PolySyntaxError("empty expression")
        p = self.expr()
        if self.i != len(self.toks):
            raise PolySyntaxError(f"trailing input at token {self.i}")
        return p

    def expr(self) -> _Poly:
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        acc = _padd({}, self.term(), sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            acc = _padd(acc, self.term(), 1 if op == "+" else -1)
        return acc

    def term(self) -> _Poly:
        acc = self.factor()
        while True:
            t = self.peek()
            if t == ("op", "*"):
                self.take()
                acc = _pmul(acc, self.factor())
            elif t[0] in ("num", "var") or t == ("op", "("):
                acc = _pmul(acc, self.factor())  # implicit product
            else:
                return acc

    def factor(self) -> _Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, k = self.take()
            if kind != "num":
                raise PolySyntaxError("exponent must be a non-negative integer")
            out: _Poly = {(): 1}
            for _ in range(k):
                out = _pmul(out, base)
            return out
        return base

    def atom(self) -> _Poly:
        kind, val = self.take()
        if kind == "num":
            return {(): val} if val else {}
        if kind == "var":
            return {((val, 1),): 1}
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.take() != ("op", ")"):
                raise PolySyntaxError("missing ')'")
            return p
        if (kind, val) == ("op", "-"):
            return _padd({}, self.factor(), -1)
        raise PolySyntaxError(f"unexpected token {val!r}")


_TVAR = re.compile(r"t_?(\d+)$")


def parse_xpoly(text: str, var: str = "q", xvar: str = "x") -> XPoly:
    """Parse a polynomial in ``x`` and ``q`` (or ``t0``, ``t1``, ...).

    Coefficients come back as :class:`UniPoly` when only ``q`` occurs besides
    ``x``, and as :class:`MultiPoly` when ``t`` variables occur.
    """
    raw = _Parser(text).parse()
    names = {v for m in raw for v, _ in m} - {xvar}
    tvars = {}
    for v in names:
        mt = _TVAR.match(v)
        if mt:
            tvars[v] = int(mt.group(1))
        elif v != var:
            raise PolySyntaxError(f"unknown variable {v!r}")
    if tvars and var in names:
        raise PolySyntaxError("cannot mix q with t variables")
    if tvars:
        nv = max(tvars.values()) + 1
        by_x: dict[int, MultiPoly] = {}
        for m, c in raw.items():
            d = dict(m)
            k = d.pop(xvar, 0)
            e = [0] * nv
            for v, x in d.items():
                e[tvars[v]] = x
            by_x[k] = by_x.get(k, MultiPoly(nv)) + MultiPoly(nv, {tuple(e): c})
        deg = max(by_x, default=-1)
        return XPoly(by_x.get(k, MultiPoly(nv)) for k in range(deg + 1))
    by_x_u: dict[int, UniPoly] = {}
    for m, c in raw.items():
        d = dict(m)
        k = d.pop(xvar, 0)
        by_x_u[k] = by_x_u.get(k, UniPoly()) + UniPoly.monomial(d.get(var, 0), c)
    deg = max(by_x_u, default=-1)
    return XPoly(by_x_u.get(k, UniPoly()) for k in range(deg + 1))


def parse_unipoly(text: str, var: str = "q") -> UniPoly:
    xp = parse_xpoly(text, var=var, xvar="\0")
    return xp.coeffs[0] if xp.coeffs else UniPoly()
