"""Exact polynomials with unbounded integer coefficients.

``UniPoly`` is a dense univariate polynomial (default variable ``q``).
``MultiPoly`` is a sparse polynomial in a fixed number of variables
``t_0 .. t_{k-1}``.  Both interoperate with plain ``int`` operands so that
generic matrix code can start from ``0`` and ``1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping

from sympy import divisors


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class UniPoly:
    """Dense polynomial ``c[0] + c[1]*q + ... + c[d]*q^d`` over the integers."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)
        self._hash = None

    @classmethod
    def const(cls, c: int) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> UniPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def var(cls) -> UniPoly:
        return cls((0, 1))

    @property
    def degree(self) -> float | int:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> UniPoly | None:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPoly:
        result = UniPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like ints so mixed int/UniPoly keys agree
            self._hash = hash(self.coeffs[0] if len(self.coeffs) == 1 else
                              (0 if not self.coeffs else ("UniPoly", self.coeffs)))
        return self._hash

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        from .polytext import format_unipoly

        return format_unipoly(self)

    # -- evaluation and division ------------------------------------------

    def __call__(self, value):
        """Horner evaluation at an int, Fraction, or anything ring-like."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> UniPoly:
        """Content removed, leading coefficient made positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lead < 0:
            c = -c
        return UniPoly(x // c for x in self.coeffs)

    def pseudo_rem(self, other: UniPoly) -> UniPoly:
        """Remainder of ``lead(other)^k * self`` divided by ``other``."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        lb = other.lead
        while len(r) - 1 >= db and r:
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [x * lb for x in r]
            for i, c in enumerate(other.coeffs):
                r[i + shift] -= lr * c
            r = list(_trim(r))
        return UniPoly(r)

    def exact_div(self, other: UniPoly) -> UniPoly:
        """Quotient when ``other`` divides ``self`` over Z; raises otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        quot = [0] * max(len(r) - db, 0)
        while r and len(r) - 1 >= db:
            shift = len(r) - 1 - db
            c, m = divmod(r[-1], other.lead)
            if m:
                raise ValueError("inexact polynomial division")
            quot[shift] = c
            for i, oc in enumerate(other.coeffs):
                r[i + shift] -= c * oc
            r = list(_trim(r))
        if r:
            raise ValueError("inexact polynomial division")
        return UniPoly(quot)

    def derivative(self) -> UniPoly:
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)


def poly_gcd(polys: Iterable[UniPoly]) -> UniPoly:
    """Primitive gcd over Z[q] with positive leading coefficient.

    Zero inputs are ignored; an all-zero list yields the zero polynomial.
    """
    polys = list(polys)
    if not polys:
        raise ValueError("poly_gcd of an empty list")
    g = UniPoly()
    for p in polys:
        g = _gcd2(g, p)
    return g


def _gcd2(a: UniPoly, b: UniPoly) -> UniPoly:
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, r.primitive()
    return a.primitive()


def _divisors(m: int) -> list[int]:
    return divisors(abs(m))


class AllValues:
    """Sentinel returned by :func:`rational_roots` for the zero polynomial."""

    def __repr__(self) -> str:
        return "ALL"

    def __str__(self) -> str:
        return "all q"


ALL = AllValues()


def rational_roots(p: UniPoly) -> set[Fraction] | AllValues:
    """All rational roots of ``p`` via the rational-root theorem.

    Candidates are checked by exact evaluation.  The zero polynomial has every
    value as a root and returns :data:`ALL`.
    """
    if p.is_zero():
        return ALL
    coeffs = list(p.primitive().coeffs)
    roots: set[Fraction] = set()
    # strip factors of q
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return roots
    core = UniPoly(coeffs)
    for num in _divisors(coeffs[0]):
        for den in _divisors(coeffs[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and core(cand) == 0:
                    roots.add(cand)
    return roots


class MultiPoly:
    """Sparse polynomial over Z in ``nvars`` variables.

    Terms are stored as ``{exponent_tuple: coefficient}`` with no zero
    coefficients.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def const(cls, nvars: int, c: int) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, k: int) -> MultiPoly:
        if not 0 <= k < nvars:
            raise IndexError(f"variable t_{k} outside t_0..t_{nvars - 1}")
        e = [0] * nvars
        e[k] = 1
        return cls(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return MultiPoly.const(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.const(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            zero = (0,) * self.nvars
            if not self.terms:
                self._hash = hash(0)
            elif len(self.terms) == 1 and zero in self.terms:
                self._hash = hash(self.terms[zero])
            else:
                self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.terms!r})"

    def __str__(self) -> str:
        from .polytext import format_multipoly

        return format_multipoly(self)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def embed(self, nvars: int) -> MultiPoly:
        """Same polynomial viewed in a ring with more variables."""
        if nvars < self.nvars:
            if any(any(e[nvars:]) for e in self.terms):
                raise ValueError("cannot drop variables that occur")
            return MultiPoly(nvars, {e[:nvars]: c for e, c in self.terms.items()})
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly(nvars, {e + pad: c for e, c in self.terms.items()})

    def substitute(self, values):
        """Replace ``t_k`` by ``values[k]`` (ints, Fractions, UniPoly, ...)."""
        acc = 0
        for e, c in self.terms.items():
            term = c
            for k, p in enumerate(e):
                if p:
                    term = term * values[k] ** p
            acc = acc + term
        return acc
