"""Square matrices over a commutative ring and their characteristic polynomials.

Entries may be ``int``, ``Fraction``, :class:`UniPoly` or :class:`MultiPoly`;
anything supporting ``+``, ``-`` and ``*`` with ints works.  The
characteristic polynomial is ``det(xI - M)`` computed with Berkowitz's
division-free algorithm, so no fraction field is ever needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence


class DimensionError(ValueError):
    pass


class XPoly:
    """Polynomial in ``x`` whose coefficients live in some ring.

    ``coeffs[k]`` is the coefficient of ``x^k``.  Trailing zeros are trimmed.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> XPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly(out)

    __radd__ = __add__

    def __neg__(self) -> XPoly:
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return XPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            for j, v in enumerate(b):
                out[i + j] = out[i + j] + u * v
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> XPoly:
        out = XPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            other = XPoly((other,))
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"XPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        from .polytext import format_xpoly

        return format_xpoly(self)

    def map_coeffs(self, f: Callable) -> XPoly:
        """Apply ``f`` to every coefficient, e.g. to specialize ``q``."""
        return XPoly(f(c) for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


class RingMatrix:
    """Immutable square matrix with entries from one commutative ring."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(r) for r in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise DimensionError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def _check(self, other: RingMatrix) -> None:
        if self.n != other.n:
            raise DimensionError(f"size mismatch: {self.n} vs {other.n}")

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        self._check(other)
        cols = list(zip(*other.rows))
        return RingMatrix(
            [_dot(row, col) for col in cols] for row in self.rows
        )

    def __add__(self, other: RingMatrix) -> RingMatrix:
        self._check(other)
        return RingMatrix(
            [a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        self._check(other)
        return RingMatrix(
            [a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def __mul__(self, scalar) -> RingMatrix:
        return RingMatrix([a * scalar for a in r] for r in self.rows)

    __rmul__ = __mul__

    def __neg__(self) -> RingMatrix:
        return RingMatrix([-a for a in r] for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return mat_equal(self, other)

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"RingMatrix({[list(r) for r in self.rows]!r})"

    def transpose(self) -> RingMatrix:
        return RingMatrix(zip(*self.rows))

    def map(self, f: Callable) -> RingMatrix:
        return RingMatrix([f(a) for a in r] for r in self.rows)

    def permute(self, order: Sequence[int]) -> RingMatrix:
        """Rows and columns reordered so that new index ``i`` is old ``order[i]``."""
        return RingMatrix([self.rows[i][j] for j in order] for i in order)

    def mat_vec(self, v: Sequence) -> list:
        return [_dot(r, v) for r in self.rows]


def _dot(a: Sequence, b: Sequence):
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def identity(n: int, one=1, zero=0) -> RingMatrix:
    return RingMatrix([one if i == j else zero for j in range(n)] for i in range(n))


def all_ones(n: int, one=1) -> RingMatrix:
    return RingMatrix([one] * n for _ in range(n))


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return a @ b


def mat_equal(a: RingMatrix, b: RingMatrix) -> bool:
    """Exact entrywise equality; raises on a size mismatch."""
    a._check(b)
    return all(x == y for r, s in zip(a.rows, b.rows) for x, y in zip(r, s))


def first_difference(a: RingMatrix, b: RingMatrix) -> tuple[int, int] | None:
    a._check(b)
    for i, (r, s) in enumerate(zip(a.rows, b.rows)):
        for j, (x, y) in enumerate(zip(r, s)):
            if x != y:
                return i, j
    return None


def charpoly(m: RingMatrix) -> XPoly:
    """Monic ``det(xI - M)`` by Berkowitz's algorithm (no divisions)."""
    n = m.n
    A = m.rows
    p: list = [1]  # descending coefficients for the leading r x r block
    for r in range(n):
        a = A[r][r]
        col = [1, -a]
        if r:
            row = A[r][:r]
            v = [A[i][r] for i in range(r)]
            for k in range(r):
                col.append(-_dot(row, v))
                if k < r - 1:
                    v = [_dot(A[i][:r], v) for i in range(r)]
        newp = []
        for i in range(r + 2):
            acc = 0
            for j in range(max(0, i - len(col) + 1), min(i, r) + 1):
                c = col[i - j]
                if c and p[j]:
                    acc = acc + c * p[j]
            newp.append(acc)
        p = newp
    if n:
        # plain ints left over from the recursion become ring elements
        one = A[0][0] * 0 + 1
        p = [one * c if isinstance(c, int) else c for c in p]
    return XPoly(reversed(p))


def det(m: RingMatrix):
    """Determinant through the same division-free machinery."""
    if m.n == 0:
        return 1
    c0 = charpoly(m).coeffs
    c0 = c0[0] if c0 else 0
    return c0 if m.n % 2 == 0 else -c0


def rank(m: RingMatrix) -> int:
    """Rank of a rational (or integer) matrix by exact elimination."""
    rows = [[Fraction(x) for x in r] for r in m.rows]
    n = len(rows)
    rk = 0
    for col in range(n):
        piv = next((i for i in range(rk, n) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        pv = rows[rk][col]
        for i in range(rk + 1, n):
            if rows[i][col]:
                f = rows[i][col] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def inverse(m: RingMatrix) -> RingMatrix:
    """Exact inverse over the rationals; raises ``ZeroDivisionError`` if singular."""
    n = m.n
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(m.rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return RingMatrix(r[n:] for r in aug)


def block_diag(*blocks: RingMatrix, zero=0) -> RingMatrix:
    n = sum(b.n for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for r in b.rows:
            rows.append([zero] * off + list(r) + [zero] * (n - off - b.n))
        off += b.n
    return RingMatrix(rows)
