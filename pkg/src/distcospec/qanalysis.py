"""For which q are two graphs exponential-distance cospectral?

Per-q checks, the all-q locus (rational roots of a gcd of characteristic
polynomial coefficient differences), generalized-distance cospectrality, and
the finite-sample certificate: a single similarity matrix that intertwines
``D_q`` at ``d`` distinct nonzero ``q`` (``d`` the largest diameter) must
intertwine every distance level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import (
    ALL,
    DimensionError,
    RingMatrix,
    UniPoly,
    XPoly,
    charpoly,
    first_difference,
    format_unipoly,
    poly_gcd,
    rank,
    rational_roots,
)
from .distance import (
    exp_distance_at,
    exp_distance_symbolic,
    generalized_distance_symbolic,
    level_decomposition,
)
from .graph import Graph, bfs_distances


class SingularSimilarityError(ValueError):
    """The proposed similarity matrix is not invertible."""


def _same_order(g: Graph, h: Graph) -> None:
    if g.n != h.n:
        raise DimensionError(f"graphs have different orders: {g.n} and {h.n}")


def charpoly_q(g: Graph) -> XPoly:
    """``det(xI - D_q)`` with coefficients in Z[q]."""
    return charpoly(exp_distance_symbolic(g))


def charpoly_at(g: Graph, q) -> XPoly:
    """Characteristic polynomial of ``D_q`` at a rational ``q``."""
    return charpoly(exp_distance_at(g, q))


def specialize(p: XPoly, q) -> XPoly:
    """Evaluate every Z[q] coefficient at ``q``."""
    q = Fraction(q)
    return p.map_coeffs(lambda c: Fraction(c(q)))


def cospectral_at(g: Graph, h: Graph, q) -> bool:
    _same_order(g, h)
    return charpoly_at(g, q) == charpoly_at(h, q)


def charpoly_f(g: Graph, nvars: int | None = None) -> XPoly:
    """Characteristic polynomial of the generalized distance matrix over Z[t_0..]."""
    return charpoly(generalized_distance_symbolic(g, nvars))


def cospectral_generalized(g: Graph, h: Graph) -> bool:
    """Equal characteristic polynomials with one free variable per distance value."""
    _same_order(g, h)
    nv = max(bfs_distances(g).diameter, bfs_distances(h).diameter) + 1
    return charpoly_f(g, nv) == charpoly_f(h, nv)


@dataclass
class QLocus:
    """Where ``charpoly_q(g) - charpoly_q(h)`` vanishes.

    ``gcd`` is the primitive gcd of all coefficient differences (zero when
    the graphs are cospectral for every ``q``).  ``roots`` holds its rational
    roots, or ``ALL``.
    """

    gcd: UniPoly
    roots: object

    @property
    def identically_zero(self) -> bool:
        return self.gcd.is_zero()

    def roots_between(self, lo, hi) -> list[Fraction]:
        """Rational roots strictly between ``lo`` and ``hi``."""
        if self.identically_zero:
            raise ValueError("every q is a root")
        return sorted(r for r in self.roots if lo < r < hi)

    def to_json(self) -> dict:
        return {
            "identically_zero": self.identically_zero,
            "gcd": format_unipoly(self.gcd),
            "rational_roots": "all" if self.identically_zero else [str(r) for r in sorted(self.roots)],
        }


def q_locus_from_charpolys(pg: XPoly, ph: XPoly) -> QLocus:
    diff = pg - ph
    cs = [c if isinstance(c, UniPoly) else UniPoly.const(c) for c in diff.coeffs]
    cs = [c for c in cs if not c.is_zero()]
    if not cs:
        return QLocus(UniPoly(), ALL)
    g = poly_gcd(cs)
    return QLocus(g, rational_roots(g))


def q_locus(g: Graph, h: Graph) -> QLocus:
    _same_order(g, h)
    return q_locus_from_charpolys(charpoly_q(g), charpoly_q(h))


# -- finite-sample certificate ----------------------------------------------------


def max_component_diameter(g: Graph) -> int:
    return bfs_distances(g).diameter


@dataclass
class QCheck:
    q: Fraction
    ok: bool
    first_difference: tuple[int, int] | None = None


@dataclass
class QSampleResult:
    status: str  # "certified" | "incomplete" | "refuted"
    d: int
    checks: list[QCheck] = field(default_factory=list)
    levels_ok: bool | None = None  # per-level cross-check, run when certified

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "d": self.d,
            "checks": [
                {
                    "q": str(c.q),
                    "ok": c.ok,
                    "first_difference": None if c.first_difference is None
                    else [c.first_difference[0] + 1, c.first_difference[1] + 1],
                }
                for c in self.checks
            ],
            "levels_ok": self.levels_ok,
        }


def _as_matrix(s) -> RingMatrix:
    if isinstance(s, RingMatrix):
        return s.map(Fraction)
    return RingMatrix([Fraction(x) for x in row] for row in s)


def intertwines_levels(g: Graph, h: Graph, s: RingMatrix) -> bool:
    """``M_k(g) S = S M_k(h)`` for every finite distance level ``k``."""
    lg, lh = level_decomposition(g), level_decomposition(h)
    for k in range(max(lg.d, lh.d) + 1):
        if first_difference(lg.matrix(k) @ s, s @ lh.matrix(k)) is not None:
            return False
    return True


def verify_qsample(g: Graph, h: Graph, s, qs: Iterable) -> QSampleResult:
    """Check ``D_q(g) S = S D_q(h)`` at each sampled ``q``.

    All residuals zero at ``d`` or more distinct nonzero ``q`` gives
    ``certified``, and the per-level identity is then re-checked directly.
    Fewer samples gives ``incomplete``; any nonzero residual ``refuted``.
    Raises :class:`SingularSimilarityError` for a singular ``S``.
    """
    _same_order(g, h)
    s = _as_matrix(s)
    if s.n != g.n:
        raise DimensionError(f"similarity matrix is {s.n}x{s.n}, graphs have {g.n} vertices")
    if rank(s) < s.n:
        raise SingularSimilarityError("similarity matrix is singular")
    d = max(max_component_diameter(g), max_component_diameter(h))
    checks = []
    distinct = []
    for q in qs:
        q = Fraction(q)
        if q in distinct:
            continue
        distinct.append(q)
        diff = first_difference(exp_distance_at(g, q) @ s, s @ exp_distance_at(h, q))
        checks.append(QCheck(q, diff is None, diff))
    if any(not c.ok for c in checks):
        return QSampleResult("refuted", d, checks)
    if sum(1 for q in distinct if q != 0) < d:
        return QSampleResult("incomplete", d, checks)
    return QSampleResult("certified", d, checks, intertwines_levels(g, h, s))


DEFAULT_PROBE_QS: tuple[Fraction, ...] = tuple(
    Fraction(a, b) for b in range(2, 8) for a in range(1, b) if Fraction(a, b).denominator == b
) + (Fraction(2), Fraction(3), Fraction(-1), Fraction(-2))


@dataclass
class ProbeReport:
    successes: list[Fraction]
    tried: list[Fraction]
    levels_ok: bool

    @property
    def counterexample(self) -> bool:
        """Two or more intertwining ``q`` without the per-level identity."""
        return len(self.successes) >= 2 and not self.levels_ok

    def to_json(self) -> dict:
        return {
            "tried": [str(q) for q in self.tried],
            "successes": [str(q) for q in self.successes],
            "levels_ok": self.levels_ok,
            "counterexample": self.counterexample,
        }


def conjecture_probe(g: Graph, h: Graph, s, qs: Sequence = DEFAULT_PROBE_QS) -> ProbeReport:
    """Record the sampled ``q`` at which ``S`` intertwines ``D_q(g)`` and ``D_q(h)``.

    Evidence only: a report with two successes and a failing per-level check
    is a witness worth inspecting, nothing more is concluded.
    """
    _same_order(g, h)
    s = _as_matrix(s)
    tried, hits = [], []
    for q in qs:
        q = Fraction(q)
        if q == 0 or q in tried:
            continue
        tried.append(q)
        if first_difference(exp_distance_at(g, q) @ s, s @ exp_distance_at(h, q)) is None:
            hits.append(q)
    return ProbeReport(hits, tried, intertwines_levels(g, h, s))
