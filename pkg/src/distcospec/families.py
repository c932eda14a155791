"""Two infinite families cospectral only at q = 1/2, and the path recursion.

Each pair is a connected graph ``G`` containing a long induced path and a
disconnected mate ``H``: a six-vertex graph plus the path ``P_{n-6}``.
Labels below are 1-based in docstrings, 0-based in code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import UniPoly, XPoly, parse_xpoly
from .graph import Graph, GraphError

MIN_FAMILY_ORDER = 8

FAMILIES = ("fig5", "fig6")


@dataclass(frozen=True)
class FamilyPair:
    family: str
    n: int
    g: Graph
    h: Graph


def path_charpoly(n: int) -> XPoly:
    """``det(xI - D_q(P_n))`` from the three-term recursion.

    ``P_n = ((q^2 + 1) x - 1 + q^2) P_{n-1} - x^2 q^2 P_{n-2}`` with
    ``P_0 = 1`` and ``P_1 = x - 1``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    q2 = UniPoly.monomial(2)
    a = XPoly([q2 - 1, q2 + 1])
    b = XPoly([0, 0, q2])
    prev, cur = XPoly([UniPoly.const(1)]), XPoly([UniPoly.const(-1), UniPoly.const(1)])
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, a * cur - b * prev
    return cur


def _check_n(n: int) -> None:
    if n < MIN_FAMILY_ORDER:
        raise GraphError(f"family pairs need n >= {MIN_FAMILY_ORDER}, got {n}")


def _path_edges(start: int, stop: int) -> list[tuple[int, int]]:
    return [(v, v + 1) for v in range(start, stop - 1)]


def fig5_pair(n: int) -> FamilyPair:
    """``G``: triangle ``1 2 n``, two triangles ``3 4 7`` and ``5 6 7`` meeting
    at 7, and the path ``7 .. n``.  ``H``: vertices 3 and 4 joined to each
    other and to everything in ``{1..6}``, plus edges ``1 2`` and ``5 6``;
    the path ``7 .. n`` is its own component.
    """
    _check_n(n)
    last = n - 1
    g_edges = [(0, 1), (0, last), (1, last), (2, 3), (4, 5), (2, 6), (3, 6), (4, 6), (5, 6)]
    g_edges += _path_edges(6, n)
    hub = [(a, b) for a in (2, 3) for b in range(6) if a != b]
    h_edges = sorted({tuple(sorted(e)) for e in hub}) + [(0, 1), (4, 5)]
    h_edges += _path_edges(6, n)
    return FamilyPair("fig5", n, Graph.from_edges(n, g_edges), Graph.from_edges(n, h_edges))


def fig6_pair(n: int) -> FamilyPair:
    """``G``: ``K_5`` on ``{3..7}``, the path ``7 .. n``, and edges ``1 n``,
    ``2 n``.  ``H``: ``K_6`` on ``{1..6}`` minus the edge ``2 5``, plus the
    path ``7 .. n`` as its own component.
    """
    _check_n(n)
    last = n - 1
    k5 = [(a, b) for a in range(2, 7) for b in range(a + 1, 7)]
    g_edges = k5 + _path_edges(6, n) + [(0, last), (1, last)]
    k6 = [(a, b) for a in range(6) for b in range(a + 1, 6) if (a, b) != (1, 4)]
    h_edges = k6 + _path_edges(6, n)
    return FamilyPair("fig6", n, Graph.from_edges(n, g_edges), Graph.from_edges(n, h_edges))


def family_pair(family: str, n: int) -> FamilyPair:
    if family == "fig5":
        return fig5_pair(n)
    if family == "fig6":
        return fig6_pair(n)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


_H_FACTORS = {
    "fig5": "(2*q^2 - q + x - 1) * (q + x - 1)^3 * (2*q^3 - 2*q^2*x - 5*q^2 - 2*q*x + x^2 + 2*q - 2*x + 1)",
    "fig6": "(q^2 + x - 1) * (q + x - 1)^3 * (3*q^3 - q^2*x - 7*q^2 - 3*q*x + x^2 + 3*q - 2*x + 1)",
}


def closed_form_H(family: str, n: int) -> XPoly:
    """Factored characteristic polynomial of ``H``, expanded over Z[q]."""
    if family not in _H_FACTORS:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    _check_n(n)
    return parse_xpoly(_H_FACTORS[family]) * path_charpoly(n - 6)
