from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fixture_graph, fixture_text
from distcospec.algebra import ALL, DimensionError, RingMatrix, format_xpoly, identity
from distcospec.families import fig5_pair, fig6_pair, path_charpoly
from distcospec.graph import Graph, are_isomorphic, bfs_distances, is_connected, parse_graph6
from distcospec.qanalysis import (
    SingularSimilarityError,
    charpoly_at,
    charpoly_q,
    conjecture_probe,
    cospectral_at,
    cospectral_generalized,
    max_component_diameter,
    q_locus,
    specialize,
    verify_qsample,
)
from distcospec.switching import apply_switch, build_similarity, parse_config, random_valid_config
from test_graph import graphs

HALF = Fraction(1, 2)


def fig3():
    c = parse_config(fixture_text("fig3.config"))
    return fixture_graph("fig3-g1.txt"), fixture_graph("fig3-g2.txt"), build_similarity(c).vertex_matrix()


def test_path_on_two_vertices():
    assert format_xpoly(charpoly_q(Graph.path(2))) == "x^2 - 2*x + 1 - q^2"


def test_charpoly_q_matches_sympy():
    q, x = sympy.symbols("q x")
    g = fixture_graph("fig3-g1.txt")
    m = sympy.Matrix([[q**d for d in row] for row in bfs_distances(g).dist])
    want = sympy.Poly(m.charpoly(x).as_expr(), x).all_coeffs()[::-1]
    got = charpoly_q(g)
    for k, c in enumerate(want):
        assert sympy.expand(c - sum(a * q**i for i, a in enumerate(got.coeffs[k].coeffs))) == 0


def test_disjoint_union_multiplies():
    g, h = Graph.cycle(4), Graph.path(3)
    assert charpoly_q(g.disjoint_union(h)) == charpoly_q(g) * charpoly_q(h)


def test_path_three_matches_recursion():
    assert charpoly_q(Graph.path(3)) == path_charpoly(3)


@settings(max_examples=40)
@given(graphs(max_n=7), st.fractions(min_value=-2, max_value=2, max_denominator=6))
def test_specialization_commutes_with_charpoly(g, q):
    assert specialize(charpoly_q(g), q) == charpoly_at(g, q)


def test_cospectral_at_examples():
    g = fixture_graph("fig3-g1.txt")
    assert cospectral_at(g, g, Fraction(3, 7))
    p = fig5_pair(9)
    assert cospectral_at(p.g, p.h, HALF)
    assert not cospectral_at(p.g, p.h, Fraction(1, 3))
    with pytest.raises(DimensionError):
        cospectral_at(Graph.path(3), Graph.path(4), HALF)


def test_q_locus_examples():
    g = fixture_graph("fig2-g1.txt")
    assert q_locus(g, g).identically_zero and q_locus(g, g).roots is ALL
    for pair in (fig5_pair(9), fig6_pair(9), fig5_pair(10)):
        loc = q_locus(pair.g, pair.h)
        assert not loc.identically_zero
        assert HALF in loc.roots
        assert loc.roots_between(0, 1) == [HALF]
        for r in loc.roots:
            assert charpoly_at(pair.g, r) == charpoly_at(pair.h, r)


def test_generalized_cospectrality():
    g1, g2, _ = fig3()
    assert cospectral_generalized(g1, g2)
    assert cospectral_generalized(g1, g1.relabel([6, 5, 4, 3, 2, 1, 0]))
    # cospectral for every q but not for every function of distance
    a, b = parse_graph6("F?C}W"), parse_graph6("F?Otw")
    assert q_locus(a, b).identically_zero
    assert not cospectral_generalized(a, b)


@settings(max_examples=40)
@given(graphs(max_n=6), graphs(max_n=6))
def test_zero_and_one_are_always_roots(g, h):
    if g.n != h.n or not (is_connected(g) and is_connected(h)) or are_isomorphic(g, h):
        return
    loc = q_locus(g, h)
    if not loc.identically_zero:
        assert {Fraction(0), Fraction(1)} <= loc.roots


# -- finite-sample certificate ------------------------------------------------------------


def test_qsample_certified_incomplete_refuted():
    g1, g2, s = fig3()
    res = verify_qsample(g1, g2, s, [HALF, Fraction(1, 3)])
    assert res.status == "certified" and res.d == 2 and res.levels_ok
    assert verify_qsample(g1, g2, s, [HALF]).status == "incomplete"
    assert verify_qsample(g1, g2, s, [HALF, HALF, 0]).status == "incomplete"
    eye = identity(7, Fraction(1), Fraction(0))
    res = verify_qsample(g1, g2, eye, [HALF, Fraction(1, 3)])
    assert res.status == "refuted" and not any(c.ok for c in res.checks)


def test_qsample_singular_and_size_errors():
    g1, g2, _ = fig3()
    zero = RingMatrix([[0] * 7 for _ in range(7)])
    with pytest.raises(SingularSimilarityError):
        verify_qsample(g1, g2, zero, [HALF, Fraction(1, 3)])
    with pytest.raises(DimensionError):
        verify_qsample(g1, g2, identity(3, 1, 0), [HALF])


def test_certified_samples_imply_generalized_cospectrality():
    rng = random.Random(9)
    done = 0
    while done < 15:
        g, c = random_valid_config(rng)
        if g.n > 10:
            continue
        h = apply_switch(g, c)
        s = build_similarity(c, g.n).vertex_matrix()
        d = max(max_component_diameter(g), max_component_diameter(h))
        qs = rng.sample([Fraction(k, 11) for k in range(1, 30)], d)
        res = verify_qsample(g, h, s, qs)
        assert res.status == "certified" and res.levels_ok
        assert cospectral_generalized(g, h)
        done += 1


def test_conjecture_probe():
    g1, g2, s = fig3()
    rep = conjecture_probe(g1, g2, s)
    assert rep.successes == rep.tried and rep.levels_ok and not rep.counterexample
    eye = identity(5, Fraction(1), Fraction(0))
    rep = conjecture_probe(Graph.path(5), Graph.cycle(5), eye)
    assert rep.successes == [] and not rep.counterexample


def test_two_successes_suffice_at_diameter_two():
    """Diameter-two pairs: any S intertwining at two nonzero q intertwines every level."""
    rng = random.Random(4)
    hits = 0
    for _ in range(60):
        g, c = random_valid_config(rng)
        h = apply_switch(g, c)
        if max(max_component_diameter(g), max_component_diameter(h)) != 2:
            continue
        for s in (build_similarity(c, g.n).vertex_matrix(), identity(g.n, Fraction(1), Fraction(0))):
            rep = conjecture_probe(g, h, s)
            if len(rep.successes) >= 2:
                assert rep.levels_ok
                hits += 1
    assert hits > 0
