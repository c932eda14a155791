from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_nx
from distcospec.algebra import RingMatrix, UniPoly
from distcospec.distance import (
    DisconnectedGraphError,
    distance_matrix,
    exp_distance_at,
    exp_distance_mod,
    exp_distance_symbolic,
    generalized_distance_symbolic,
    level_decomposition,
)
from distcospec.graph import Graph
from test_graph import graphs


@settings(max_examples=80)
@given(graphs(max_n=9))
def test_levels_partition_the_finite_pairs(g):
    ld = level_decomposition(g)
    lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    for i in range(g.n):
        covered = 0
        for k in range(ld.d + 1):
            row = ld.level_rows(k)[i]
            assert covered & row == 0
            covered |= row
            for j in range(g.n):
                assert (row >> j & 1) == (lengths[i].get(j) == k)
        assert covered | ld.infinite[i] == (1 << g.n) - 1
    assert ld.matrix(0) == RingMatrix([[int(i == j) for j in range(g.n)] for i in range(g.n)])


@settings(max_examples=60)
@given(graphs(max_n=8), st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_exp_distance_forms_agree(g, q):
    sym = exp_distance_symbolic(g)
    at = exp_distance_at(g, q)
    for i in range(g.n):
        for j in range(g.n):
            assert Fraction(sym[i, j](q)) == at[i, j]
    p = 1000003
    qm = 12345
    mod = exp_distance_mod(g, qm, p)
    assert mod == [[sym[i, j](qm) % p for j in range(g.n)] for i in range(g.n)]


def test_disconnected_conventions():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    sym = exp_distance_symbolic(g)
    assert sym[0, 2] == UniPoly() and sym[0, 1] == UniPoly.var()
    assert exp_distance_at(g, Fraction(1, 2))[1, 3] == 0
    with pytest.raises(DisconnectedGraphError):
        distance_matrix(g)
    with pytest.raises(DisconnectedGraphError):
        generalized_distance_symbolic(g)


def test_distance_matrix_of_path():
    assert distance_matrix(Graph.path(3)).rows == ((0, 1, 2), (1, 0, 1), (2, 1, 0))
    gen = generalized_distance_symbolic(Graph.path(3), nvars=4)
    assert gen[0, 2].nvars == 4 and gen[0, 2].terms == {(0, 0, 1, 0): 1}
    with pytest.raises(ValueError):
        generalized_distance_symbolic(Graph.path(3), nvars=2)
