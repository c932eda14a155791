from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from distcospec.algebra import (
    DEFAULT_PRIME,
    DimensionError,
    RingMatrix,
    UniPoly,
    XPoly,
    block_diag,
    charpoly,
    det,
    first_difference,
    identity,
    inverse,
    modular_charpoly,
    rank,
)

X, Q = sympy.symbols("x q")


def square(max_n=6, lo=-5, hi=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def sympy_charpoly_coeffs(rows) -> list:
    return list(reversed(sympy.Matrix(rows).charpoly(X).all_coeffs()))


@settings(max_examples=80)
@given(square())
def test_charpoly_matches_sympy_over_integers(rows):
    p = charpoly(RingMatrix(rows))
    assert p.is_monic()
    assert list(p.coeffs) == sympy_charpoly_coeffs(rows)


@settings(max_examples=40)
@given(square(max_n=5))
def test_det_rank_inverse_match_sympy(rows):
    m = RingMatrix(rows)
    sm = sympy.Matrix(rows)
    assert det(m) == sm.det()
    assert rank(m) == sm.rank()
    if sm.det() != 0:
        inv = inverse(m)
        assert inv @ m.map(Fraction) == identity(m.n, Fraction(1), Fraction(0))


def test_charpoly_over_polynomial_entries():
    rng = random.Random(3)
    for n in range(1, 6):
        rows = [[UniPoly([rng.randint(-3, 3) for _ in range(3)]) for _ in range(n)] for _ in range(n)]
        got = charpoly(RingMatrix(rows))
        srows = [[sum(c * Q**k for k, c in enumerate(e.coeffs)) for e in r] for r in rows]
        want = sympy.Poly(sympy.Matrix(srows).charpoly(X).as_expr(), X).all_coeffs()
        for k, c in enumerate(reversed(want)):
            assert sympy.expand(c - sum(a * Q**i for i, a in enumerate(got.coeffs[k].coeffs))) == 0


def test_charpoly_of_empty_matrix_is_one():
    assert charpoly(RingMatrix([])) == XPoly([1])


@settings(max_examples=60)
@given(square(max_n=7, lo=-10**6, hi=10**6))
def test_modular_charpoly_is_reduction_of_exact(rows):
    p = DEFAULT_PRIME
    exact = charpoly(RingMatrix(rows))
    got = modular_charpoly([[x % p for x in r] for r in rows], p)
    assert list(got) == [c % p for c in exact.coeffs]


def test_modular_charpoly_small_prime_with_zero_pivots():
    rows = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    assert list(modular_charpoly(rows, 7)) == [c % 7 for c in charpoly(RingMatrix(rows)).coeffs]


def test_block_diag_and_first_difference():
    a = RingMatrix([[1, 2], [3, 4]])
    b = RingMatrix([[5]])
    m = block_diag(a, b)
    assert m.rows == ((1, 2, 0), (3, 4, 0), (0, 0, 5))
    assert charpoly(m) == charpoly(a) * charpoly(b)
    assert first_difference(a, a) is None
    assert first_difference(a, RingMatrix([[1, 2], [3, 5]])) == (1, 1)
    with pytest.raises(DimensionError):
        first_difference(a, b)


def test_non_square_rejected():
    with pytest.raises(DimensionError):
        RingMatrix([[1, 2]])
