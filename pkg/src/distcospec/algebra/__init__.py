"""Exact arithmetic: integer polynomials, ring matrices, characteristic polynomials."""

from .matrix import (
    DimensionError,
    RingMatrix,
    XPoly,
    all_ones,
    block_diag,
    charpoly,
    det,
    first_difference,
    identity,
    inverse,
    mat_equal,
    mat_mul,
    rank,
)
from .modular import DEFAULT_PRIME, modular_charpoly
from .poly import ALL, MultiPoly, UniPoly, poly_gcd, rational_roots
from .polytext import (
    PolySyntaxError,
    format_multipoly,
    format_unipoly,
    format_xpoly,
    parse_unipoly,
    parse_xpoly,
)

__all__ = [
    "ALL",
    "DEFAULT_PRIME",
    "DimensionError",
    "MultiPoly",
    "PolySyntaxError",
    "RingMatrix",
    "UniPoly",
    "XPoly",
    "all_ones",
    "block_diag",
    "charpoly",
    "det",
    "first_difference",
    "format_multipoly",
    "format_unipoly",
    "format_xpoly",
    "identity",
    "inverse",
    "mat_equal",
    "mat_mul",
    "modular_charpoly",
    "parse_unipoly",
    "parse_xpoly",
    "poly_gcd",
    "rank",
    "rational_roots",
]
