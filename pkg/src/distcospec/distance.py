"""Distance, exponential-distance and generalized-distance matrices.

Between different components the exponential distance matrix uses
``q^inf = 0`` (the ``0 < q < 1`` limit), so a disjoint union has a block
diagonal matrix.  The generalized matrix has no such convention and is only
built for connected graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly, RingMatrix, UniPoly
from .graph import INF, Graph, GraphError, bfs_distances, is_connected


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class LevelDecomposition:
    """Indicator matrices ``M_k[i][j] = 1`` iff ``dist(i, j) = k``.

    Rows are stored as bit masks: ``levels[k][i]`` has bit ``j`` set when
    ``dist(i, j) = k``.  ``infinite`` marks pairs in different components.
    """

    n: int
    levels: tuple[tuple[int, ...], ...]
    infinite: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.levels) - 1

    def matrix(self, k: int | None) -> RingMatrix:
        """0/1 matrix for level ``k`` (``None`` for the cross-component level)."""
        rows = self.infinite if k is None else (
            self.levels[k] if k < len(self.levels) else (0,) * self.n
        )
        return RingMatrix([r >> j & 1 for j in range(self.n)] for r in rows)

    def level_rows(self, k: int) -> tuple[int, ...]:
        return self.levels[k] if k < len(self.levels) else (0,) * self.n


def level_decomposition(g: Graph) -> LevelDecomposition:
    dm = bfs_distances(g)
    d = dm.diameter
    levels = [[0] * g.n for _ in range(d + 1)]
    inf = [0] * g.n
    for i, row in enumerate(dm.dist):
        for j, x in enumerate(row):
            if x == INF:
                inf[i] |= 1 << j
            else:
                levels[x][i] |= 1 << j
    return LevelDecomposition(g.n, tuple(tuple(r) for r in levels), tuple(inf))


def distance_matrix(g: Graph) -> RingMatrix:
    """Classical distance matrix; requires a connected graph."""
    if not is_connected(g):
        raise DisconnectedGraphError("distance matrix of a disconnected graph has infinite entries")
    return RingMatrix(bfs_distances(g).dist)


def exp_distance_symbolic(g: Graph) -> RingMatrix:
    """Entry ``(i, j)`` is ``q^dist(i, j)`` in Z[q]; zero across components."""
    mono = {}
    rows = []
    for row in bfs_distances(g).dist:
        out = []
        for x in row:
            if x == INF:
                out.append(UniPoly())
            else:
                if x not in mono:
                    mono[x] = UniPoly.monomial(x)
                out.append(mono[x])
        rows.append(out)
    return RingMatrix(rows)


def exp_distance_at(g: Graph, q) -> RingMatrix:
    """``D_q`` at a rational ``q`` (``0^0 = 1`` on the diagonal)."""
    q = Fraction(q)
    return RingMatrix(
        [Fraction(0) if x == INF else q**x for x in row] for row in bfs_distances(g).dist
    )


def exp_distance_mod(g: Graph, q: int, p: int) -> list[list[int]]:
    """``D_q`` with entries reduced modulo the prime ``p``."""
    dm = bfs_distances(g)
    powers = [1]
    for _ in range(dm.diameter):
        powers.append(powers[-1] * q % p)
    return [[0 if x == INF else powers[x] for x in row] for row in dm.dist]


def generalized_distance_symbolic(g: Graph, nvars: int | None = None) -> RingMatrix:
    """Entry ``(i, j)`` is the variable ``t_{dist(i, j)}``.

    ``nvars`` embeds the matrix into ``Z[t_0..t_{nvars-1}]`` so two graphs of
    different diameter can be compared in one ring.
    """
    if not is_connected(g):
        raise DisconnectedGraphError(
            "generalized distance matrix needs a connected graph (no f(inf) convention); "
            "use the exponential distance matrix, which sets q^inf = 0"
        )
    dm = bfs_distances(g)
    k = dm.diameter + 1 if nvars is None else nvars
    if k < dm.diameter + 1:
        raise ValueError(f"need at least {dm.diameter + 1} variables, got {k}")
    var = [MultiPoly.var(k, i) for i in range(dm.diameter + 1)]
    return RingMatrix([var[x] for x in row] for row in dm.dist)
