"""Labeled simple graphs on at most 64 vertices.

Adjacency is stored as one integer bit mask per vertex.  Vertices are
``0..n-1``; the edge-list text format uses 1-based labels so fixtures can be
copied from drawings.
"""

from __future__ import annotations

import gzip
import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_VERTICES = 64
MAX_CANON_VERTICES = 32
MAX_ENUM_VERTICES = 7

INF = float("inf")


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    pass


class Graph6HeaderError(Graph6Error):
    pass


class Graph6LengthError(Graph6Error):
    pass


class Graph6RangeError(Graph6Error):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("need one adjacency mask per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {i} has a neighbor out of range")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            r = row
            while r:
                j = (r & -r).bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"edge {i}-{j} is not symmetric")
                r &= r - 1

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(r).count("1") for r in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    @property
    def num_edges(self) -> int:
        return sum(bin(r).count("1") for r in self.adj) // 2

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return Graph.from_edges(self.n, list(self.edges()) + list(edges))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        drop = {frozenset(e) for e in edges}
        return Graph.from_edges(self.n, [e for e in self.edges() if frozenset(e) not in drop])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``."""
        idx = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(idx[u], idx[v]) for u, v in self.edges() if u in idx and v in idx],
        )

    def disjoint_union(self, other: Graph) -> Graph:
        off = self.n
        return Graph.from_edges(
            self.n + other.n,
            self.edges() + [(u + off, v + off) for u, v in other.edges()],
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# -- distances -----------------------------------------------------------------


@dataclass(frozen=True)
class DistMatrix:
    """All-pairs shortest path lengths; ``INF`` across components."""

    n: int
    dist: tuple[tuple[float | int, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.dist[i][j]

    @property
    def diameter(self) -> int:
        """Largest finite distance (the maximum component diameter)."""
        return max((d for row in self.dist for d in row if d != INF), default=0)

    def levels(self) -> int:
        return self.diameter


def bfs_distances(g: Graph) -> DistMatrix:
    n = g.n
    rows = []
    for s in range(n):
        row: list[float | int] = [INF] * n
        row[s] = 0
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= ~seen
            for v in bits(nxt):
                row[v] = d
            seen |= nxt
            frontier = nxt
        rows.append(tuple(row))
    return DistMatrix(n, tuple(rows))


def diameter(g: Graph) -> int:
    return bfs_distances(g).diameter


def component_masks(g: Graph) -> list[int]:
    left = (1 << g.n) - 1
    comps = []
    while left:
        start = left & -left
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def is_connected_mask(g: Graph, mask: int) -> bool:
    """Whether the subgraph induced by the vertex set ``mask`` is connected."""
    if not mask:
        return True
    seen = frontier = mask & -mask
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


# -- graph6 -------------------------------------------------------------------


def _n_header(n: int) -> str:
    if n < 0 or n > MAX_VERTICES:
        raise Graph6RangeError(f"n={n} outside 0..{MAX_VERTICES}")
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    out = [_n_header(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise Graph6HeaderError(f"character outside the graph6 range in {text!r}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6RangeError("8-byte size header exceeds the vertex limit")
        if len(s) < 4:
            raise Graph6HeaderError("truncated size header")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        if n <= 62:
            raise Graph6HeaderError("long size header used for n <= 62")
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_VERTICES:
        raise Graph6RangeError(f"n={n} exceeds {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise Graph6LengthError(f"expected {need} data bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise Graph6LengthError(f"{len(body) - need} trailing bytes after the bit field")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    """Yield graphs from a graph6 file (optionally gzip-compressed)."""
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rt", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield parse_graph6(line)


# -- edge-list text -------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n; u v; u v; ..."`` with 1-based labels.

    Newlines may replace semicolons; ``#`` starts a comment.
    """
    lines = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        lines.extend(part.strip() for part in line.split(";"))
    items = [x for x in lines if x]
    if not items:
        raise GraphError("empty edge list")
    try:
        n = int(items[0])
        edges = []
        for item in items[1:]:
            u, v = (int(x) for x in item.replace("-", " ").replace(",", " ").split())
            edges.append((u - 1, v - 1))
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    return "; ".join([str(g.n)] + [f"{u + 1} {v + 1}" for u, v in g.edges()])


def load_graph(path: str | Path) -> Graph:
    """Read a single graph; graph6 for ``.g6``, edge list otherwise."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix in (".g6", ".graph6"):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphError(f"{path}: expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


# -- canonical labeling ---------------------------------------------------------


class CanonicalForm(NamedTuple):
    """Isomorphism-class key: vertex count and the canonical adjacency bits."""

    n: int
    code: int

    def graph(self) -> Graph:
        edges = []
        k = self.n * (self.n - 1) // 2 - 1
        for j in range(1, self.n):
            for i in range(j):
                if self.code >> k & 1:
                    edges.append((i, j))
                k -= 1
        return Graph.from_edges(self.n, edges)

    def graph6(self) -> str:
        return emit_graph6(self.graph())

    def __str__(self) -> str:
        return self.graph6()


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; splits are ordered by label-free signatures."""
    adj = g.adj
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(bin(adj[v] & m).count("1") for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _certificate(g: Graph, order: Sequence[int]) -> int:
    code = 0
    adj = g.adj
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _twin_reps(g: Graph, cell: list[int]) -> list[int]:
    """One vertex per class of twins (vertices swappable by a transposition)."""
    reps: list[int] = []
    for v in cell:
        for r in reps:
            bv, br = 1 << v, 1 << r
            if g.adj[v] & ~br == g.adj[r] & ~bv:
                break
        else:
            reps.append(v)
    return reps


def canonical_labeling(g: Graph) -> tuple[list[int], CanonicalForm]:
    """Return ``order`` (position -> vertex) and the canonical form.

    Degree partition, equitable refinement, then individualization of one
    vertex at a time with backtracking.  Twin vertices in the target cell are
    explored once, since swapping twins is an automorphism.
    """
    if g.n > MAX_CANON_VERTICES:
        raise GraphError(f"canonical form limited to n <= {MAX_CANON_VERTICES}, got {g.n}")
    degs = g.degrees()
    init: dict[int, list[int]] = {}
    for v in range(g.n):
        init.setdefault(degs[v], []).append(v)
    cells = _refine(g, [init[d] for d in sorted(init)])

    best_code = -1
    best_order: list[int] = list(range(g.n))

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            order = [c[0] for c in cells]
            code = _certificate(g, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        for v in _twin_reps(g, cell):
            rest = [u for u in cell if u != v]
            search(_refine(g, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(cells)
    return best_order, CanonicalForm(g.n, max(best_code, 0))


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[1]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A map ``perm`` with ``g.relabel(perm) == h``, or ``None``."""
    if g.n != h.n:
        return None
    og, cg = canonical_labeling(g)
    oh, ch = canonical_labeling(h)
    if cg != ch:
        return None
    perm = [0] * g.n
    for pos in range(g.n):
        perm[og[pos]] = oh[pos]
    return perm


# -- enumeration ---------------------------------------------------------------


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices.

    Every connected graph has a vertex whose removal leaves it connected, so
    all classes arise by attaching a new vertex to a connected graph on n-1
    vertices.  Output is sorted by canonical form.
    """
    if n > MAX_ENUM_VERTICES:
        raise GraphError(
            f"internal enumeration stops at n={MAX_ENUM_VERTICES}; "
            "supply a graph6 file (e.g. from nauty's geng -c) for larger n"
        )
    if n < 1:
        raise GraphError("n must be positive")
    level = {canonical_form(Graph.empty(1)): Graph.empty(1)}
    for m in range(2, n + 1):
        nxt: dict[CanonicalForm, Graph] = {}
        for base in level.values():
            for nb in range(1, 1 << base.n):
                adj = list(base.adj)
                for v in bits(nb):
                    adj[v] |= 1 << base.n
                adj.append(nb)
                h = Graph(m, tuple(adj))
                cf = canonical_form(h)
                if cf not in nxt:
                    nxt[cf] = cf.graph()
        level = nxt
    for cf in sorted(level):
        yield level[cf]


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


# -- coalescing ----------------------------------------------------------------


def coalesce(g: Graph, v: int, h: Graph, root: int) -> Graph:
    """Glue ``h`` onto ``g`` by identifying ``h``'s ``root`` with ``g``'s ``v``.

    Vertices of ``g`` keep their labels; the non-root vertices of ``h`` follow
    in their original order.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in g (n={g.n})")
    if not 0 <= root < h.n:
        raise GraphError(f"root {root} not in h (n={h.n})")
    label = {}
    nxt = g.n
    for u in range(h.n):
        if u == root:
            label[u] = v
        else:
            label[u] = nxt
            nxt += 1
    return Graph.from_edges(
        g.n + h.n - 1, g.edges() + [(label[a], label[b]) for a, b in h.edges()]
    )
