"""Distance-matrix switching: configurations, the switch, and its certificate.

A configuration picks vertex parts ``A^1..A^m`` (even size, inducing a
regular graph of degree at least half the part size, pairwise completely
joined or not joined at all) and splits the remaining vertices into connected
components, each attached to one part.  A component vertex sees none, all, or
a designated half of its part.  Switching sends every vertex that sees the
designated half to the complementary half.

The similarity matrix is the identity on non-part vertices and
``(2/m) J_m - I_m`` on each part of size ``m``.  Conjugating every distance
level ``M_k`` of the first graph by it must give the levels of the second;
that per-level check certifies cospectrality for every function of distance.
"""

from __future__ import annotations

import itertools
import re
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import RingMatrix, first_difference, identity
from .distance import level_decomposition
from .graph import (
    Graph,
    bits,
    canonical_form,
    coalesce,
    is_connected,
    is_connected_mask,
    mask_of,
)


class ConfigError(ValueError):
    """The configuration does not even describe a vertex partition."""


class InvalidConfigError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(v.message for v in violations))


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    part: int
    half: tuple[int, ...] | None = None


@dataclass(frozen=True)
class SwitchConfig:
    parts: tuple[tuple[int, ...], ...]
    components: tuple[Component, ...]
    extra_edges: tuple[tuple[int, int], ...] = ()

    def part_vertices(self) -> set[int]:
        return {v for p in self.parts for v in p}

    def b_vertices(self) -> set[int]:
        return {v for c in self.components for v in c.vertices}

    def complemented(self) -> SwitchConfig:
        """Same configuration with every half-set replaced by its complement."""
        comps = []
        for c in self.components:
            half = c.half
            if half is not None:
                half = tuple(sorted(set(self.parts[c.part]) - set(half)))
            comps.append(Component(c.vertices, c.part, half))
        return SwitchConfig(self.parts, tuple(comps), self.extra_edges)

    def __str__(self) -> str:
        return format_config(self)


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    soft: bool = False


# -- text format ----------------------------------------------------------------


def _fmt_set(vs: Iterable[int]) -> str:
    return "{" + ",".join(str(v + 1) for v in sorted(vs)) + "}"


def format_config(c: SwitchConfig) -> str:
    """Render with 1-based labels.

    One part:  ``A: {4,5,6,7}; B: {1}->half{4,5}, {2}; extra: {}``
    Several:   ``A1: {...}; A2: {...}; B1: ...; B2: ...; extra: {12,13}``
    """
    single = len(c.parts) == 1
    chunks = []
    for i, p in enumerate(c.parts):
        chunks.append(f"A{'' if single else i + 1}: {_fmt_set(p)}")
    for i in range(len(c.parts)):
        comps = [x for x in c.components if x.part == i]
        body = ", ".join(
            _fmt_set(x.vertices) + ("" if x.half is None else "->half" + _fmt_set(x.half))
            for x in comps
        )
        chunks.append(f"B{'' if single else i + 1}: {body}")
    extra = ", ".join(_fmt_set(e) for e in c.extra_edges) if c.extra_edges else "{}"
    chunks.append(f"extra: {extra}")
    return "; ".join(chunks)


_SET = re.compile(r"\{([^}]*)\}")


def _parse_set(body: str) -> tuple[int, ...]:
    body = body.strip()
    if not body:
        return ()
    try:
        return tuple(sorted(int(x) - 1 for x in body.split(",")))
    except ValueError:
        raise ConfigError(f"bad vertex set {{{body}}}") from None


def parse_config(text: str) -> SwitchConfig:
    parts: dict[int, tuple[int, ...]] = {}
    comps: list[Component] = []
    extra: list[tuple[int, int]] = []
    for chunk in text.strip().split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise ConfigError(f"missing ':' in {chunk!r}")
        key, body = (s.strip() for s in chunk.split(":", 1))
        m = re.fullmatch(r"([AB])(\d*)", key)
        if key == "extra":
            for s in _SET.findall(body):
                e = _parse_set(s)
                if len(e) == 2:
                    extra.append((e[0], e[1]))
                elif e:
                    raise ConfigError(f"extra edge needs two vertices: {{{s}}}")
            continue
        if not m:
            raise ConfigError(f"unknown key {key!r}")
        idx = int(m.group(2)) - 1 if m.group(2) else 0
        if m.group(1) == "A":
            sets = _SET.findall(body)
            if len(sets) != 1:
                raise ConfigError(f"part {key} needs exactly one vertex set")
            parts[idx] = _parse_set(sets[0])
        else:
            for item in re.finditer(r"\{([^}]*)\}(\s*->\s*half\s*\{([^}]*)\})?", body):
                verts = _parse_set(item.group(1))
                half = _parse_set(item.group(3)) if item.group(2) else None
                comps.append(Component(verts, idx, half))
    if sorted(parts) != list(range(len(parts))):
        raise ConfigError("parts must be numbered consecutively from 1")
    for c in comps:
        if c.part >= len(parts):
            raise ConfigError(f"component {c.vertices} refers to a missing part")
    return SwitchConfig(tuple(parts[i] for i in range(len(parts))), tuple(comps), tuple(extra))


# -- validation -----------------------------------------------------------------


def _check_partition(g: Graph, c: SwitchConfig) -> None:
    seen: list[int] = [v for p in c.parts for v in p] + [v for x in c.components for v in x.vertices]
    if sorted(seen) != list(range(g.n)):
        raise ConfigError("parts and components must partition the vertex set exactly once")
    for x in c.components:
        if x.half is not None and not set(x.half) <= set(c.parts[x.part]):
            raise ConfigError(f"half-set {x.half} is not inside its part")


def validate_config(g: Graph, c: SwitchConfig) -> list[Violation]:
    """Every violated condition; soft ones are reported but do not block a switch."""
    _check_partition(g, c)
    out: list[Violation] = []
    pmasks = [mask_of(p) for p in c.parts]
    for i, (p, pm) in enumerate(zip(c.parts, pmasks)):
        size = len(p)
        if size % 2:
            out.append(Violation("odd-part", f"part {i + 1}: part size not even ({size})"))
        degs = {bin(g.adj[v] & pm).count("1") for v in p}
        if len(degs) > 1:
            out.append(Violation("irregular-part", f"part {i + 1}: induced subgraph not regular"))
        elif degs and 2 * degs.pop() < size:
            out.append(Violation("low-degree", f"part {i + 1}: induced degree below half the part size"))
    for i, j in itertools.combinations(range(len(c.parts)), 2):
        kinds = {g.adj[v] & pmasks[j] for v in c.parts[i]}
        if not kinds <= {0, pmasks[j]} or len(kinds) > 1:
            out.append(Violation("partial-join", f"parts {i + 1} and {j + 1}: neither fully joined nor separated"))

    comp_of = {}
    for idx, x in enumerate(c.components):
        for v in x.vertices:
            comp_of[v] = idx
    for idx, x in enumerate(c.components):
        xm = mask_of(x.vertices)
        if not is_connected_mask(g, xm):
            out.append(Violation("component-disconnected", f"component {_fmt_set(x.vertices)} is not connected"))
        pm = pmasks[x.part]
        psize = len(c.parts[x.part])
        half = mask_of(x.half) if x.half is not None else None
        if half is not None and 2 * len(x.half) != psize:
            out.append(Violation("half-size", f"component {_fmt_set(x.vertices)}: half-set has wrong size"))
        for b in x.vertices:
            nb = g.adj[b] & pm
            if nb in (0, pm):
                pass
            elif 2 * bin(nb).count("1") != psize:
                out.append(Violation("not-none-all-half", f"vertex {b + 1}: not none/all/half of part {x.part + 1}"))
            elif half is None or nb != half:
                out.append(Violation("wrong-half", f"vertex {b + 1}: sees a half of part {x.part + 1} other than its component's half-set"))
            for k, om in enumerate(pmasks):
                if k != x.part and g.adj[b] & om:
                    out.append(Violation("foreign-part", f"vertex {b + 1}: adjacent to part {k + 1} outside its own part"))

    declared = {frozenset(e) for e in c.extra_edges}
    for u, v in g.edges():
        if u in comp_of and v in comp_of and comp_of[u] != comp_of[v]:
            cu, cv = c.components[comp_of[u]], c.components[comp_of[v]]
            e = frozenset((u, v))
            if e not in declared:
                out.append(Violation("undeclared-edge", f"edge {u + 1}-{v + 1} joins two components but is not listed as extra"))
            pm = pmasks[cu.part]
            if cu.part != cv.part or not (g.adj[u] & pm and g.adj[v] & pm):
                out.append(Violation("extra-edge", f"extra edge {u + 1}-{v + 1}: endpoints must both see the same part"))
    for e in declared:
        u, v = tuple(e)
        if not g.has_edge(u, v):
            out.append(Violation("missing-extra", f"listed extra edge {u + 1}-{v + 1} is not in the graph"))

    if not is_connected(g):
        out.append(Violation("graph-disconnected", "graph is not connected"))
    if not is_connected_mask(g, mask_of(c.part_vertices())):
        out.append(Violation("parts-disconnected", "union of the parts is not connected", soft=True))
    return out


def hard_violations(g: Graph, c: SwitchConfig) -> list[Violation]:
    return [v for v in validate_config(g, c) if not v.soft]


# -- switching ------------------------------------------------------------------


def _switch(g: Graph, c: SwitchConfig) -> Graph:
    adj = list(g.adj)
    for x in c.components:
        if x.half is None:
            continue
        pm = mask_of(c.parts[x.part])
        half = mask_of(x.half)
        other = pm & ~half
        for b in x.vertices:
            if g.adj[b] & pm == half:
                adj[b] = adj[b] & ~half | other
                for a in bits(half):
                    adj[a] &= ~(1 << b)
                for a in bits(other):
                    adj[a] |= 1 << b
    return Graph(g.n, tuple(adj))


def apply_switch(g: Graph, c: SwitchConfig) -> Graph:
    """Move every half-attached vertex to the complementary half of its part."""
    bad = hard_violations(g, c)
    if bad:
        raise InvalidConfigError(bad)
    h = _switch(g, c)
    if not is_connected(h):
        raise InvalidConfigError([Violation("result-disconnected", "switched graph is not connected")])
    return h


# -- similarity matrix and certificate -------------------------------------------


def s_hat(m: int) -> RingMatrix:
    """``(2/m) J_m - I_m`` over the rationals."""
    f = Fraction(2, m)
    return RingMatrix([f - (1 if i == j else 0) for j in range(m)] for i in range(m))


@dataclass(frozen=True)
class SimilarityMatrix:
    """Block matrix: identity on vertices outside ``parts``, ``s_hat`` on each block.

    ``parts`` are usually the configuration's parts; coalescing adds blocks.
    """

    n: int
    parts: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> list[int]:
        """Block row order: all non-part vertices, then each part in turn."""
        inpart = {v for p in self.parts for v in p}
        return [v for v in range(self.n) if v not in inpart] + [v for p in self.parts for v in p]

    def block_matrix(self) -> RingMatrix:
        """The matrix in block order (identity first, then the parts)."""
        pos = {v: i for i, v in enumerate(self.order)}
        m = self.vertex_matrix()
        order = sorted(range(self.n), key=lambda v: pos[v])
        return m.permute(order)

    def vertex_matrix(self) -> RingMatrix:
        """The matrix indexed by the graph's own vertex labels."""
        rows = [[Fraction(int(i == j)) for j in range(self.n)] for i in range(self.n)]
        for p in self.parts:
            f = Fraction(2, len(p))
            for a in p:
                for b in p:
                    rows[a][b] = f - (1 if a == b else 0)
        return RingMatrix(rows)


def build_similarity(c: SwitchConfig, n: int | None = None) -> SimilarityMatrix:
    if n is None:
        n = len(c.part_vertices()) + len(c.b_vertices())
    return SimilarityMatrix(n, c.parts)


@dataclass
class LevelCheck:
    level: int
    ok: bool
    first_difference: tuple[int, int] | None = None


@dataclass
class Certificate:
    ok: bool
    levels: list[LevelCheck] = field(default_factory=list)
    reason: str = ""

    @property
    def failed_level(self) -> int | None:
        return next((lv.level for lv in self.levels if not lv.ok), None)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "reason": self.reason,
            "levels": [
                {
                    "level": lv.level,
                    "ok": lv.ok,
                    "first_difference": None if lv.first_difference is None
                    else [lv.first_difference[0] + 1, lv.first_difference[1] + 1],
                }
                for lv in self.levels
            ],
        }


def conjugate_levels(
    s: RingMatrix, g1: Graph, g2: Graph, stop_at_first: bool = False
) -> list[LevelCheck]:
    """Compare ``S M_k(g1) S`` with ``M_k(g2)`` for every distance level."""
    l1, l2 = level_decomposition(g1), level_decomposition(g2)
    checks = []
    for k in range(max(l1.d, l2.d) + 1):
        lhs = s @ l1.matrix(k) @ s
        diff = first_difference(lhs, l2.matrix(k))
        checks.append(LevelCheck(k, diff is None, diff))
        if diff is not None and stop_at_first:
            break
    if any(l1.infinite) or any(l2.infinite):
        lhs = s @ l1.matrix(None) @ s
        diff = first_difference(lhs, l2.matrix(None))
        checks.append(LevelCheck(-1, diff is None, diff))
    return checks


def certify_pair(g1: Graph, g2: Graph, c: SwitchConfig | SimilarityMatrix) -> Certificate:
    """Check ``S M_k(g1) S = M_k(g2)`` exactly for every distance level ``k``.

    ``S`` is an involution, so this is the similarity ``S D_f(g1) S^-1 =
    D_f(g2)`` for every function ``f`` at once.  ``c`` is a configuration
    or an explicit block similarity matrix.
    """
    if g1.n != g2.n:
        return Certificate(False, reason=f"order mismatch: {g1.n} vs {g2.n}")
    sim = c if isinstance(c, SimilarityMatrix) else build_similarity(c, g1.n)
    if sim.n != g1.n:
        return Certificate(False, reason=f"similarity has order {sim.n}, graphs have {g1.n}")
    checks = conjugate_levels(sim.vertex_matrix(), g1, g2, stop_at_first=True)
    bad = next((lv for lv in checks if not lv.ok), None)
    if bad is None:
        return Certificate(True, checks)
    i, j = bad.first_difference
    return Certificate(False, checks, f"level {bad.level} differs first at ({i + 1},{j + 1})")


# -- construction matching --------------------------------------------------------


@dataclass(frozen=True)
class SearchRules:
    """Knobs for the configuration search.

    The defaults implement the switching conditions as stated, with extra
    edges allowed between components of the same part whose endpoints both
    see that part.
    """

    max_parts: int = 2
    require_parts_connected: bool = True
    allow_extra_edges: bool = True
    allow_foreign_parts: bool = False
    extra_needs_common_neighbor: bool = False


@dataclass
class ConstructionMatch:
    config: SwitchConfig
    reversed: bool  # True when the configuration lives on the second graph
    certificate: Certificate
    candidates_tried: int = 0
    elapsed_ms: float = 0.0


def candidate_parts(g: Graph, max_size: int | None = None) -> list[int]:
    """Vertex sets of even size inducing a k-regular graph with 2k >= size."""
    n = g.n
    top = n - 1 if max_size is None else min(max_size, n - 1)
    out = []
    for size in range(2, top + 1, 2):
        for combo in itertools.combinations(range(n), size):
            m = mask_of(combo)
            degs = {bin(g.adj[v] & m).count("1") for v in combo}
            if len(degs) == 1 and 2 * degs.pop() >= size:
                out.append(m)
    return out


def derive_config(g: Graph, part_masks: Sequence[int], rules: SearchRules = SearchRules()) -> SwitchConfig | None:
    """The finest configuration with the given parts, or ``None`` if none exists.

    Components are the connected pieces of the non-part vertices after
    cutting every edge allowed to be an extra edge.
    """
    pm = list(part_masks)
    allpart = 0
    for m in pm:
        allpart |= m
    rest = [v for v in range(g.n) if not allpart >> v & 1]
    if not rest:
        return None
    touch: dict[int, int | None] = {}
    for b in rest:
        t = None
        for i, m in enumerate(pm):
            nb = g.adj[b] & m
            if not nb:
                continue
            size = bin(m).count("1")
            if nb != m and 2 * bin(nb).count("1") != size:
                return None
            if t is None:
                t = i
            elif not rules.allow_foreign_parts:
                return None
        touch[b] = t
    restmask = mask_of(rest)
    # edges that must stay inside a component
    keep = {b: 0 for b in rest}
    extras = []
    for b in rest:
        for w in bits(g.adj[b] & restmask):
            if w < b:
                continue
            tb, tw = touch[b], touch[w]
            cut = (
                rules.allow_extra_edges
                and tb is not None
                and tb == tw
                and not rules.allow_foreign_parts
            ) or (
                rules.allow_extra_edges
                and rules.allow_foreign_parts
                and any(g.adj[b] & m and g.adj[w] & m for m in pm)
            )
            if cut and rules.extra_needs_common_neighbor:
                cut = any(g.adj[b] & g.adj[w] & m for m in pm)
            if cut:
                extras.append((b, w))
            else:
                keep[b] |= 1 << w
                keep[w] |= 1 << b
    comps = []
    left = restmask
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= keep[v]
            frontier = nxt & ~seen
            seen |= frontier
        left &= ~seen
        comps.append(seen)
    components = []
    comp_index = {}
    for cm in comps:
        verts = bits(cm)
        owners = {touch[b] for b in verts} - {None}
        if len(owners) > 1:
            if not rules.allow_foreign_parts:
                return None
        halves = set()
        for b in verts:
            for i, m in enumerate(pm):
                nb = g.adj[b] & m
                if nb and nb != m:
                    halves.add((i, nb))
        if len({i for i, _ in halves}) > 1 or len(halves) > 1:
            return None
        if halves:
            part, hm = halves.pop()
            half = tuple(bits(hm))
        else:
            part = min(owners) if owners else 0
            half = None
        for b in verts:
            comp_index[b] = len(components)
        components.append(Component(tuple(verts), part, half))
    extras = [e for e in extras if comp_index[e[0]] != comp_index[e[1]]]
    parts = tuple(tuple(bits(m)) for m in pm)
    return SwitchConfig(parts, tuple(components), tuple(sorted(extras)))


def _part_collections(g: Graph, rules: SearchRules) -> Iterable[tuple[int, ...]]:
    cands = candidate_parts(g)
    for k in range(1, rules.max_parts + 1):
        for combo in itertools.combinations(cands, k):
            ok = True
            for a, b in itertools.combinations(combo, 2):
                if a & b:
                    ok = False
                    break
                kinds = {g.adj[v] & b for v in bits(a)}
                if kinds == {b}:
                    continue
                if kinds == {0} and not rules.require_parts_connected:
                    continue
                ok = False
                break
            if ok and rules.require_parts_connected and k > 2:
                allm = 0
                for m in combo:
                    allm |= m
                ok = is_connected_mask(g, allm)
            if ok:
                yield combo


def switching_configs(g: Graph, rules: SearchRules = SearchRules()) -> Iterable[SwitchConfig]:
    """All derived configurations of ``g`` that switch at least one vertex."""
    for combo in _part_collections(g, rules):
        c = derive_config(g, combo, rules)
        if c is None or all(x.half is None for x in c.components):
            continue
        yield c


class BudgetExhausted(RuntimeError):
    pass


def match_construction(
    g1: Graph,
    g2: Graph,
    rules: SearchRules = SearchRules(),
    budget_ms: float | None = None,
) -> ConstructionMatch | None:
    """Find a switching configuration turning one graph into (a copy of) the other.

    Tries configurations on ``g1`` first, then on ``g2``.  A hit must produce
    a graph isomorphic to the target and pass :func:`certify_pair`.
    Raises :class:`BudgetExhausted` if ``budget_ms`` runs out first.
    """
    start = time.perf_counter()
    tried = 0
    for rev, (src, dst) in enumerate(((g1, g2), (g2, g1))):
        target = canonical_form(dst)
        tdeg = sorted(dst.degrees())
        for c in switching_configs(src, rules):
            tried += 1
            if budget_ms is not None and (time.perf_counter() - start) * 1000 > budget_ms:
                raise BudgetExhausted(f"no decision after {tried} configurations")
            h = _switch(src, c)
            if sorted(h.degrees()) != tdeg or not is_connected(h):
                continue
            if canonical_form(h) != target:
                continue
            cert = certify_pair(src, h, c)
            if cert.ok:
                return ConstructionMatch(
                    c, bool(rev), cert, tried, (time.perf_counter() - start) * 1000
                )
    return None


# -- coalescing -------------------------------------------------------------------


@dataclass
class CoalescedPair:
    h1: Graph
    h2: Graph
    similarity: SimilarityMatrix
    certificate: Certificate


def coalesce_on_part(
    g1: Graph, g2: Graph, c: SwitchConfig, part: int, h: Graph, root: int
) -> CoalescedPair:
    """Glue a copy of ``h`` (at ``root``) onto every vertex of part ``part`` in both graphs.

    For each non-root vertex ``w`` of ``h`` the copies of ``w`` form a new
    block shaped like the part, and the similarity matrix gains an ``s_hat``
    block on it.  The returned certificate re-checks every distance level.
    """
    if not 0 <= part < len(c.parts):
        raise ConfigError(f"no part {part + 1}")
    if not is_connected(h):
        raise ValueError("glued graph must be connected")
    if not 0 <= root < h.n:
        raise ValueError(f"root {root + 1} is not a vertex of the glued graph")
    h1, h2 = g1, g2
    copies: list[list[int]] = [[] for _ in range(h.n - 1)]
    for v in c.parts[part]:
        base = h1.n
        h1 = coalesce(h1, v, h, root)
        h2 = coalesce(h2, v, h, root)
        for k in range(h.n - 1):
            copies[k].append(base + k)
    blocks = c.parts + tuple(tuple(b) for b in copies)
    sim = SimilarityMatrix(h1.n, blocks)
    return CoalescedPair(h1, h2, sim, certify_pair(h1, h2, sim))


def random_valid_config(rng, rules: SearchRules = SearchRules()) -> tuple[Graph, SwitchConfig]:
    """Random graph with a valid configuration, for fuzzing the switching construction.

    One or two parts of size 2, 4 or 6 whose induced graphs are random regular
    graphs of degree at least half; components are small random trees, each
    vertex attached to its part by none, all, or the component's half-set.
    """
    while True:
        m = rng.choice([1, 2]) if rules.max_parts >= 2 else 1
        sizes = [rng.choice([2, 4, 6]) for _ in range(m)]
        edges: list[tuple[int, int]] = []
        parts = []
        off = 0
        for s in sizes:
            verts = list(range(off, off + s))
            k = rng.randint(s // 2, s - 1)
            edges += [(verts[a], verts[b]) for a, b in _random_regular(s, k, rng)]
            parts.append(tuple(verts))
            off += s
        if m == 2:
            for a in parts[0]:
                for b in parts[1]:
                    edges.append((a, b))
        comps = []
        ncomp = rng.randint(1, 3)
        for _ in range(ncomp):
            pi = rng.randrange(m)
            size = rng.randint(1, 3)
            verts = list(range(off, off + size))
            off += size
            for i in range(1, size):
                edges.append((verts[i], verts[rng.randrange(i)]))
            part = parts[pi]
            half = tuple(sorted(rng.sample(part, len(part) // 2)))
            kinds = [rng.choice(["none", "all", "half"]) for _ in verts]
            if "half" not in kinds:
                kinds[rng.randrange(size)] = "half"
            for b, kind in zip(verts, kinds):
                targets = () if kind == "none" else part if kind == "all" else half
                edges += [(b, a) for a in targets]
            comps.append(Component(tuple(verts), pi, half))
        # occasional extra edge between half/all-attached vertices of one part
        extras = []
        if rules.allow_extra_edges and len(comps) > 1 and rng.random() < 0.5:
            a, b = rng.sample(range(len(comps)), 2)
            ca, cb = comps[a], comps[b]
            if ca.part == cb.part:
                g0 = Graph.from_edges(off, edges)
                pm = mask_of(parts[ca.part])
                ua = [v for v in ca.vertices if g0.adj[v] & pm]
                ub = [v for v in cb.vertices if g0.adj[v] & pm]
                if ua and ub:
                    e = (rng.choice(ua), rng.choice(ub))
                    edges.append(e)
                    extras.append(tuple(sorted(e)))
        g = Graph.from_edges(off, edges)
        c = SwitchConfig(tuple(parts), tuple(comps), tuple(extras))
        if not hard_violations(g, c):
            return g, c


def _random_regular(n: int, k: int, rng) -> list[tuple[int, int]]:
    """Edges of a random k-regular graph on n vertices (n even when k is odd)."""
    if k == n - 1:
        return list(itertools.combinations(range(n), 2))
    while True:
        stubs = [v for v in range(n) for _ in range(k)]
        rng.shuffle(stubs)
        pairs = set()
        ok = True
        for a, b in zip(stubs[::2], stubs[1::2]):
            e = (min(a, b), max(a, b))
            if a == b or e in pairs:
                ok = False
                break
            pairs.add(e)
        if ok:
            return sorted(pairs)
