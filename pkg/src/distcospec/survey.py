"""Exhaustive cospectrality survey over all connected graphs of one order.

Pipeline: canonicalize and de-duplicate the input, fingerprint each graph by
characteristic polynomials of ``D_q`` modulo a 61-bit prime at a few seeded
random ``q``, bucket equal fingerprints, confirm inside buckets with exact
polynomials over Z[q] and Z[t_0..], then look for a switching configuration
explaining each confirmed pair.

Equal exact polynomials always give equal fingerprints, so bucketing never
loses a pair; a fingerprint collision only costs an extra exact comparison.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .algebra import DEFAULT_PRIME, MultiPoly, XPoly, modular_charpoly
from .distance import exp_distance_mod
from .graph import (
    CanonicalForm,
    Graph,
    GraphError,
    canonical_form,
    enumerate_connected,
    is_connected,
)
from .qanalysis import charpoly_f, charpoly_q
from .switching import BudgetExhausted, SearchRules, format_config, match_construction

log = logging.getLogger(__name__)

DEFAULT_SEED = 20240601
FINGERPRINT_POINTS = 3


class DuplicateGraphError(GraphError):
    pass


@dataclass
class PairReport:
    g1: CanonicalForm
    g2: CanonicalForm
    dq_all_q: bool
    df: bool
    construction: str  # "yes" | "no" | "budget"
    config: str = ""
    config_on: str = ""  # which graph of the pair carries the configuration
    configs_tried: int = 0


@dataclass
class SurveyResult:
    n: int
    graphs: int
    seed: int
    prime: int
    fingerprint_qs: list[int]
    budget_ms: float | None
    rules: SearchRules
    buckets: int
    collisions: int
    pairs: list[PairReport] = field(default_factory=list)

    @property
    def dq_pairs(self) -> int:
        return sum(p.dq_all_q for p in self.pairs)

    @property
    def df_pairs(self) -> int:
        return sum(p.df for p in self.pairs)

    @property
    def construction_pairs(self) -> int:
        return sum(p.construction == "yes" for p in self.pairs)

    @property
    def budget_exhausted(self) -> int:
        return sum(p.construction == "budget" for p in self.pairs)

    def summary(self) -> dict:
        def pct(a: int, b: int) -> int | None:
            return round(100 * a / b) if b else None

        return {
            "n": self.n,
            "graphs": self.graphs,
            "universe": "connected graphs, one per isomorphism class",
            "dq_semantics": "cospectral for all q (difference identically zero over Z[q])",
            "dq_pairs": self.dq_pairs,
            "df_pairs": self.df_pairs,
            "construction_pairs": self.construction_pairs,
            "construction_pct_of_dq": pct(self.construction_pairs, self.dq_pairs),
            "construction_pct_of_df": pct(self.construction_pairs, self.df_pairs),
            "seed": self.seed,
            "prime": self.prime,
            "fingerprint_qs": self.fingerprint_qs,
            "fingerprint_buckets": self.buckets,
            "fingerprint_collisions": self.collisions,
            "budget_ms": self.budget_ms,
            "budget_exhausted": self.budget_exhausted,
            "search_rules": asdict(self.rules),
        }


# -- stages (top level so worker processes can import them) -----------------------


def fingerprint(g: Graph, qs: Sequence[int], p: int = DEFAULT_PRIME) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(modular_charpoly(exp_distance_mod(g, q, p), p)) for q in qs)


def _fingerprint_job(args) -> tuple[tuple[int, ...], ...]:
    g, qs, p = args
    return fingerprint(g, qs, p)


def _f_key(g: Graph, nvars: int) -> XPoly:
    return charpoly_f(g).map_coeffs(
        lambda c: c.embed(nvars) if isinstance(c, MultiPoly) else MultiPoly.const(nvars, c)
    )


def _confirm_job(graphs: list[Graph]) -> list[tuple[int, int, bool]]:
    """Exactly cospectral pairs ``(i, j, df)`` inside one bucket (indices into ``graphs``)."""
    polys = [charpoly_q(g) for g in graphs]
    nvars = max(g.n for g in graphs)
    fkeys: dict[int, XPoly] = {}
    out = []
    for i, j in itertools.combinations(range(len(graphs)), 2):
        if polys[i] != polys[j]:
            continue
        for k in (i, j):
            if k not in fkeys:
                fkeys[k] = _f_key(graphs[k], nvars)
        out.append((i, j, fkeys[i] == fkeys[j]))
    return out


def _match_job(args) -> tuple[str, str, str, int]:
    g1, g2, rules, budget_ms = args
    try:
        m = match_construction(g1, g2, rules, budget_ms)
    except BudgetExhausted:
        return "budget", "", "", 0
    if m is None:
        return "no", "", "", 0
    return "yes", format_config(m.config), "g2" if m.reversed else "g1", m.candidates_tried


def _pmap(fn: Callable, items: list, workers: int, chunksize: int = 64) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=chunksize))


# -- driver --------------------------------------------------------------------------


def canonical_universe(graphs: Iterable[Graph], n: int) -> list[CanonicalForm]:
    """Sorted canonical forms; rejects wrong orders, disconnected graphs and repeats."""
    seen: dict[CanonicalForm, int] = {}
    for idx, g in enumerate(graphs):
        if g.n != n:
            raise GraphError(f"graph {idx + 1} has {g.n} vertices, expected {n}")
        if not is_connected(g):
            raise GraphError(f"graph {idx + 1} is disconnected; only connected graphs are surveyed")
        cf = canonical_form(g)
        if cf in seen:
            raise DuplicateGraphError(
                f"graphs {seen[cf] + 1} and {idx + 1} are isomorphic ({cf.graph6()})"
            )
        seen[cf] = idx
    return sorted(seen)


def run_survey(
    n: int,
    graphs: Iterable[Graph] | None = None,
    seed: int = DEFAULT_SEED,
    budget_ms: float | None = None,
    workers: int = 1,
    rules: SearchRules = SearchRules(),
    prime: int = DEFAULT_PRIME,
) -> SurveyResult:
    """Survey one order.  ``graphs=None`` enumerates internally (small ``n`` only)."""
    if graphs is None:
        graphs = enumerate_connected(n)
    forms = canonical_universe(graphs, n)
    reps = [cf.graph() for cf in forms]
    log.info("n=%d: %d graphs", n, len(reps))

    rng = random.Random(seed)
    qs = [rng.randrange(2, prime - 1) for _ in range(FINGERPRINT_POINTS)]
    fps = _pmap(_fingerprint_job, [(g, qs, prime) for g in reps], workers, chunksize=256)

    buckets: dict[tuple, list[int]] = {}
    for i, fp in enumerate(fps):
        buckets.setdefault(fp, []).append(i)
    multi = [b for b in buckets.values() if len(b) > 1]
    log.info("%d fingerprint buckets with more than one graph", len(multi))

    confirmed = _pmap(_confirm_job, [[reps[i] for i in b] for b in multi], workers, chunksize=8)
    found: list[tuple[int, int, bool]] = []
    collisions = 0
    for b, hits in zip(multi, confirmed):
        collisions += len(b) * (len(b) - 1) // 2 - len(hits)
        found += [(b[i], b[j], df) for i, j, df in hits]
    found.sort()

    jobs = [(reps[i], reps[j], rules, budget_ms) for i, j, _ in found]
    matches = _pmap(_match_job, jobs, workers, chunksize=16)
    pairs = [
        PairReport(forms[i], forms[j], True, df, verdict, cfg, on, tried)
        for (i, j, df), (verdict, cfg, on, tried) in zip(found, matches)
    ]
    return SurveyResult(
        n=n,
        graphs=len(reps),
        seed=seed,
        prime=prime,
        fingerprint_qs=qs,
        budget_ms=budget_ms,
        rules=rules,
        buckets=len(buckets),
        collisions=collisions,
        pairs=pairs,
    )


# -- report ----------------------------------------------------------------------------

CSV_FIELDS = ["g1", "g2", "dq_all_q", "df", "construction", "config_on", "config", "configs_tried"]


def pairs_csv(result: SurveyResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for p in result.pairs:
        w.writerow([
            p.g1.graph6(), p.g2.graph6(), int(p.dq_all_q), int(p.df),
            p.construction, p.config_on, p.config, p.configs_tried,
        ])
    return buf.getvalue()


def summary_json(result: SurveyResult) -> str:
    return json.dumps(result.summary(), indent=2, sort_keys=True) + "\n"


def emit_report(result: SurveyResult, out: str | Path, figures: bool = True) -> list[Path]:
    """Write ``summary.json`` and ``pairs.csv`` (and figures) into ``out``.

    Graphs in the CSV are canonical forms in graph6; configuration labels are
    1-based vertices of those canonical graphs.  Both text files are byte
    identical for identical inputs, seed and worker count.
    """
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in (("summary.json", summary_json(result)), ("pairs.csv", pairs_csv(result))):
        path = out / name
        path.write_text(text, encoding="utf-8")
        written.append(path)
    if figures:
        from .plotting import render_survey_figures

        written += render_survey_figures(result, out / "figures")
    return written
