"""Matplotlib renderings for survey reports and switched pairs."""

from __future__ import annotations

import math
from pathlib import Path
from typing import TYPE_CHECKING

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .graph import Graph  # noqa: E402
from .switching import SwitchConfig, parse_config  # noqa: E402

if TYPE_CHECKING:
    from .survey import SurveyResult

# fixed metadata keeps PNG bytes stable between runs
_PNG_META = {"Software": None}
_PART_COLORS = ["tab:orange", "tab:green", "tab:purple", "tab:brown"]

MAX_PAIR_FIGURES = 12


def circle_layout(n: int) -> list[tuple[float, float]]:
    return [
        (math.cos(math.pi / 2 - 2 * math.pi * k / n), math.sin(math.pi / 2 - 2 * math.pi * k / n))
        for k in range(n)
    ]


def draw_graph(ax, g: Graph, config: SwitchConfig | None = None, title: str = "") -> None:
    """Vertices on a circle, 1-based labels; part vertices colored by part.

    Edges from half-attached vertices into their part are drawn dashed.
    """
    pos = circle_layout(g.n)
    color = ["lightgray"] * g.n
    dashed: set[tuple[int, int]] = set()
    if config is not None:
        for i, part in enumerate(config.parts):
            for v in part:
                color[v] = _PART_COLORS[i % len(_PART_COLORS)]
        for comp in config.components:
            if comp.half is None:
                continue
            part = set(config.parts[comp.part])
            for b in comp.vertices:
                nb = {a for a in part if g.has_edge(a, b)}
                if nb and nb != part:
                    dashed |= {(min(a, b), max(a, b)) for a in nb}
    for u, v in g.edges():
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ax.plot([x1, x2], [y1, y2], color="black", lw=1,
                ls="--" if (u, v) in dashed else "-", zorder=1)
    for v, (x, y) in enumerate(pos):
        ax.scatter([x], [y], s=260, color=color[v], edgecolors="black", zorder=2)
        ax.text(x, y, str(v + 1), ha="center", va="center", fontsize=8, zorder=3)
    ax.set_title(title, fontsize=9)
    ax.set_aspect("equal")
    ax.axis("off")


def draw_pair(g1: Graph, g2: Graph, path: str | Path, config: SwitchConfig | None = None,
              titles: tuple[str, str] = ("G1", "G2")) -> Path:
    """Side-by-side drawing; ``config`` (if any) is drawn on the first graph."""
    fig, axes = plt.subplots(1, 2, figsize=(7, 3.6))
    draw_graph(axes[0], g1, config, titles[0])
    draw_graph(axes[1], g2, None, titles[1])
    fig.tight_layout()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)
    return path


def plot_counts(summary: dict, path: str | Path) -> Path:
    """Bar chart of the three pair counts of one survey."""
    labels = ["D_q (all q)", "D_f", "switching"]
    values = [summary["dq_pairs"], summary["df_pairs"], summary["construction_pairs"]]
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    bars = ax.bar(labels, values, color=["tab:blue", "tab:orange", "tab:green"])
    for bar, val in zip(bars, values):
        ax.text(bar.get_x() + bar.get_width() / 2, bar.get_height(), str(val),
                ha="center", va="bottom", fontsize=9)
    ax.set_ylabel("cospectral pairs")
    ax.set_title(f"n = {summary['n']} ({summary['graphs']} connected graphs)", fontsize=10)
    fig.tight_layout()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)
    return path


def render_survey_figures(result: SurveyResult, outdir: str | Path,
                          max_pairs: int = MAX_PAIR_FIGURES) -> list[Path]:
    """Count chart plus drawings of the first ``max_pairs`` switching-explained pairs."""
    outdir = Path(outdir)
    written = [plot_counts(result.summary(), outdir / "counts.png")]
    shown = 0
    for idx, p in enumerate(result.pairs, start=1):
        if p.construction != "yes" or shown >= max_pairs:
            continue
        a, b = p.g1.graph(), p.g2.graph()
        if p.config_on == "g2":
            a, b = b, a
        written.append(draw_pair(a, b, outdir / f"pair-{idx:05d}.png", parse_config(p.config),
                                 ("configured graph", "its mate")))
        shown += 1
    return written
